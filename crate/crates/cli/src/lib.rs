//! Command-line front end: JSON problems in, exact rationals out.
//!
//! Exit codes: 0 success, 2 validation failure (a mathematical
//! precondition such as polarization, regularity or a degree condition),
//! 3 parse failure (malformed JSON, polynomial syntax, unknown variable,
//! missing field), 1 for I/O and internal errors. Command-line usage errors
//! are reported by the argument parser with its own code 2.

mod commands;
mod input;

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

pub use commands::{decimal, evaluate, Options};
pub use input::{parse_document, Problem};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(jkres::Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Core(e) if e.is_parse_error() => 3,
            CliError::Core(jkres::Error::Internal(_)) => 1,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl From<jkres::Error> for CliError {
    fn from(e: jkres::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Jk,
    Oracle,
    Ideal,
    Groebner,
    NormalForm,
    Groth,
}

#[derive(Debug, Parser)]
#[command(name = "jkres", version, about = "Exact Jeffrey-Kirwan and Grothendieck residues")]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// Also print an N-digit decimal approximation of residue values.
    #[arg(long, global = true, value_name = "N")]
    decimal: Option<usize>,

    /// Evaluate the problems of a batch file on K threads.
    #[arg(long, global = true, value_name = "K", default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Problem file (JSON object or array), `-` for standard input.
    input: String,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Jeffrey-Kirwan residue through the Groebner basis pipeline.
    Jk {
        #[command(flatten)]
        input: InputArg,
        /// Print the chosen basis, ideal basis, normal forms and Gram factor.
        #[arg(long)]
        report: bool,
    },
    /// Jeffrey-Kirwan residue by partial fractions.
    Oracle {
        #[command(flatten)]
        input: InputArg,
        /// Print the decomposition.
        #[arg(long)]
        terms: bool,
    },
    /// Half-space generators and reduced basis of the cone-complement ideal.
    Ideal {
        #[command(flatten)]
        input: InputArg,
    },
    /// Reduced Groebner basis of `generators`.
    Groebner {
        #[command(flatten)]
        input: InputArg,
    },
    /// Normal form of `polynomial` modulo `generators`.
    NormalForm {
        #[command(flatten)]
        input: InputArg,
    },
    /// Grothendieck residue of `numerator` over `denominators`.
    Groth {
        #[command(flatten)]
        input: InputArg,
        /// Use the affine algorithm even for homogeneous input.
        #[arg(long)]
        affine: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut opts = Options {
        decimal: cli.decimal,
        ..Options::default()
    };
    let (command, path) = match cli.command {
        Sub::Jk { input, report } => {
            opts.report = report;
            (Command::Jk, input.input)
        }
        Sub::Oracle { input, terms } => {
            opts.terms = terms;
            (Command::Oracle, input.input)
        }
        Sub::Ideal { input } => (Command::Ideal, input.input),
        Sub::Groebner { input } => (Command::Groebner, input.input),
        Sub::NormalForm { input } => (Command::NormalForm, input.input),
        Sub::Groth { input, affine } => {
            opts.affine = affine;
            (Command::Groth, input.input)
        }
    };
    let text = match read_input(&path) {
        Ok(t) => t,
        Err(e) => return failure(&e),
    };
    run_text(command, &text, &opts, cli.jobs)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Evaluates a problem document. A batch prints one `# problem k` block per
/// entry in input order; the exit code is that of the first failure.
pub fn run_text(command: Command, text: &str, opts: &Options, jobs: usize) -> Outcome {
    let (problems, is_batch) = match parse_document(text) {
        Ok(p) => p,
        Err(e) => return failure(&e),
    };
    if !is_batch {
        return match evaluate(command, &problems[0], opts) {
            Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
            Err(e) => failure(&e),
        };
    }
    let results: Vec<Result<String, CliError>> = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(|| problems.par_iter().map(|p| evaluate(command, p, opts)).collect()),
        Err(e) => return failure(&CliError::Io(format!("starting worker threads: {e}"))),
    };
    let mut out = Outcome { code: 0, stdout: String::new(), stderr: String::new() };
    for (k, result) in results.into_iter().enumerate() {
        out.stdout.push_str(&format!("# problem {}\n", k + 1));
        match result {
            Ok(text) => out.stdout.push_str(&text),
            Err(e) => {
                out.stdout.push_str("error\n");
                out.stderr.push_str(&format!("problem {}: error: {e}\n", k + 1));
                if out.code == 0 {
                    out.code = e.exit_code();
                }
            }
        }
    }
    out
}
