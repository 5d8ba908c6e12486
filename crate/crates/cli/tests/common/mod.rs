#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use jkres::Polynomial;
use num_traits::Signed;
use serde_json::Value;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    pub input: String,
    pub expected: String,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn cases() -> Vec<Case> {
    let dir = golden_dir();
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| {
            let path = e.unwrap().path();
            (path.extension()? == "json").then(|| path.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let read = |ext: &str| std::fs::read_to_string(dir.join(format!("{name}.{ext}"))).unwrap();
            Case {
                args: read("args").split_whitespace().map(str::to_owned).collect(),
                input: read("json"),
                expected: read("out"),
                name,
            }
        })
        .collect()
}

/// Runs the real binary with `input` on standard input.
pub fn run_binary(args: &[String], input: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jkres"))
        .args(args)
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Same terms listed lowest first.
fn reversed_terms(text: &str) -> String {
    let p = Polynomial::parse_infer(text).unwrap();
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in p.terms().rev() {
        let negative = c.is_negative();
        out.push_str(if negative { " - " } else { " + " });
        out.push_str(&format!("{}*{}", c.abs(), m));
    }
    out.trim_start_matches(" + ").trim_start().to_string()
}

fn reorder_problem(problem: &mut Value) {
    let obj = problem.as_object_mut().unwrap();
    for key in ["vectors", "generators"] {
        if let Some(Value::Array(items)) = obj.get_mut(key) {
            items.reverse();
        }
    }
    // the residue symbol is alternating in the denominators, so only
    // their terms are reordered
    for key in ["polynomial", "numerator"] {
        if let Some(Value::String(s)) = obj.get_mut(key) {
            *s = reversed_terms(s);
        }
    }
    for key in ["generators", "denominators"] {
        if let Some(Value::Array(items)) = obj.get_mut(key) {
            for item in items {
                if let Value::String(s) = item {
                    *s = reversed_terms(s);
                }
            }
        }
    }
}

/// The same problems with vectors and generators listed in another order.
pub fn reordered(input: &str) -> String {
    let mut value: Value = serde_json::from_str(input).unwrap();
    match &mut value {
        Value::Array(items) => items.iter_mut().for_each(reorder_problem),
        other => reorder_problem(other),
    }
    serde_json::to_string_pretty(&value).unwrap()
}

/// Checks one case; returns a description of the first mismatch.
pub fn check_case(case: &Case) -> Result<(), String> {
    let first = run_binary(&case.args, &case.input);
    let second = run_binary(&case.args, &case.input);
    let other = run_binary(&case.args, &reordered(&case.input));
    if first.0 != 0 {
        return Err(format!("{}: exit code {} ({})", case.name, first.0, first.2.trim()));
    }
    if first.1 != case.expected {
        return Err(format!("{}: expected {:?}, got {:?}", case.name, case.expected, first.1));
    }
    if second.1 != first.1 {
        return Err(format!("{}: output differs between runs", case.name));
    }
    if other.1 != first.1 {
        return Err(format!("{}: reordered input gives {:?}", case.name, other.1));
    }
    Ok(())
}
