//! Evaluation of one problem and its textual output.

use std::fmt::Write as _;

use jkres::arrangement::{self, canonical_cmp};
use jkres::grothendieck;
use jkres::linalg::format_rational;
use jkres::oracle::total_partial_fraction;
use jkres::{jk_oracle, jk_residue, Configuration, GroebnerBasis, JKProblem, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::input::{parse_polynomial, Problem};
use crate::{CliError, Command};

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub report: bool,
    pub terms: bool,
    pub affine: bool,
    pub decimal: Option<usize>,
}

pub fn evaluate(command: Command, problem: &Problem, opts: &Options) -> Result<String, CliError> {
    let mut out = String::new();
    match command {
        Command::Jk => jk(problem, opts, &mut out)?,
        Command::Oracle => oracle(problem, opts, &mut out)?,
        Command::Ideal => ideal(problem, &mut out)?,
        Command::Groebner => groebner(problem, &mut out)?,
        Command::NormalForm => normal_form(problem, &mut out)?,
        Command::Groth => groth(problem, opts, &mut out)?,
    }
    Ok(out)
}

fn push_value(out: &mut String, value: &Rational, opts: &Options) {
    writeln!(out, "{}", format_rational(value)).unwrap();
    if let Some(digits) = opts.decimal {
        writeln!(out, "approximate: {}", decimal(value, digits)).unwrap();
    }
}

/// `value` rounded half away from zero to `digits` places.
pub fn decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if r * BigInt::from(2) >= *scaled.denom() { q + 1 } else { q };
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !(&int + &frac).is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

fn one_based(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn jk_problem(problem: &Problem) -> Result<JKProblem, CliError> {
    let config = problem.configuration()?;
    let p = parse_polynomial(problem.polynomial_text()?, config.dim())?;
    Ok(JKProblem::new(config, problem.epsilon()?, p, problem.order()?)?)
}

fn jk(problem: &Problem, opts: &Options, out: &mut String) -> Result<(), CliError> {
    let report = jk_residue(&jk_problem(problem)?)?;
    push_value(out, &report.value, opts);
    if !opts.report {
        return Ok(());
    }
    if let Some(reason) = report.short_circuit {
        writeln!(out, "short-circuit: {reason}").unwrap();
    }
    if !report.dropped_degrees.is_empty() {
        let d: Vec<String> = report.dropped_degrees.iter().map(u32::to_string).collect();
        writeln!(out, "dropped degrees: {}", d.join(", ")).unwrap();
    }
    writeln!(out, "effective numerator: {}", report.effective_numerator).unwrap();
    if let Some(j) = &report.chosen_j {
        writeln!(out, "J: {}", one_based(j)).unwrap();
    }
    if let Some(gb) = &report.ideal_basis {
        let gens: Vec<String> = gb.generators().iter().map(Polynomial::to_string).collect();
        writeln!(out, "ideal basis: {}", gens.join(", ")).unwrap();
    }
    if let Some(delta) = &report.delta {
        writeln!(out, "Delta: {delta}").unwrap();
    }
    if let (Some(np), Some(nd)) = (&report.normal_form_p, &report.normal_form_delta) {
        writeln!(out, "N(P): {np}").unwrap();
        writeln!(out, "N(Delta): {nd}").unwrap();
    }
    if let Some(g) = &report.gram_factor {
        writeln!(out, "gram factor: {}", format_rational(g)).unwrap();
    }
    Ok(())
}

fn oracle(problem: &Problem, opts: &Options, out: &mut String) -> Result<(), CliError> {
    let p = jk_problem(problem)?;
    let value = jk_oracle(&p.config, &p.epsilon, &p.numerator)?;
    push_value(out, &value, opts);
    if !opts.terms {
        return Ok(());
    }
    let r = p.config.dim() as u32;
    let top = (p.config.len() as u32).saturating_sub(r);
    let (p_eff, _) = jkres::jk::effective_numerator(&p.numerator, &p.epsilon, top);
    let d = total_partial_fraction(&p_eff, &p.config)?;
    for (sigma, c) in &d.basis_terms {
        writeln!(out, "basis {}: {}", one_based(sigma), format_rational(c)).unwrap();
    }
    for t in &d.ng_terms {
        writeln!(
            out,
            "ng {}: {} * {}",
            one_based(&t.denominator),
            format_rational(&t.coefficient),
            t.numerator
        )
        .unwrap();
    }
    Ok(())
}

/// `x1*(x1+x2)`-style rendering of a product of forms.
fn factored(config: &Configuration, indices: &[usize]) -> String {
    if indices.is_empty() {
        return "1".into();
    }
    let mut factors: Vec<Polynomial> = indices.iter().map(|&i| config.form(i).to_polynomial()).collect();
    factors.sort_by(canonical_cmp);
    let parts: Vec<String> = factors
        .iter()
        .map(|f| {
            let s = f.to_compact_string();
            if f.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        })
        .collect();
    parts.join("*")
}

fn ideal(problem: &Problem, out: &mut String) -> Result<(), CliError> {
    let config = problem.configuration()?;
    let eps = problem.epsilon()?;
    let order = problem.order()?;
    let mut products: Vec<(Polynomial, String)> = arrangement::oriented_hyperplanes(&config, &eps)?
        .iter()
        .map(|h| (h.product(&config), factored(&config, &h.positive_indices)))
        .collect();
    products.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    products.dedup_by(|a, b| a.0 == b.0);
    writeln!(out, "generators:").unwrap();
    for (_, text) in &products {
        writeln!(out, "  {text}").unwrap();
    }
    writeln!(out, "basis:").unwrap();
    if !products.is_empty() {
        let gens: Vec<Polynomial> = products.into_iter().map(|(p, _)| p).collect();
        for g in GroebnerBasis::compute(&gens, order)?.generators() {
            writeln!(out, "  {g}").unwrap();
        }
    }
    Ok(())
}

fn generator_basis(problem: &Problem) -> Result<(GroebnerBasis, usize), CliError> {
    let texts = problem.generator_texts()?;
    let extra = problem.polynomial.as_deref();
    let nvars = problem.ring_size(texts.iter().map(String::as_str).chain(extra))?;
    let gens = texts
        .iter()
        .map(|t| parse_polynomial(t, nvars))
        .collect::<Result<Vec<_>, _>>()?;
    let nonzero: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(CliError::Core(jkres::Error::Argument(
            "the generator list has no nonzero polynomial".into(),
        )));
    }
    Ok((GroebnerBasis::compute(&nonzero, problem.order()?)?, nvars))
}

fn groebner(problem: &Problem, out: &mut String) -> Result<(), CliError> {
    let (gb, _) = generator_basis(problem)?;
    for g in gb.generators() {
        writeln!(out, "{g}").unwrap();
    }
    Ok(())
}

fn normal_form(problem: &Problem, out: &mut String) -> Result<(), CliError> {
    let (gb, nvars) = generator_basis(problem)?;
    let f = parse_polynomial(problem.polynomial_text()?, nvars)?;
    writeln!(out, "{}", gb.normal_form(&f)?).unwrap();
    Ok(())
}

fn groth(problem: &Problem, opts: &Options, out: &mut String) -> Result<(), CliError> {
    let (num, dens) = problem.groth_texts()?;
    let nvars = problem.ring_size(std::iter::once(num).chain(dens.iter().map(String::as_str)))?;
    let h = parse_polynomial(num, nvars)?;
    let system = dens
        .iter()
        .map(|t| parse_polynomial(t, nvars))
        .collect::<Result<Vec<_>, _>>()?;
    let order = problem.order()?;
    let homogeneous = h.is_homogeneous() && system.iter().all(Polynomial::is_homogeneous);
    let value = if opts.affine || !homogeneous {
        grothendieck::residue_affine(&h, &system, order)?
    } else {
        grothendieck::residue_homogeneous(&h, &system, order)?
    };
    push_value(out, &value, opts);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use jkres::linalg::ratio;

    #[test]
    fn decimals_round_half_away_from_zero() {
        assert_eq!(decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(decimal(&ratio(2, 3), 4), "0.6667");
        assert_eq!(decimal(&ratio(-1, 2), 0), "-1");
        assert_eq!(decimal(&ratio(-1, 2), 2), "-0.50");
        assert_eq!(decimal(&ratio(7, 1), 1), "7.0");
        assert_eq!(decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(decimal(&ratio(123, 10), 0), "12");
    }
}
