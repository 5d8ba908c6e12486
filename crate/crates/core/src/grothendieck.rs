//! Local Grothendieck residues at the origin, homogeneous and affine.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::linalg::Rational;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// How to write each `P_i` as `Σ_j a_ij x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitMethod {
    /// `a_ij = (∂P_i/∂x_j) / deg P_i`.
    #[default]
    Euler,
    /// Every term goes to the variable with the largest exponent in it,
    /// ties to the lowest index.
    Greedy,
}

/// Rows of the coefficient matrix `[a_ij]`.
pub fn split_matrix(system: &[Polynomial], method: SplitMethod) -> Result<Vec<Vec<Polynomial>>> {
    system
        .iter()
        .map(|p| match method {
            SplitMethod::Euler => p.euler_split(),
            SplitMethod::Greedy => greedy_split(p),
        })
        .collect()
}

fn greedy_split(p: &Polynomial) -> Result<Vec<Polynomial>> {
    let r = p.nvars();
    let mut row = vec![Polynomial::zero(r); r];
    for (m, c) in p.terms() {
        let exps = m.exponents();
        let j = (0..r)
            .filter(|&j| exps[j] > 0)
            .max_by(|&a, &b| exps[a].cmp(&exps[b]).then(b.cmp(&a)))
            .ok_or_else(|| Error::Degree(format!("{p} has a constant term and cannot be split")))?;
        row[j].add_term(m.div(&Monomial::var(r, j)).expect("x_j occurs"), c.clone());
    }
    Ok(row)
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn polynomial_determinant(rows: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match rows.len() {
        0 => Polynomial::one(nvars),
        1 => rows[0][0].clone(),
        k => {
            let mut total = Polynomial::zero(nvars);
            for col in 0..k {
                if rows[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = rows[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][col] * &polynomial_determinant(&minor, nvars);
                total = if col % 2 == 0 { &total + &term } else { &total - &term };
            }
            total
        }
    }
}

fn validate_system(numerator: &Polynomial, system: &[Polynomial]) -> Result<Vec<u32>> {
    let r = numerator.nvars();
    if system.len() != r {
        return Err(Error::Dimension {
            context: "residue denominators (one per variable)",
            expected: r,
            found: system.len(),
        });
    }
    system
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if p.nvars() != r {
                return Err(Error::Dimension {
                    context: "residue denominator variable count",
                    expected: r,
                    found: p.nvars(),
                });
            }
            match p.total_degree() {
                Some(d) if d >= 1 => Ok(d),
                _ => Err(Error::Degree(format!(
                    "denominator {} = {p} must have degree at least 1",
                    i + 1
                ))),
            }
        })
        .collect()
}

/// `Res_0(H / (P_1 | … | P_r))` for homogeneous `H` and `P_i`.
pub fn residue_homogeneous(numerator: &Polynomial, system: &[Polynomial], order: MonomialOrder) -> Result<Rational> {
    residue_homogeneous_with(numerator, system, order, SplitMethod::Euler)
}

pub fn residue_homogeneous_with(
    numerator: &Polynomial,
    system: &[Polynomial],
    order: MonomialOrder,
    split: SplitMethod,
) -> Result<Rational> {
    let degrees = validate_system(numerator, system)?;
    if let Some((i, p)) = system.iter().enumerate().find(|(_, p)| !p.is_homogeneous()) {
        return Err(Error::Degree(format!("denominator {} = {p} is not homogeneous", i + 1)));
    }
    if !numerator.is_homogeneous() {
        return Err(Error::Degree(format!("numerator {numerator} is not homogeneous")));
    }
    let socle: u32 = degrees.iter().map(|d| d - 1).sum();
    if numerator.total_degree() != Some(socle) {
        return Ok(Rational::zero());
    }

    let gb = GroebnerBasis::compute(system, order)?;
    if !groebner::leading_terms_cover_all_variables(&gb) {
        return Err(Error::NotIsolated(display_system(system)));
    }
    let delta = polynomial_determinant(&split_matrix(system, split)?, numerator.nvars());
    let nf_h = gb.normal_form(numerator)?;
    let nf_delta = gb.normal_form(&delta)?;
    let (dc, dm) = nf_delta
        .leading_term(order)
        .map_err(|_| Error::Internal(format!("split determinant {delta} lies in the ideal")))?;
    if nf_delta.num_terms() != 1 || nf_h.num_terms() > 1 {
        return Err(Error::Internal(format!(
            "normal forms {nf_h} and {nf_delta} are not multiples of one monomial"
        )));
    }
    match nf_h.leading_term(order) {
        Err(_) => Ok(Rational::zero()),
        Ok((hc, hm)) if hm == dm => Ok(hc / dc),
        Ok(_) => Err(Error::Internal(format!(
            "normal forms {nf_h} and {nf_delta} lie on different monomials"
        ))),
    }
}

/// `Res_0(h / (p_1 | … | p_r))` for arbitrary `h`, `p_i` whose leading
/// forms have only the origin as common zero, via homogenization with a
/// new variable `x_0` placed first.
pub fn residue_affine(numerator: &Polynomial, system: &[Polynomial], order: MonomialOrder) -> Result<Rational> {
    let degrees = validate_system(numerator, system)?;
    let tops: Vec<Polynomial> = system
        .iter()
        .zip(&degrees)
        .map(|(p, d)| p.homogeneous_components().remove(d).expect("top component"))
        .collect();
    if !groebner::has_only_origin_zero(&tops, numerator.nvars())? {
        return Err(Error::NotIsolated(format!(
            "leading forms {}",
            display_system(&tops)
        )));
    }
    let Some(d) = numerator.total_degree() else {
        return Ok(Rational::zero());
    };
    let socle: u32 = degrees.iter().map(|d| d - 1).sum();
    if d < socle {
        return Ok(Rational::zero());
    }
    let h = numerator.homogenize(0, d)?;
    let mut big = vec![Polynomial::from_term(
        Monomial::var_pow(h.nvars(), 0, d + 1 - socle),
        Rational::from_integer(1.into()),
    )];
    for (p, &dp) in system.iter().zip(&degrees) {
        big.push(p.homogenize(0, dp)?);
    }
    residue_homogeneous(&h, &big, order)
}

fn display_system(system: &[Polynomial]) -> String {
    let parts: Vec<String> = system.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(" | "))
}
