//! The Jeffrey–Kirwan residue of `P / (α_1 ⋯ α_n)` via normal forms modulo
//! the cone-complement ideal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{self, Configuration};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{self, Rational, QVector};
use crate::poly::{LinearForm, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JKProblem {
    pub config: Configuration,
    pub epsilon: QVector,
    pub numerator: Polynomial,
    pub order: MonomialOrder,
}

impl JKProblem {
    pub fn new(config: Configuration, epsilon: QVector, numerator: Polynomial, order: MonomialOrder) -> Result<Self> {
        let r = config.dim();
        if epsilon.len() != r {
            return Err(Error::Dimension {
                context: "epsilon length",
                expected: r,
                found: epsilon.len(),
            });
        }
        if numerator.nvars() != r {
            return Err(Error::Dimension {
                context: "numerator variable count",
                expected: r,
                found: numerator.nvars(),
            });
        }
        Ok(JKProblem {
            config,
            epsilon,
            numerator,
            order,
        })
    }
}

/// Why the pipeline returned 0 without reaching the normal-form step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShortCircuit {
    NotSpanning,
    EpsilonOutsideCone,
    DegreeTooHigh,
}

impl ShortCircuit {
    pub fn tag(self) -> &'static str {
        match self {
            ShortCircuit::NotSpanning => "not-spanning",
            ShortCircuit::EpsilonOutsideCone => "epsilon-outside-cone",
            ShortCircuit::DegreeTooHigh => "degree-too-high",
        }
    }
}

impl fmt::Display for ShortCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Intermediate data of one residue evaluation. The optional fields are
/// absent exactly when the pipeline stopped before computing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JKReport {
    pub value: Rational,
    /// Homogeneous numerator of degree `n - r` actually evaluated.
    pub effective_numerator: Polynomial,
    /// Degrees of components above `n - r`, which contribute nothing.
    pub dropped_degrees: Vec<u32>,
    pub ideal_generators: Option<Vec<Polynomial>>,
    pub ideal_basis: Option<GroebnerBasis>,
    pub chosen_j: Option<Vec<usize>>,
    /// `|det M_J|`.
    pub gram_factor: Option<Rational>,
    pub delta: Option<Polynomial>,
    pub normal_form_p: Option<Polynomial>,
    pub normal_form_delta: Option<Polynomial>,
    pub short_circuit: Option<ShortCircuit>,
}

impl JKReport {
    fn stopped(effective_numerator: Polynomial, dropped_degrees: Vec<u32>, reason: ShortCircuit) -> Self {
        JKReport {
            value: Rational::zero(),
            effective_numerator,
            dropped_degrees,
            ideal_generators: None,
            ideal_basis: None,
            chosen_j: None,
            gram_factor: None,
            delta: None,
            normal_form_p: None,
            normal_form_delta: None,
            short_circuit: Some(reason),
        }
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Replaces every homogeneous component `P_d` with `d <= top` by
/// `ε(x)^(top-d) P_d / (top-d)!` and sums. Components above `top` are
/// dropped; their degrees are returned.
pub fn effective_numerator(numerator: &Polynomial, epsilon: &QVector, top: u32) -> (Polynomial, Vec<u32>) {
    let eps = LinearForm::new(epsilon.clone()).to_polynomial();
    let mut total = Polynomial::zero(numerator.nvars());
    let mut dropped = Vec::new();
    for (d, component) in numerator.homogeneous_components() {
        if d > top {
            dropped.push(d);
            continue;
        }
        let k = top - d;
        let scale = Rational::from_integer(factorial(k)).recip();
        total = &total + &(&eps.pow(k) * &component).scale(&scale);
    }
    (total, dropped)
}

/// `JK_ε(1 / ∏_{j∈J} α_j)`: `1/|det|` when `ε` lies in the cone of the
/// basis, else 0.
pub fn jk_basis_fraction(config: &Configuration, epsilon: &QVector, basis: &[usize]) -> Result<Rational> {
    let r = config.dim();
    if basis.len() != r {
        return Err(Error::Dimension {
            context: "jk_basis_fraction (basis size)",
            expected: r,
            found: basis.len(),
        });
    }
    arrangement::require_regular(config, epsilon)?;
    let m = config.column_matrix(basis);
    let det = linalg::determinant(&m)?;
    if det.is_zero() {
        return Err(Error::Rank {
            context: "jk_basis_fraction (basis forms)",
            expected: r,
            found: linalg::rank(&m),
        });
    }
    let coords = linalg::solve(&m, epsilon)?.expect("invertible");
    if coords.iter().all(Signed::is_positive) {
        Ok(det.abs().recip())
    } else {
        Ok(Rational::zero())
    }
}

/// Checks shared by the pipeline and the oracle: polarization, spanning,
/// regularity, then padding to degree `n - r`. `Err(report)` carries an
/// early zero.
pub(crate) fn prepare(config: &Configuration, epsilon: &QVector, numerator: &Polynomial) -> Result<std::result::Result<(Polynomial, Vec<u32>), JKReport>> {
    if arrangement::polarization_witness(config).is_none() {
        return Err(Error::NotPolarized {
            forms: config.to_string(),
        });
    }
    let r = config.dim();
    let n = config.len();
    if !config.spans() {
        return Ok(Err(JKReport::stopped(Polynomial::zero(r), Vec::new(), ShortCircuit::NotSpanning)));
    }
    arrangement::require_regular(config, epsilon)?;
    let top = (n - r) as u32;
    let (p_eff, dropped) = effective_numerator(numerator, epsilon, top);
    if p_eff.is_zero() && !dropped.is_empty() {
        return Ok(Err(JKReport::stopped(p_eff, dropped, ShortCircuit::DegreeTooHigh)));
    }
    Ok(Ok((p_eff, dropped)))
}

/// The full pipeline with the lexicographically first positive basis.
pub fn jk_residue(problem: &JKProblem) -> Result<JKReport> {
    evaluate(problem, None)
}

/// The pipeline with a caller-chosen basis `J`, which must be independent
/// with `ε` in its cone.
pub fn jk_residue_with_basis(problem: &JKProblem, basis: &[usize]) -> Result<JKReport> {
    evaluate(problem, Some(basis))
}

fn evaluate(problem: &JKProblem, basis: Option<&[usize]>) -> Result<JKReport> {
    let JKProblem {
        config,
        epsilon,
        numerator,
        order,
    } = problem;
    let (p_eff, dropped) = match prepare(config, epsilon, numerator)? {
        Ok(x) => x,
        Err(report) => return Ok(report),
    };
    let r = config.dim();

    let j = match basis {
        Some(j) => {
            let mut j = j.to_vec();
            j.sort_unstable();
            j.dedup();
            if j.len() != r || j.iter().any(|&i| i >= config.len()) {
                return Err(Error::Argument(format!("{j:?} is not an r-subset of the form indices")));
            }
            let coords = arrangement::basis_coordinates(config, &j, epsilon).ok_or(Error::Rank {
                context: "chosen basis J",
                expected: r,
                found: config.rank_of(&j),
            })?;
            if !coords.iter().all(Signed::is_positive) {
                return Err(Error::Argument(format!("epsilon {epsilon} is not in the cone of basis {j:?}")));
            }
            j
        }
        None => match arrangement::positive_basis(config, epsilon)? {
            Some(j) => j,
            None => return Ok(JKReport::stopped(p_eff, dropped, ShortCircuit::EpsilonOutsideCone)),
        },
    };

    let gens = arrangement::jk_ideal_generators(config, epsilon)?;
    let gb = GroebnerBasis::compute(&gens, *order)?;
    let delta = config.complement_product(&j);
    let nf_p = gb.normal_form(&p_eff)?;
    let nf_delta = gb.normal_form(&delta)?;
    let gram = linalg::determinant(&config.column_matrix(&j))?.abs();

    let (dc, dm) = nf_delta
        .leading_term(*order)
        .map_err(|_| Error::Internal(format!("normal form of {delta} vanishes modulo the ideal")))?;
    if nf_delta.num_terms() != 1 || nf_p.num_terms() > 1 {
        return Err(Error::Internal(format!(
            "normal forms {nf_p} and {nf_delta} are not multiples of one monomial"
        )));
    }
    let value = match nf_p.leading_term(*order) {
        Err(_) => Rational::zero(),
        Ok((pc, pm)) => {
            if pm != dm {
                return Err(Error::Internal(format!(
                    "normal forms {nf_p} and {nf_delta} lie on different monomials"
                )));
            }
            pc / dc / &gram
        }
    };
    Ok(JKReport {
        value,
        effective_numerator: p_eff,
        dropped_degrees: dropped,
        ideal_generators: Some(gens),
        ideal_basis: Some(gb),
        chosen_j: Some(j),
        gram_factor: Some(gram),
        delta: Some(delta),
        normal_form_p: Some(nf_p),
        normal_form_delta: Some(nf_delta),
        short_circuit: None,
    })
}
