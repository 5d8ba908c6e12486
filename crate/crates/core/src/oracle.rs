//! Partial-fraction evaluation of the Jeffrey–Kirwan residue, independent of
//! any Gröbner basis computation.

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::arrangement::{combinations, Configuration};
use crate::error::{Error, Result};
use crate::jk::{self, jk_basis_fraction};
use crate::linalg::{format_rational, Rational, QVector};
use crate::poly::{Monomial, Polynomial};

/// `coefficient * numerator / ∏_{i∈denominator} α_i`, the numerator being a
/// single monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionTerm {
    pub coefficient: Rational,
    pub numerator: Monomial,
    /// Sorted form indices, repeats allowed.
    pub denominator: Vec<usize>,
}

impl FractionTerm {
    pub fn degree(&self) -> i64 {
        self.numerator.degree() as i64 - self.denominator.len() as i64
    }
}

impl fmt::Display for FractionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self.denominator.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(
            f,
            "{} * {} / ({})",
            format_rational(&self.coefficient),
            self.numerator,
            den.join("*")
        )
    }
}

/// Which independent subset and which variable each rewriting step uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RewriteStrategy {
    /// Lexicographically first independent `r`-subset, highest-index variable.
    #[default]
    First,
    /// Lexicographically last independent `r`-subset, lowest-index variable.
    Last,
    /// Highest-index variable, rewritten over the first independent subset
    /// in which its expansion has the most nonzero coefficients.
    Densest,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    /// Coefficient of `1/∏_{i∈σ} α_i` for each independent `r`-set `σ`.
    pub basis_terms: BTreeMap<Vec<usize>, Rational>,
    /// Terms whose denominator forms do not span.
    pub ng_terms: Vec<FractionTerm>,
}

impl Decomposition {
    /// `Σ c · m · ∏_{i∉S} α_i` over all terms, i.e. the decomposition
    /// multiplied by `∏ α_i`. Equals the input numerator when the
    /// decomposition is correct.
    pub fn reconstruct(&self, config: &Configuration) -> Polynomial {
        let r = config.dim();
        let mut total = Polynomial::zero(r);
        for (sigma, c) in &self.basis_terms {
            total = &total + &config.complement_product(sigma).scale(c);
        }
        for t in &self.ng_terms {
            let cleared = &Polynomial::from_term(t.numerator.clone(), t.coefficient.clone())
                * &complement_multiset(config, &t.denominator);
            total = &total + &cleared;
        }
        total
    }
}

fn complement_multiset(config: &Configuration, denominator: &[usize]) -> Polynomial {
    let mut rest: Vec<usize> = (0..config.len()).collect();
    for i in denominator {
        let pos = rest.iter().position(|j| j == i).expect("denominator is a sub-multiset");
        rest.remove(pos);
    }
    config.product(&rest)
}

type WorkKey = (Reverse<u32>, Vec<usize>, Monomial);

pub fn total_partial_fraction(numerator: &Polynomial, config: &Configuration) -> Result<Decomposition> {
    total_partial_fraction_with(numerator, config, RewriteStrategy::First)
}

/// Expands `P / ∏ α_i` into basis fractions plus non-generating fractions.
pub fn total_partial_fraction_with(
    numerator: &Polynomial,
    config: &Configuration,
    strategy: RewriteStrategy,
) -> Result<Decomposition> {
    decompose(numerator, config, strategy, None)
}

/// Like [`total_partial_fraction_with`], also returning every term the
/// worklist processed, in processing order.
pub fn total_partial_fraction_traced(
    numerator: &Polynomial,
    config: &Configuration,
    strategy: RewriteStrategy,
) -> Result<(Decomposition, Vec<FractionTerm>)> {
    let mut seen = Vec::new();
    let d = decompose(numerator, config, strategy, Some(&mut seen))?;
    Ok((d, seen))
}

fn decompose(
    numerator: &Polynomial,
    config: &Configuration,
    strategy: RewriteStrategy,
    mut trace: Option<&mut Vec<FractionTerm>>,
) -> Result<Decomposition> {
    let r = config.dim();
    let n = config.len();
    if numerator.nvars() != r {
        return Err(Error::Dimension {
            context: "numerator variable count",
            expected: r,
            found: numerator.nvars(),
        });
    }
    let degree_ok = numerator.is_zero()
        || (n >= r && numerator.is_homogeneous() && numerator.total_degree() == Some((n - r) as u32));
    if !degree_ok {
        return Err(Error::Degree(format!(
            "numerator {numerator} must be homogeneous of degree n - r = {} - {}",
            n, r
        )));
    }

    let all: Vec<usize> = (0..n).collect();
    let mut work: BTreeMap<WorkKey, Rational> = numerator
        .terms()
        .map(|(m, c)| ((Reverse(m.degree()), all.clone(), m.clone()), c.clone()))
        .collect();
    let mut spans: HashMap<Vec<usize>, Option<Vec<usize>>> = HashMap::new();
    let mut out = Decomposition::default();
    let mut ng: BTreeMap<(Vec<usize>, Monomial), Rational> = BTreeMap::new();

    while let Some(((_, support, m), c)) = work.pop_first() {
        if let Some(t) = trace.as_deref_mut() {
            t.push(FractionTerm {
                coefficient: c.clone(),
                numerator: m.clone(),
                denominator: support.clone(),
            });
        }
        let basis = spans
            .entry(support.clone())
            .or_insert_with(|| independent_subset(config, &support, strategy))
            .clone();
        let Some(basis) = basis else {
            add_to(&mut ng, (support, m), c);
            continue;
        };
        if m.is_one() {
            if support.len() != r {
                return Err(Error::Internal(format!(
                    "constant numerator over {} forms in dimension {r}",
                    support.len()
                )));
            }
            add_to(&mut out.basis_terms, support, c);
            continue;
        }
        let var = match strategy {
            RewriteStrategy::First | RewriteStrategy::Densest => (0..r).rev().find(|&k| m.exponents()[k] > 0),
            RewriteStrategy::Last => (0..r).find(|&k| m.exponents()[k] > 0),
        }
        .expect("non-constant monomial");
        let (basis, coords) = match strategy {
            RewriteStrategy::Densest => densest_expansion(config, &support, var)?,
            _ => {
                let coords = expand_variable(config, &basis, var)?;
                (basis, coords)
            }
        };
        let rest = m.div(&Monomial::var(r, var)).expect("variable occurs");
        for (j, &form_index) in basis.iter().enumerate() {
            let t = &coords[j];
            if t.is_zero() {
                continue;
            }
            let mut smaller = support.clone();
            let pos = smaller.iter().position(|&i| i == form_index).expect("basis inside support");
            smaller.remove(pos);
            add_to(&mut work, (Reverse(rest.degree()), smaller, rest.clone()), &c * t);
        }
    }
    out.ng_terms = ng
        .into_iter()
        .map(|((denominator, numerator), coefficient)| FractionTerm {
            coefficient,
            numerator,
            denominator,
        })
        .collect();
    Ok(out)
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Coefficients `t` with `x_var = Σ_j t_j α_{basis[j]}`.
fn expand_variable(config: &Configuration, basis: &[usize], var: usize) -> Result<Vec<Rational>> {
    let r = config.dim();
    let forms: Vec<_> = basis.iter().map(|&i| config.form(i).clone()).collect();
    let image = Polynomial::var(r, var).substitute_linear_forms(&forms)?;
    Ok((0..r).map(|j| image.coefficient(&Monomial::var(r, j))).collect())
}

fn densest_expansion(config: &Configuration, support: &[usize], var: usize) -> Result<(Vec<usize>, Vec<Rational>)> {
    let r = config.dim();
    let mut best: Option<(usize, Vec<usize>, Vec<Rational>)> = None;
    for c in combinations(support.len(), r) {
        let subset: Vec<usize> = c.into_iter().map(|k| support[k]).collect();
        if config.rank_of(&subset) != r {
            continue;
        }
        let coords = expand_variable(config, &subset, var)?;
        let weight = coords.iter().filter(|t| !t.is_zero()).count();
        if best.as_ref().is_none_or(|(w, _, _)| weight > *w) {
            best = Some((weight, subset, coords));
        }
    }
    let (_, subset, coords) = best.expect("support spans");
    Ok((subset, coords))
}

/// An independent `r`-subset of the distinct forms in `support`, if the
/// support spans.
fn independent_subset(config: &Configuration, support: &[usize], strategy: RewriteStrategy) -> Option<Vec<usize>> {
    let mut distinct = support.to_vec();
    distinct.dedup();
    let r = config.dim();
    if config.rank_of(&distinct) < r {
        return None;
    }
    let mut candidates = combinations(distinct.len(), r)
        .into_iter()
        .map(|c| c.into_iter().map(|k| distinct[k]).collect::<Vec<_>>());
    let is_basis = |s: &Vec<usize>| config.rank_of(s) == r;
    match strategy {
        RewriteStrategy::First | RewriteStrategy::Densest => candidates.find(is_basis),
        RewriteStrategy::Last => candidates.rev().find(is_basis),
    }
}

pub fn jk_oracle(config: &Configuration, epsilon: &QVector, numerator: &Polynomial) -> Result<Rational> {
    jk_oracle_with(config, epsilon, numerator, RewriteStrategy::First)
}

/// `Σ_σ basis_terms[σ] · JK_ε(1/∏_{i∈σ} α_i)` after the same degree padding
/// as the Gröbner pipeline.
pub fn jk_oracle_with(
    config: &Configuration,
    epsilon: &QVector,
    numerator: &Polynomial,
    strategy: RewriteStrategy,
) -> Result<Rational> {
    let (p_eff, _) = match jk::prepare(config, epsilon, numerator)? {
        Ok(x) => x,
        Err(report) => return Ok(report.value),
    };
    let decomposition = total_partial_fraction_with(&p_eff, config, strategy)?;
    let mut total = Rational::zero();
    for (sigma, c) in &decomposition.basis_terms {
        total += c * jk_basis_fraction(config, epsilon, sigma)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_int_rows(rows).unwrap()
    }

    fn p(text: &str, r: usize) -> Polynomial {
        Polynomial::parse(text, r).unwrap()
    }

    const XYZ: &[&[i64]] = &[&[1, 0], &[0, 1], &[1, 1]];

    #[test]
    fn decomposition_examples() {
        let c = cfg(XYZ);
        // y/(x y (x+y)) = 1/(x (x+y)) = 1/(x y) - 1/(y (x+y))
        let d = total_partial_fraction(&p("x2", 2), &c).unwrap();
        assert_eq!(d.basis_terms, [(vec![0, 2], rat(1))].into());
        assert!(d.ng_terms.is_empty());
        assert_eq!(d.reconstruct(&c), p("x2", 2));
        let d = total_partial_fraction_with(&p("x2", 2), &c, RewriteStrategy::Densest).unwrap();
        let expected: BTreeMap<Vec<usize>, Rational> = [(vec![0, 1], rat(1)), (vec![1, 2], rat(-1))].into();
        assert_eq!(d.basis_terms, expected);
        assert_eq!(d.reconstruct(&c), p("x2", 2));

        let d = total_partial_fraction(&p("1", 2), &cfg(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(d.basis_terms, [(vec![0, 1], rat(1))].into());

        let c = cfg(&[&[1, 0], &[2, 0]]);
        let d = total_partial_fraction(&p("1", 2), &c).unwrap();
        assert!(d.basis_terms.is_empty());
        assert_eq!(d.ng_terms.len(), 1);
        assert_eq!(d.reconstruct(&c), p("1", 2));
    }

    #[test]
    fn degree_is_checked() {
        assert!(matches!(
            total_partial_fraction(&p("x1", 2), &cfg(&[&[1, 0], &[0, 1]])),
            Err(Error::Degree(_))
        ));
        assert!(total_partial_fraction(&p("0", 2), &cfg(&[&[1, 0], &[0, 1]])).unwrap().basis_terms.is_empty());
    }

    #[test]
    fn oracle_examples() {
        let e = QVector::from_ints(&[2, 1]);
        assert_eq!(jk_oracle(&cfg(XYZ), &e, &p("x2", 2)).unwrap(), rat(1));
        assert_eq!(jk_oracle(&cfg(XYZ), &e, &p("x1", 2)).unwrap(), rat(0));
        assert_eq!(jk_oracle(&cfg(XYZ), &e, &p("1", 2)).unwrap(), rat(1));
        assert_eq!(jk_oracle(&cfg(&[&[1, 0], &[0, 1]]), &QVector::from_ints(&[1, 1]), &p("1", 2)).unwrap(), rat(1));
    }

    #[test]
    fn strategies_agree_on_value() {
        let c = cfg(&[&[1, 0], &[0, 1], &[1, 1], &[1, 2], &[2, 1]]);
        let e = QVector::from_ints(&[3, 2]);
        let num = p("x1^2*x2 - 3*x2^3 + 2*x1^3", 2);
        let first = jk_oracle_with(&c, &e, &num, RewriteStrategy::First).unwrap();
        for s in [RewriteStrategy::First, RewriteStrategy::Last, RewriteStrategy::Densest] {
            let (d, trace) = total_partial_fraction_traced(&num, &c, s).unwrap();
            assert_eq!(d.reconstruct(&c), num);
            assert!(trace.iter().all(|t| t.degree() == -2));
            assert_eq!(jk_oracle_with(&c, &e, &num, s).unwrap(), first);
        }
    }
}
