//! Configurations of linear forms: polarization, regularity, spanned
//! hyperplanes, cone membership and the cone-complement ideal generators.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix, QVector};
use crate::poly::{LinearForm, MonomialOrder, Polynomial};

/// An ordered list of nonzero linear forms in `r` variables. Repeats are
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    forms: Vec<LinearForm>,
    dim: usize,
}

impl Configuration {
    pub fn new(forms: Vec<LinearForm>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Argument("a configuration needs dimension at least 1".into()));
        }
        if forms.is_empty() {
            return Err(Error::Argument("a configuration needs at least one form".into()));
        }
        for (i, f) in forms.iter().enumerate() {
            if f.dim() != dim {
                return Err(Error::Dimension {
                    context: "configuration form length",
                    expected: dim,
                    found: f.dim(),
                });
            }
            if f.is_zero() {
                return Err(Error::Argument(format!("form {} is zero", i + 1)));
            }
        }
        Ok(Configuration { forms, dim })
    }

    pub fn from_vectors(vectors: Vec<QVector>) -> Result<Self> {
        let dim = vectors.first().map_or(0, QVector::len);
        Self::new(vectors.into_iter().map(LinearForm::new).collect(), dim)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_vectors(rows.iter().map(|r| QVector::from_ints(r)).collect())
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn form(&self, index: usize) -> &LinearForm {
        &self.forms[index]
    }

    /// `r`, the number of variables.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n`, the number of forms.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn vectors(&self) -> Vec<QVector> {
        self.forms.iter().map(|f| f.coefficients().clone()).collect()
    }

    fn subset_vectors(&self, indices: &[usize]) -> Vec<QVector> {
        indices.iter().map(|&i| self.forms[i].coefficients().clone()).collect()
    }

    pub fn rank_of(&self, indices: &[usize]) -> usize {
        linalg::rank_of(&self.subset_vectors(indices), self.dim)
    }

    pub fn spans(&self) -> bool {
        linalg::rank_of(&self.vectors(), self.dim) == self.dim
    }

    /// Product of the forms at `indices`, as a polynomial.
    pub fn product(&self, indices: &[usize]) -> Polynomial {
        indices
            .iter()
            .fold(Polynomial::one(self.dim), |acc, &i| &acc * &self.forms[i].to_polynomial())
    }

    /// Product of every form whose index is not in `indices`.
    pub fn complement_product(&self, indices: &[usize]) -> Polynomial {
        let rest: Vec<usize> = (0..self.len()).filter(|i| !indices.contains(i)).collect();
        self.product(&rest)
    }

    /// Matrix whose columns are the forms at `indices`.
    pub fn column_matrix(&self, indices: &[usize]) -> QMatrix {
        QMatrix::from_columns(&self.subset_vectors(indices), self.dim)
    }

    fn check_epsilon(&self, epsilon: &QVector) -> Result<()> {
        if epsilon.len() != self.dim {
            return Err(Error::Dimension {
                context: "epsilon length",
                expected: self.dim,
                found: epsilon.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, form) in self.forms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", form)?;
        }
        write!(f, "]")
    }
}

/// A spanned hyperplane with its normal pointing toward `ε`, together with
/// the forms strictly on that side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHyperplane {
    pub normal: QVector,
    pub positive_indices: Vec<usize>,
}

impl OrientedHyperplane {
    pub fn product(&self, config: &Configuration) -> Polynomial {
        config.product(&self.positive_indices)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Side of `ε` relative to every spanned hyperplane, in the enumeration
/// order of [`spanned_hyperplanes`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChamberSignature {
    pub signs: Vec<Sign>,
}

impl fmt::Display for ChamberSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self
            .signs
            .iter()
            .map(|s| match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
            })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

/// A vector `ξ` with `α_i(ξ) > 0` for every form, if one exists.
pub fn polarization_witness(config: &Configuration) -> Option<QVector> {
    linalg::strictly_feasible(&config.vectors(), config.dim())
        .expect("configuration forms are nonzero and of equal length")
}

/// Canonical normals of the hyperplanes spanned by subsets of the
/// configuration, deduplicated, in order of first appearance over the
/// lexicographic `(r-1)`-subsets.
pub fn spanned_hyperplanes(config: &Configuration) -> Vec<QVector> {
    let r = config.dim();
    if !config.spans() {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut normals = Vec::new();
    for subset in combinations(config.len(), r - 1) {
        if config.rank_of(&subset) != r - 1 {
            continue;
        }
        let normal = linalg::hyperplane_normal(&config.subset_vectors(&subset), r)
            .expect("subset has rank r - 1");
        if seen.insert(normal.clone()) {
            normals.push(normal);
        }
    }
    normals
}

/// First spanned hyperplane containing `ε`, if any.
fn offending_hyperplane(config: &Configuration, epsilon: &QVector) -> Option<QVector> {
    spanned_hyperplanes(config)
        .into_iter()
        .find(|n| n.dot(epsilon).is_zero())
}

pub fn is_regular(config: &Configuration, epsilon: &QVector) -> bool {
    epsilon.len() == config.dim() && !epsilon.is_zero() && offending_hyperplane(config, epsilon).is_none()
}

pub(crate) fn require_regular(config: &Configuration, epsilon: &QVector) -> Result<()> {
    config.check_epsilon(epsilon)?;
    if epsilon.is_zero() {
        return Err(Error::NotRegular {
            epsilon: epsilon.to_string(),
            normal: "(every hyperplane)".into(),
        });
    }
    if let Some(normal) = offending_hyperplane(config, epsilon) {
        return Err(Error::NotRegular {
            epsilon: epsilon.to_string(),
            normal: normal.to_string(),
        });
    }
    Ok(())
}

/// Coefficients of `ε` in the basis formed by the forms at `indices`, or
/// `None` when those forms are dependent.
pub fn basis_coordinates(config: &Configuration, indices: &[usize], epsilon: &QVector) -> Option<QVector> {
    let m = config.column_matrix(indices);
    if linalg::rank(&m) != indices.len() || indices.len() != config.dim() {
        return None;
    }
    linalg::solve(&m, epsilon).expect("square system")
}

/// The lexicographically first independent `r`-subset whose cone contains
/// `ε`.
pub fn positive_basis(config: &Configuration, epsilon: &QVector) -> Result<Option<Vec<usize>>> {
    require_regular(config, epsilon)?;
    for subset in combinations(config.len(), config.dim()) {
        let Some(coords) = basis_coordinates(config, &subset, epsilon) else {
            continue;
        };
        if coords.iter().any(Zero::is_zero) {
            return Err(Error::Internal(format!(
                "regular epsilon {epsilon} has a zero coordinate in basis {subset:?}"
            )));
        }
        if coords.iter().all(Signed::is_positive) {
            return Ok(Some(subset));
        }
    }
    Ok(None)
}

/// Every spanned hyperplane, oriented toward `ε`, with the forms on its
/// positive side.
pub fn oriented_hyperplanes(config: &Configuration, epsilon: &QVector) -> Result<Vec<OrientedHyperplane>> {
    require_regular(config, epsilon)?;
    Ok(spanned_hyperplanes(config)
        .into_iter()
        .map(|n| {
            let normal = if n.dot(epsilon).is_positive() { n } else { n.neg() };
            let positive_indices = (0..config.len())
                .filter(|&i| normal.dot(config.form(i).coefficients()).is_positive())
                .collect();
            OrientedHyperplane {
                normal,
                positive_indices,
            }
        })
        .collect())
}

/// Generators of the ideal `I_{A,ε}`: for each spanned hyperplane, the
/// product of the forms strictly on the side of `ε`. Sorted by
/// [`canonical_cmp`] and deduplicated.
pub fn jk_ideal_generators(config: &Configuration, epsilon: &QVector) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = oriented_hyperplanes(config, epsilon)?
        .iter()
        .map(|h| h.product(config))
        .collect();
    gens.sort_by(canonical_cmp);
    gens.dedup();
    Ok(gens)
}

pub fn chamber_signature(config: &Configuration, epsilon: &QVector) -> Result<ChamberSignature> {
    require_regular(config, epsilon)?;
    let signs = spanned_hyperplanes(config)
        .iter()
        .map(|n| if n.dot(epsilon).is_positive() { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok(ChamberSignature { signs })
}

/// Deterministic total order on polynomials: by degree, then by the term
/// sequences read from the grevlex-greatest term down.
pub fn canonical_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        let ta = a.sorted_terms(MonomialOrder::GrevLex);
        let tb = b.sorted_terms(MonomialOrder::GrevLex);
        for ((ma, ca), (mb, cb)) in ta.iter().zip(&tb) {
            let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
            if o != Ordering::Equal {
                return o;
            }
        }
        ta.len().cmp(&tb.len())
    })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GroebnerBasis;

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_int_rows(rows).unwrap()
    }

    fn v(xs: &[i64]) -> QVector {
        QVector::from_ints(xs)
    }

    fn xyz() -> Configuration {
        cfg(&[&[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn configuration_validation() {
        assert!(Configuration::from_int_rows(&[&[0, 0]]).is_err());
        assert!(Configuration::from_int_rows(&[&[1, 0], &[1]]).is_err());
        assert!(Configuration::from_int_rows(&[]).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn polarization_examples() {
        let xi = polarization_witness(&xyz()).unwrap();
        assert!(xyz().forms().iter().all(|f| f.eval(&xi).is_positive()));
        assert!(polarization_witness(&cfg(&[&[1], &[-1]])).is_none());
        let c = cfg(&[&[1, 0], &[0, 1], &[1, 1], &[2, -1]]);
        let xi = polarization_witness(&c).unwrap();
        assert!(c.forms().iter().all(|f| f.eval(&xi).is_positive()));
    }

    #[test]
    fn hyperplane_examples() {
        let hs = spanned_hyperplanes(&cfg(&[&[1, 0], &[0, 1]]));
        assert_eq!(hs, vec![v(&[0, 1]), v(&[1, 0])]);
        let hs = spanned_hyperplanes(&xyz());
        assert_eq!(hs, vec![v(&[0, 1]), v(&[1, 0]), v(&[1, -1])]);
        assert_eq!(spanned_hyperplanes(&cfg(&[&[1, 0], &[2, 0], &[0, 1]])).len(), 2);
        assert!(spanned_hyperplanes(&cfg(&[&[1, 0], &[2, 0]])).is_empty());
        let c = cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(spanned_hyperplanes(&c).len(), 6);
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular(&xyz(), &v(&[2, 1])));
        assert!(!is_regular(&xyz(), &v(&[1, 1])));
        assert!(!is_regular(&cfg(&[&[1, 0], &[0, 1]]), &v(&[0, 1])));
        assert!(matches!(
            positive_basis(&xyz(), &v(&[1, 1])),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn positive_basis_examples() {
        assert_eq!(positive_basis(&cfg(&[&[1, 0], &[0, 1]]), &v(&[1, 1])).unwrap(), Some(vec![0, 1]));
        assert_eq!(positive_basis(&xyz(), &v(&[2, 1])).unwrap(), Some(vec![0, 1]));
        assert_eq!(positive_basis(&xyz(), &v(&[1, 2])).unwrap(), Some(vec![0, 1]));
        assert_eq!(positive_basis(&cfg(&[&[1, 0], &[0, 1]]), &v(&[-1, -1])).unwrap(), None);
        assert_eq!(positive_basis(&cfg(&[&[1, 0], &[1, 1]]), &v(&[1, 2])).unwrap(), None);
    }

    #[test]
    fn ideal_generator_examples() {
        let p = |s: &str| Polynomial::parse(s, 2).unwrap();
        let gens = jk_ideal_generators(&xyz(), &v(&[2, 1])).unwrap();
        assert_eq!(gens, vec![p("x1"), p("x1*x2 + x2^2"), p("x1^2 + x1*x2")]);
        let gb = GroebnerBasis::compute(&gens, MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.generators(), &[p("x1"), p("x2^2")]);
        let split = GroebnerBasis::compute(&[p("x1"), p("x1*x2 + x2^2")], MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb, split);
        let gens = jk_ideal_generators(&cfg(&[&[1, 0], &[0, 1]]), &v(&[1, 1])).unwrap();
        assert_eq!(gens, vec![p("x2"), p("x1")]);
    }

    #[test]
    fn chamber_signature_examples() {
        let c = cfg(&[&[1, 0], &[0, 1]]);
        let s = chamber_signature(&c, &v(&[1, 1])).unwrap();
        assert_eq!(s.signs, vec![Sign::Plus, Sign::Plus]);
        assert_eq!(s.to_string(), "(+,+)");
        let a = chamber_signature(&xyz(), &v(&[2, 1])).unwrap();
        assert_eq!(a, chamber_signature(&xyz(), &v(&[3, 1])).unwrap());
        let b = chamber_signature(&xyz(), &v(&[1, 2])).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.signs[..2], b.signs[..2]);
    }
}
