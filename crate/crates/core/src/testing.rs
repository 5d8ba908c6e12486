//! Random instance generators and brute-force reference computations shared
//! by the test suites and benchmarks.

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{self, combinations, Configuration};
use crate::groebner;
use crate::linalg::{self, rat, QMatrix, QVector, Rational};
use crate::poly::{LinearForm, Monomial, Polynomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, dim: usize, bound: i64) -> QVector {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return QVector::from_ints(&v);
        }
    }
}

/// `n` nonzero integer forms in `r` variables with entries in
/// `[-bound, bound]`, all positive on a common vector.
pub fn random_polarized_config(rng: &mut impl Rng, r: usize, n: usize, bound: i64) -> Configuration {
    let xi: Vec<i64> = (0..r).map(|_| nonzero_int(rng, 7)).collect();
    let xi = QVector::from_ints(&xi);
    let forms = (0..n)
        .map(|_| loop {
            let v = random_vector(rng, r, bound);
            let s = v.dot(&xi);
            if s.is_positive() {
                break v;
            }
            if s.is_negative() {
                break v.neg();
            }
        })
        .collect();
    Configuration::from_vectors(forms).expect("nonzero forms of equal length")
}

/// A regular `ε`, usually a positive combination of the forms (so inside the
/// cone), sometimes a random vector.
pub fn random_regular_epsilon(rng: &mut impl Rng, config: &Configuration) -> QVector {
    let r = config.dim();
    loop {
        let candidate = if rng.gen_bool(0.85) {
            let mut acc = QVector::zeros(r);
            for f in config.forms() {
                let c = rat(rng.gen_range(0..=4));
                acc = QVector::new(
                    acc.iter()
                        .zip(f.coefficients().iter())
                        .map(|(a, b)| a + &c * b)
                        .collect(),
                );
            }
            acc
        } else {
            random_vector(rng, r, 5)
        };
        if arrangement::is_regular(config, &candidate) {
            return candidate;
        }
    }
}

pub fn random_homogeneous(rng: &mut impl Rng, nvars: usize, degree: u32, bound: i64, max_terms: usize) -> Polynomial {
    let monomials = Monomial::all_of_degree(nvars, degree);
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut p = Polynomial::zero(nvars);
    for _ in 0..count {
        let m = monomials.choose(rng).expect("at least one monomial").clone();
        p.add_term(m, rat(rng.gen_range(-bound..=bound)));
    }
    p
}

/// Random polynomial with terms of degree at most `max_degree`.
pub fn random_polynomial(rng: &mut impl Rng, nvars: usize, max_degree: u32, bound: i64, max_terms: usize) -> Polynomial {
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut p = Polynomial::zero(nvars);
    for _ in 0..count {
        let d = rng.gen_range(0..=max_degree);
        let m = Monomial::all_of_degree(nvars, d).choose(rng).expect("nonempty").clone();
        p.add_term(m, rat(rng.gen_range(-bound..=bound)));
    }
    p
}

#[derive(Debug, Clone)]
pub struct JkInstance {
    pub config: Configuration,
    pub epsilon: QVector,
    pub numerator: Polynomial,
}

/// `r` in `1..=3`, `r <= n <= 6`, form entries in `[-3, 3]`, regular `ε`,
/// homogeneous numerator of degree `n - r` with coefficients in `[-5, 5]`.
pub fn random_jk_instance(rng: &mut impl Rng) -> JkInstance {
    let r = rng.gen_range(1..=3);
    let n = rng.gen_range(r..=6);
    random_jk_instance_of(rng, r, n)
}

pub fn random_jk_instance_of(rng: &mut impl Rng, r: usize, n: usize) -> JkInstance {
    let config = random_polarized_config(rng, r, n, 3);
    let epsilon = random_regular_epsilon(rng, &config);
    let numerator = random_homogeneous(rng, r, (n - r) as u32, 5, 4);
    JkInstance {
        config,
        epsilon,
        numerator,
    }
}

/// Cone membership by enumerating linearly independent subsets, each
/// tested for a nonnegative solution.
pub fn cone_contains(vectors: &[QVector], target: &QVector, dim: usize) -> bool {
    if target.is_zero() {
        return true;
    }
    for k in 1..=dim.min(vectors.len()) {
        for subset in combinations(vectors.len(), k) {
            let cols: Vec<QVector> = subset.iter().map(|&i| vectors[i].clone()).collect();
            let m = QMatrix::from_columns(&cols, dim);
            if linalg::rank(&m) != k {
                continue;
            }
            if let Some(c) = linalg::solve(&m, target).expect("shapes agree") {
                if c.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Generators `∏_{j∈J} α_j` over the minimal index sets `J` such that `ε`
/// is outside the cone of the remaining forms.
pub fn cone_complement_generators(config: &Configuration, epsilon: &QVector) -> Vec<Polynomial> {
    let n = config.len();
    let vectors = config.vectors();
    let mut minimal: Vec<u32> = Vec::new();
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        if minimal.iter().any(|&m| m & !mask == 0) {
            continue;
        }
        let rest: Vec<QVector> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| vectors[i].clone()).collect();
        if !cone_contains(&rest, epsilon, config.dim()) {
            minimal.push(mask);
        }
    }
    minimal
        .iter()
        .map(|&mask| {
            let j: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            config.product(&j)
        })
        .collect()
}

/// Dimension of the degree-`d` slice of the ideal generated by homogeneous
/// polynomials, by linear algebra on the spanning set `m·g`.
pub fn ideal_slice_dimension(generators: &[Polynomial], nvars: usize, degree: u32) -> usize {
    let monomials = Monomial::all_of_degree(nvars, degree);
    let mut rows = Vec::new();
    for g in generators {
        let Some(e) = g.total_degree() else { continue };
        if e > degree {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, degree - e) {
            let prod = g.mul_term(&m, &rat(1));
            rows.push(monomials.iter().map(|b| prod.coefficient(b)).collect::<Vec<Rational>>());
        }
    }
    if rows.is_empty() {
        return 0;
    }
    linalg::rank(&QMatrix::from_rows(rows))
}

/// The residue at the origin for monomial denominators `x_i^{m_i}`: the
/// coefficient of `∏ x_i^{m_i - 1}` in `h`.
pub fn monomial_denominator_residue(h: &Polynomial, exponents: &[u32]) -> Rational {
    h.coefficient(&Monomial::new(exponents.iter().map(|m| m - 1).collect()))
}

/// A two-dimensional configuration split by the line through `ε`: the
/// first `k` forms lie on one side, the rest on the other, every form
/// pairs positively with `ε`.
#[derive(Debug, Clone)]
pub struct SplitInstance {
    pub config: Configuration,
    pub epsilon: QVector,
    pub k: usize,
}

pub fn random_split_instance(rng: &mut impl Rng) -> SplitInstance {
    let e = loop {
        let e = random_vector(rng, 2, 3);
        if !e.is_zero() {
            break e;
        }
    };
    let perp = QVector::new(vec![-e[1].clone(), e[0].clone()]);
    let n = rng.gen_range(2..=6);
    let k = rng.gen_range(1..n);
    let forms = (0..n)
        .map(|i| {
            let a = rat(rng.gen_range(1..=3));
            let b = rat(rng.gen_range(1..=3));
            let b = if i < k { b } else { -b };
            QVector::new(vec![&a * &e[0] + &b * &perp[0], &a * &e[1] + &b * &perp[1]])
        })
        .collect();
    SplitInstance {
        config: Configuration::from_vectors(forms).expect("nonzero forms"),
        epsilon: e,
        k,
    }
}

/// Homogeneous system of `r` forms of degree `1..=max_degree` whose only
/// common zero is the origin.
pub fn random_zero_dim_system(rng: &mut impl Rng, r: usize, max_degree: u32) -> Vec<Polynomial> {
    loop {
        let system: Vec<Polynomial> = (0..r)
            .map(|_| {
                let d = rng.gen_range(1..=max_degree);
                random_homogeneous(rng, r, d, 4, 4)
            })
            .collect();
        if system.iter().any(Polynomial::is_zero) {
            continue;
        }
        if groebner::has_only_origin_zero(&system, r).expect("homogeneous") {
            return system;
        }
    }
}

/// A linear form with small integer coefficients.
pub fn random_form(rng: &mut impl Rng, r: usize, bound: i64) -> LinearForm {
    LinearForm::new(random_vector(rng, r, bound))
}

/// Applies a random permutation to a list and returns it.
pub fn shuffled<T: Clone>(rng: &mut impl Rng, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}

/// Every `r`-subset whose forms are independent with `ε` strictly inside
/// their cone.
pub fn positive_bases(config: &Configuration, epsilon: &QVector) -> Vec<Vec<usize>> {
    combinations(config.len(), config.dim())
        .into_iter()
        .filter(|s| {
            arrangement::basis_coordinates(config, s, epsilon)
                .is_some_and(|c| c.iter().all(|x| x.is_positive() && !x.is_zero()))
        })
        .collect()
}

/// Another regular vector in the same chamber as `ε`, not a multiple of it,
/// found by perturbing a multiple of `ε`.
pub fn same_chamber_epsilon(rng: &mut impl Rng, config: &Configuration, epsilon: &QVector) -> Option<QVector> {
    let target = arrangement::chamber_signature(config, epsilon).ok()?;
    for attempt in 0..200 {
        let stretch = rat(2 + attempt / 20);
        let nudge = random_vector(rng, config.dim(), 1);
        let candidate = QVector::new(
            epsilon
                .iter()
                .zip(nudge.iter())
                .map(|(e, d)| e * &stretch + d)
                .collect(),
        );
        if candidate.canonical_direction() == epsilon.canonical_direction() {
            continue;
        }
        if arrangement::is_regular(config, &candidate)
            && arrangement::chamber_signature(config, &candidate).ok()? == target
        {
            return Some(candidate);
        }
    }
    None
}
