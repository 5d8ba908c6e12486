//! Shared fixtures for the benchmarks.

use jkres::testing::{self, JkInstance};
use jkres::{Configuration, JKProblem, MonomialOrder, Polynomial, QVector};

/// Cyclic-n generators: elementary symmetric sums, the last one minus 1.
pub fn cyclic(n: usize) -> Vec<Polynomial> {
    let mut gens = Vec::new();
    for k in 1..=n {
        let mut p = Polynomial::zero(n);
        for start in 0..n {
            let mut term = Polynomial::one(n);
            for j in 0..k {
                term = &term * &Polynomial::var(n, (start + j) % n);
            }
            p = &p + &term;
        }
        if k == n {
            p = &p - &Polynomial::one(n);
        }
        gens.push(p);
    }
    gens
}

/// Positive roots of A_r in simple-root coordinates, with `ε` in the
/// fundamental chamber and a fixed numerator of top degree.
pub fn type_a_problem(r: usize, order: MonomialOrder) -> JKProblem {
    let mut vectors = Vec::new();
    for i in 0..r {
        for j in i..r {
            let v: Vec<i64> = (0..r).map(|k| i64::from(k >= i && k <= j)).collect();
            vectors.push(QVector::from_ints(&v));
        }
    }
    let config = Configuration::from_vectors(vectors).unwrap();
    let eps = QVector::from_ints(&(1..=r as i64).map(|k| k * k + 1).collect::<Vec<_>>());
    let top = (config.len() - r) as u32;
    let p = Polynomial::var(r, 0).pow(top);
    JKProblem::new(config, eps, p, order).unwrap()
}

/// Reproducible random instances.
pub fn random_instances(count: usize, seed: u64) -> Vec<JkInstance> {
    let mut rng = testing::rng(seed);
    (0..count).map(|_| testing::random_jk_instance(&mut rng)).collect()
}
