//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use jkres::arrangement::{combinations, jk_ideal_generators};
use jkres::groebner::{buchberger, divide, reduce_basis, s_polynomial};
use jkres::grothendieck::{residue_homogeneous_with, SplitMethod};
use jkres::jk::jk_residue_with_basis;
use jkres::linalg::{determinant, rat, ratio};
use jkres::oracle::{total_partial_fraction_with, RewriteStrategy};
use jkres::testing::{self, cone_complement_generators, cone_contains, ideal_slice_dimension};
use jkres::{
    jk_oracle, jk_residue, residue_homogeneous, total_partial_fraction, Configuration, GroebnerBasis, JKProblem,
    Monomial, MonomialOrder, Polynomial, QMatrix, QVector, Rational,
};
use rand::Rng;

const G: MonomialOrder = MonomialOrder::GrevLex;

fn value(config: &Configuration, eps: &QVector, p: &Polynomial, order: MonomialOrder) -> Rational {
    jk_residue(&JKProblem::new(config.clone(), eps.clone(), p.clone(), order).unwrap())
        .unwrap()
        .value
}

fn worked_identities() -> Result<(), String> {
    // 1/(x(x+y)) = 1/(xy) - 1/((x+y)y), i.e. y/(xy(x+y)) split over bases
    let config = Configuration::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
    let y = Polynomial::var(2, 1);
    let d = total_partial_fraction_with(&y, &config, RewriteStrategy::Densest).unwrap();
    let expected: BTreeMap<Vec<usize>, Rational> = [(vec![0, 1], rat(1)), (vec![1, 2], rat(-1))].into();
    if d.basis_terms != expected || !d.ng_terms.is_empty() || d.reconstruct(&config) != y {
        return Err(format!("partial fractions of y/(xy(x+y)): {:?}", d.basis_terms));
    }
    let default = total_partial_fraction(&y, &config).unwrap();
    if default.reconstruct(&config) != y {
        return Err("default decomposition does not reconstruct".into());
    }

    let mut rng = testing::rng(0xA1);
    for _ in 0..20 {
        let s = testing::random_split_instance(&mut rng);
        let left: Vec<usize> = (0..s.k).collect();
        let right: Vec<usize> = (s.k..s.config.len()).collect();
        let shape = [s.config.product(&left), s.config.product(&right)];
        let a = GroebnerBasis::compute(&jk_ideal_generators(&s.config, &s.epsilon).unwrap(), G).unwrap();
        let b = GroebnerBasis::compute(&shape, G).unwrap();
        if a != b {
            return Err(format!("split ideal of {} differs", s.config));
        }
    }

    let mut checked = 0;
    for _ in 0..20 {
        let inst = testing::random_jk_instance(&mut rng);
        let (r, n) = (inst.config.dim(), inst.config.len());
        for j in combinations(n, r) {
            if inst.config.rank_of(&j) < r {
                continue;
            }
            let sub: Vec<QVector> = j.iter().map(|&i| inst.config.vectors()[i].clone()).collect();
            if !cone_contains(&sub, &inst.epsilon, r) {
                continue;
            }
            let det = determinant(&QMatrix::from_columns(&sub, r)).unwrap();
            let expected = rat(1) / num_traits::Signed::abs(&det);
            // 1/prod_J over the whole arrangement is (prod of the rest) / prod_all
            let rest: Vec<usize> = (0..n).filter(|i| !j.contains(i)).collect();
            let got = value(&inst.config, &inst.epsilon, &inst.config.product(&rest), G);
            let alone = Configuration::from_vectors(sub).unwrap();
            let got_alone = value(&alone, &inst.epsilon, &Polynomial::one(r), G);
            if got != expected || got_alone != expected {
                return Err(format!("basis {j:?} of {}: {got}, {got_alone}, expected {expected}", inst.config));
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Err("no in-cone basis met".into());
    }
    Ok(())
}

fn oracle_equivalence() -> Result<(), String> {
    let mut rng = testing::rng(0xB2);
    let mut nonzero = 0;
    for k in 0..200 {
        let inst = testing::random_jk_instance(&mut rng);
        let a = value(&inst.config, &inst.epsilon, &inst.numerator, G);
        let b = jk_oracle(&inst.config, &inst.epsilon, &inst.numerator).unwrap();
        if a != b {
            return Err(format!("instance {k} ({}, P = {}): pipeline {a}, oracle {b}", inst.config, inst.numerator));
        }
        nonzero += usize::from(a != rat(0));
    }
    println!("  {nonzero} of 200 oracle instances have a nonzero value");
    Ok(())
}

fn dual_description() -> Result<(), String> {
    let mut rng = testing::rng(0xC3);
    let mut done = 0;
    while done < 100 {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(r..=6);
        let inst = testing::random_jk_instance_of(&mut rng, r, n);
        if !inst.config.spans() {
            continue;
        }
        let half = jk_ideal_generators(&inst.config, &inst.epsilon).unwrap();
        let brute = cone_complement_generators(&inst.config, &inst.epsilon);
        let a = GroebnerBasis::compute(&half, G).unwrap();
        let b = GroebnerBasis::compute(&brute, G).unwrap();
        if a != b {
            return Err(format!("{} with epsilon {}", inst.config, inst.epsilon));
        }
        done += 1;
    }
    Ok(())
}

fn random_list(rng: &mut impl Rng, nvars: usize) -> Vec<Polynomial> {
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| loop {
            let p = testing::random_polynomial(rng, nvars, 3, 4, 3);
            if !p.is_zero() {
                break p;
            }
        })
        .collect()
}

fn groebner_soundness() -> Result<(), String> {
    let mut rng = testing::rng(0xD4);
    for k in 0..200 {
        let nvars = rng.gen_range(1..=3);
        let f = testing::random_polynomial(&mut rng, nvars, 4, 5, 5);
        let fs = random_list(&mut rng, nvars);
        let order = MonomialOrder::ALL[k % 3];
        let d = divide(&f, &fs, order).unwrap();
        let mut total = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&fs) {
            total = &total + &(q * g);
        }
        if total != f {
            return Err(format!("division identity fails for {f}"));
        }
        for (m, _) in d.remainder.terms() {
            if fs.iter().any(|g| g.leading_monomial(order).unwrap().divides(m)) {
                return Err(format!("remainder term {m} of {f} is divisible"));
            }
        }

        let gb = reduce_basis(&buchberger(&fs, order).unwrap());
        let gens = gb.generators();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if !gb.normal_form(&s_polynomial(&gens[i], &gens[j], order).unwrap()).unwrap().is_zero() {
                    return Err(format!("S-polynomial does not reduce in basis of {fs:?}"));
                }
            }
        }
        if GroebnerBasis::compute(&testing::shuffled(&mut rng, &fs), order).unwrap() != gb {
            return Err("reduced basis depends on listing".into());
        }
    }
    for _ in 0..60 {
        let nvars = rng.gen_range(1..=3);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| loop {
                let d = rng.gen_range(1..=3);
                let p = testing::random_homogeneous(&mut rng, nvars, d, 4, 3);
                if !p.is_zero() {
                    break p;
                }
            })
            .collect();
        for order in MonomialOrder::ALL {
            let gb = GroebnerBasis::compute(&gens, order).unwrap();
            for d in 0..=5 {
                if gb.leading_ideal_dimension(d) != ideal_slice_dimension(&gens, nvars, d) {
                    return Err(format!("graded dimension {d} differs for {gens:?}"));
                }
            }
        }
    }
    Ok(())
}

fn invariance() -> Result<(), String> {
    let mut rng = testing::rng(0xE5);
    for k in 0..50 {
        let inst = testing::random_jk_instance(&mut rng);
        let problem = JKProblem::new(inst.config.clone(), inst.epsilon.clone(), inst.numerator.clone(), G).unwrap();
        let base = jk_residue(&problem).unwrap().value;
        for j in testing::positive_bases(&inst.config, &inst.epsilon) {
            if jk_residue_with_basis(&problem, &j).unwrap().value != base {
                return Err(format!("instance {k}: basis {j:?} changes the value"));
            }
        }
        for order in MonomialOrder::ALL {
            if value(&inst.config, &inst.epsilon, &inst.numerator, order) != base {
                return Err(format!("instance {k}: order {order} changes the value"));
            }
        }
        let c = ratio(rng.gen_range(1..20), rng.gen_range(1..20));
        if value(&inst.config, &inst.epsilon.scale(&c), &inst.numerator, G) != base {
            return Err(format!("instance {k}: scaling epsilon by {c} changes the value"));
        }
        let r = inst.config.dim();
        let q = testing::random_homogeneous(&mut rng, r, (inst.config.len() - r) as u32, 5, 4);
        let (a, b) = (rat(rng.gen_range(-4..=4)), rat(rng.gen_range(-4..=4)));
        let combo = &inst.numerator.scale(&a) + &q.scale(&b);
        let expected = &a * &base + &b * value(&inst.config, &inst.epsilon, &q, G);
        if value(&inst.config, &inst.epsilon, &combo, G) != expected {
            return Err(format!("instance {k}: not linear"));
        }
    }
    let mut chambers = 0;
    while chambers < 50 {
        let inst = testing::random_jk_instance(&mut rng);
        let Some(other) = testing::same_chamber_epsilon(&mut rng, &inst.config, &inst.epsilon) else {
            continue;
        };
        let a = value(&inst.config, &inst.epsilon, &inst.numerator, G);
        if value(&inst.config, &other, &inst.numerator, G) != a {
            return Err(format!("{}: epsilon {} and {} differ", inst.config, inst.epsilon, other));
        }
        chambers += 1;
    }
    Ok(())
}

fn socle(system: &[Polynomial]) -> u32 {
    system.iter().map(|p| p.total_degree().unwrap() - 1).sum()
}

fn grothendieck_suite() -> Result<(), String> {
    let mut rng = testing::rng(0xF6);
    for _ in 0..50 {
        let r = rng.gen_range(1..=3);
        let system = testing::random_zero_dim_system(&mut rng, r, 2);
        let s = socle(&system);
        let d = loop {
            let d = rng.gen_range(0..=s + 2);
            if d != s {
                break d;
            }
        };
        let h = testing::random_homogeneous(&mut rng, r, d, 5, 3);
        if residue_homogeneous(&h, &system, G).unwrap() != rat(0) {
            return Err(format!("degree {d} numerator does not vanish over {system:?}"));
        }
    }
    for _ in 0..50 {
        let system = testing::random_zero_dim_system(&mut rng, 2, 3);
        let s = socle(&system);
        let mut h = Polynomial::zero(2);
        for p in &system {
            let d = p.total_degree().unwrap();
            if d <= s {
                h = &h + &(p * &testing::random_homogeneous(&mut rng, 2, s - d, 4, 3));
            }
        }
        if residue_homogeneous(&h, &system, G).unwrap() != rat(0) {
            return Err(format!("ideal member {h} has a nonzero residue"));
        }
    }
    for _ in 0..50 {
        let r = rng.gen_range(2..=3);
        let system = testing::random_zero_dim_system(&mut rng, r, if r == 2 { 3 } else { 2 });
        let h = testing::random_homogeneous(&mut rng, r, socle(&system), 5, 4);
        let euler = residue_homogeneous_with(&h, &system, G, SplitMethod::Euler).unwrap();
        let greedy = residue_homogeneous_with(&h, &system, G, SplitMethod::Greedy).unwrap();
        if euler != greedy {
            return Err(format!("split choice changes the residue of {h}: {euler} vs {greedy}"));
        }
    }
    for _ in 0..50 {
        let r = rng.gen_range(1..=3);
        let exps: Vec<u32> = (0..r).map(|_| rng.gen_range(1..=4)).collect();
        let system: Vec<Polynomial> = exps
            .iter()
            .enumerate()
            .map(|(i, &m)| Polynomial::from_term(Monomial::var_pow(r, i, m), rat(1)))
            .collect();
        let mut h = testing::random_homogeneous(&mut rng, r, socle(&system), 6, 4);
        h.add_term(Monomial::new(exps.iter().map(|m| m - 1).collect()), rat(rng.gen_range(-3..=3)));
        let expected = testing::monomial_denominator_residue(&h, &exps);
        if residue_homogeneous(&h, &system, G).unwrap() != expected {
            return Err(format!("coefficient oracle disagrees for {h} over exponents {exps:?}"));
        }
    }
    let system = [Polynomial::parse("x1 + x2", 2).unwrap(), Polynomial::parse("x1 - x2", 2).unwrap()];
    let v = residue_homogeneous(&Polynomial::one(2), &system, G).unwrap();
    if v != ratio(-1, 2) {
        return Err(format!("Res 1/(x+y | x-y) = {v}"));
    }
    Ok(())
}

fn cli_goldens() -> Result<(), String> {
    let cases = common::cases();
    if cases.len() < 13 {
        return Err(format!("only {} golden cases", cases.len()));
    }
    for case in &cases {
        common::check_case(case)?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Result<(), String>, Option<Duration>);

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 worked identities", worked_identities, Some(Duration::from_secs(5))),
        ("2 oracle equivalence", oracle_equivalence, Some(Duration::from_secs(60))),
        ("3 dual description", dual_description, Some(Duration::from_secs(120))),
        ("4 groebner soundness", groebner_soundness, Some(Duration::from_secs(60))),
        ("5 jk invariance", invariance, Some(Duration::from_secs(60))),
        ("6 grothendieck suite", grothendieck_suite, Some(Duration::from_secs(60))),
        ("7 cli goldens", cli_goldens, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(format!("panicked: {:?}", e.downcast_ref::<String>().cloned().unwrap_or_default())));
        let elapsed = start.elapsed();
        let verdict = match (&outcome, limit) {
            (Err(msg), _) => format!("FAIL ({msg})"),
            (Ok(()), Some(l)) if elapsed > l => format!("FAIL (took {elapsed:.2?}, limit {l:?})"),
            _ => "PASS".to_string(),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {name}: {verdict} [{elapsed:.2?}]");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
