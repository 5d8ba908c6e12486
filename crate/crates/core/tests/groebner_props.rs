use jkres::groebner::{buchberger, divide, reduce_basis, s_polynomial};
use jkres::testing::{self, ideal_slice_dimension};
use jkres::{GroebnerBasis, MonomialOrder, Polynomial};
use proptest::prelude::*;
use rand::Rng;

fn random_divisors(rng: &mut impl Rng, nvars: usize) -> Vec<Polynomial> {
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn division_identity_and_remainder_condition(seed in any::<u64>()) {
        let mut rng = testing::rng(seed);
        let nvars = rng.gen_range(1..=3);
        let f = testing::random_polynomial(&mut rng, nvars, 4, 5, 5);
        let fs = random_divisors(&mut rng, nvars);
        for order in MonomialOrder::ALL {
            let d = divide(&f, &fs, order).unwrap();
            let mut total = d.remainder.clone();
            for (q, g) in d.quotients.iter().zip(&fs) {
                total = &total + &(q * g);
            }
            prop_assert_eq!(&total, &f);
            let lms: Vec<_> = fs.iter().map(|g| g.leading_monomial(order).unwrap()).collect();
            for (m, _) in d.remainder.terms() {
                prop_assert!(lms.iter().all(|l| !l.divides(m)));
            }
            // Lm(a_i f_i) <= Lm(f)
            if let Some(lf) = f.leading_monomial(order) {
                for (q, g) in d.quotients.iter().zip(&fs) {
                    if let Some(lq) = (q * g).leading_monomial(order) {
                        prop_assert_ne!(order.cmp(&lq, &lf), std::cmp::Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn computed_bases_pass_buchberger_criterion(seed in any::<u64>()) {
        let mut rng = testing::rng(seed);
        let nvars = rng.gen_range(1..=3);
        let gens = random_divisors(&mut rng, nvars);
        for order in MonomialOrder::ALL {
            let raw = buchberger(&gens, order).unwrap();
            prop_assert!(raw.satisfies_buchberger_criterion().unwrap());
            let gb = reduce_basis(&raw);
            for i in 0..gb.len() {
                for j in i + 1..gb.len() {
                    let s = s_polynomial(&gb.generators()[i], &gb.generators()[j], order).unwrap();
                    prop_assert!(gb.normal_form(&s).unwrap().is_zero());
                }
            }
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
        }
    }

    #[test]
    fn reduced_basis_is_independent_of_generator_listing(seed in any::<u64>()) {
        let mut rng = testing::rng(seed);
        let nvars = rng.gen_range(1..=3);
        let gens = random_divisors(&mut rng, nvars);
        let order = MonomialOrder::ALL[rng.gen_range(0..3)];
        let a = GroebnerBasis::compute(&gens, order).unwrap();
        let b = GroebnerBasis::compute(&testing::shuffled(&mut rng, &gens), order).unwrap();
        prop_assert_eq!(&a, &b);
        // adding an ideal member changes nothing
        let mut more = gens.clone();
        let member = &(&gens[0] * &testing::random_polynomial(&mut rng, nvars, 2, 3, 2)) + &gens[gens.len() - 1];
        if !member.is_zero() {
            more.push(member);
        }
        let c = GroebnerBasis::compute(&more, order).unwrap();
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn leading_ideal_has_the_graded_dimension(seed in any::<u64>()) {
        let mut rng = testing::rng(seed);
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
                prop_assert_eq!(gb.leading_ideal_dimension(d), ideal_slice_dimension(&gens, nvars, d));
            }
        }
    }
}
