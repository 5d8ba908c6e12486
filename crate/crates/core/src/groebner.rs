//! Multivariate division, Buchberger's algorithm and normal forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Monomial keyed by an explicit order, so a `BTreeMap` can hold a
/// polynomial sorted under any [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq)]
struct OrderedMonomial {
    monomial: Monomial,
    order: MonomialOrder,
}

impl Ord for OrderedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.monomial, &other.monomial)
    }
}

impl PartialOrd for OrderedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of dividing `f` by an ordered list `f_1..f_s`:
/// `f = sum a_i f_i + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    /// The monomial reduced at each step, in the order the loop chose them.
    pub steps: Vec<Monomial>,
}

struct Divisor<'a> {
    poly: &'a Polynomial,
    lc: Rational,
    lm: Monomial,
}

fn prepare<'a>(divisors: &'a [Polynomial], nvars: usize, order: MonomialOrder) -> Result<Vec<Divisor<'a>>> {
    if divisors.is_empty() {
        return Err(Error::Argument("division needs at least one divisor".into()));
    }
    divisors
        .iter()
        .enumerate()
        .map(|(i, g)| {
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    context: "divide (divisor variable count)",
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            let (lc, lm) = g.leading_term(order).map_err(|_| {
                Error::Argument(format!("divisor {} is the zero polynomial", i + 1))
            })?;
            Ok(Divisor { poly: g, lc, lm })
        })
        .collect()
}

/// The division algorithm: repeatedly take the greatest monomial of the
/// running remainder that is divisible by some `Lt(f_i)`, using the smallest
/// such `i`, and cancel it.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Division> {
    let nvars = f.nvars();
    let divs = prepare(divisors, nvars, order)?;
    let mut work: BTreeMap<OrderedMonomial, Rational> = f
        .terms()
        .map(|(m, c)| (OrderedMonomial { monomial: m.clone(), order }, c.clone()))
        .collect();
    let mut quotients = vec![Polynomial::zero(nvars); divs.len()];
    let mut remainder = Polynomial::zero(nvars);
    let mut steps = Vec::new();

    // Everything already moved to `remainder` is greater than what is left in
    // `work` and divisible by no leading term, so the largest entry of `work`
    // that is divisible is the greatest divisible monomial overall.
    while let Some((key, c)) = work.pop_last() {
        let m = key.monomial;
        let Some((i, q)) = divs
            .iter()
            .enumerate()
            .find_map(|(i, d)| m.div(&d.lm).map(|q| (i, q)))
        else {
            remainder.add_term(m, c);
            continue;
        };
        let factor = &c / &divs[i].lc;
        quotients[i].add_term(q.clone(), factor.clone());
        for (t, a) in divs[i].poly.terms() {
            if *t == divs[i].lm {
                continue;
            }
            let key = OrderedMonomial { monomial: t.mul(&q), order };
            let delta = -(&factor * a);
            match work.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(delta);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        steps.push(m);
    }
    Ok(Division {
        quotients,
        remainder,
        steps,
    })
}

/// `lcm/Lt(f) * f - lcm/Lt(g) * g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    let (fc, fm) = f.leading_term(order)?;
    let (gc, gm) = g.leading_term(order)?;
    let l = fm.lcm(&gm);
    let a = f.mul_term(&l.div(&fm).expect("lcm is a multiple"), &fc.recip());
    let b = g.mul_term(&l.div(&gm).expect("lcm is a multiple"), &gc.recip());
    a.checked_sub(&b)
}

/// A generating set of an ideal tagged with its monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    nvars: usize,
    reduced: bool,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the ideal generated by `generators`.
    pub fn compute(generators: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
        Ok(reduce_basis(&buchberger(generators, order)?))
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .filter_map(|g| g.leading_monomial(self.order))
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        contains(self, f)
    }

    /// Whether `m` lies in the leading-term ideal.
    pub fn leading_ideal_contains(&self, m: &Monomial) -> bool {
        self.leading_monomials().iter().any(|l| l.divides(m))
    }

    /// Number of degree-`d` monomials in the leading-term ideal.
    pub fn leading_ideal_dimension(&self, degree: u32) -> usize {
        let lms = self.leading_monomials();
        Monomial::all_of_degree(self.nvars, degree)
            .iter()
            .filter(|m| lms.iter().any(|l| l.divides(m)))
            .count()
    }

    /// Degree-`d` monomials outside the leading-term ideal.
    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        let lms = self.leading_monomials();
        Monomial::all_of_degree(self.nvars, degree)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect()
    }

    /// Every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let s = s_polynomial(&self.generators[i], &self.generators[j], self.order)?;
                if !divide(&s, &self.generators, self.order)?.remainder.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// of leading monomials first) and both of Buchberger's criteria.
pub fn buchberger(generators: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let nvars = generators.first().map_or(0, Polynomial::nvars);
    let mut basis: Vec<Polynomial> = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::Dimension {
                context: "buchberger (generator variable count)",
                expected: nvars,
                found: g.nvars(),
            });
        }
        if g.is_zero() {
            return Err(Error::Argument(format!("generator {} is the zero polynomial", i + 1)));
        }
        basis.push(g.monic(order));
    }
    let mut lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero"))
        .collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }

    while !pending.is_empty() {
        let pick = (0..pending.len())
            .min_by(|&a, &b| {
                let (ia, ja) = pending[a];
                let (ib, jb) = pending[b];
                order
                    .cmp(&lms[ia].lcm(&lms[ja]), &lms[ib].lcm(&lms[jb]))
                    .then((ja, ia).cmp(&(jb, ib)))
            })
            .expect("nonempty");
        let (i, j) = pending.swap_remove(pick);
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let is_pending = |a: usize, b: usize| pending.contains(&(a.min(b), a.max(b)));
        let chain = (0..basis.len())
            .any(|k| k != i && k != j && lms[k].divides(&l) && !is_pending(i, k) && !is_pending(j, k));
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = divide(&s, &basis, order)?.remainder;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        let new = basis.len();
        lms.push(r.leading_monomial(order).expect("nonzero"));
        basis.push(r);
        for k in 0..new {
            pending.push((k, new));
        }
    }
    Ok(GroebnerBasis {
        generators: basis,
        order,
        nvars,
        reduced: false,
    })
}

/// The reduced Gröbner basis: monic, no monomial of any generator in the
/// leading-term ideal of the others, sorted by ascending leading monomial.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let order = g.order;
    let mut monic: Vec<(Monomial, Polynomial)> = g
        .generators
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| (p.leading_monomial(order).expect("nonzero"), p.monic(order)))
        .collect();
    monic.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let mut minimal: Vec<(Monomial, Polynomial)> = Vec::new();
    for (lm, p) in monic {
        if !minimal.iter().any(|(l, _)| l.divides(&lm)) {
            minimal.push((lm, p));
        }
    }
    let mut gens: Vec<Polynomial> = minimal.into_iter().map(|(_, p)| p).collect();
    for i in 0..gens.len() {
        let others: Vec<Polynomial> = gens
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        gens[i] = divide(&gens[i], &others, order)
            .expect("nonzero divisors of one ring")
            .remainder;
    }
    GroebnerBasis {
        generators: gens,
        order,
        nvars: g.nvars,
        reduced: true,
    }
}

/// `N_I(f)`: the remainder of `f` on division by a Gröbner basis of `I`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if f.nvars() != g.nvars && !g.generators.is_empty() {
        return Err(Error::Dimension {
            context: "normal_form (variable count)",
            expected: g.nvars,
            found: f.nvars(),
        });
    }
    if g.generators.is_empty() {
        return Ok(f.clone());
    }
    Ok(divide(f, &g.generators, g.order)?.remainder)
}

pub fn contains(g: &GroebnerBasis, f: &Polynomial) -> Result<bool> {
    Ok(normal_form(f, g)?.is_zero())
}

/// Whether the homogeneous polynomials have the origin as their only common
/// zero: every variable must have a pure power in the leading-term ideal.
pub fn has_only_origin_zero(generators: &[Polynomial], nvars: usize) -> Result<bool> {
    if let Some(g) = generators.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::Validation(format!(
            "has_only_origin_zero needs homogeneous generators, got {g}"
        )));
    }
    let nonzero: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(nvars == 0);
    }
    let gb = buchberger(&nonzero, MonomialOrder::GrevLex)?;
    Ok(leading_terms_cover_all_variables(&gb))
}

pub(crate) fn leading_terms_cover_all_variables(gb: &GroebnerBasis) -> bool {
    let lms = gb.leading_monomials();
    (0..gb.nvars).all(|i| {
        lms.iter()
            .any(|m| m.exponents().iter().enumerate().all(|(k, &e)| k == i || e == 0))
    })
}
