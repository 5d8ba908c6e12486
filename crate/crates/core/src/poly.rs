//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a map from exponent vectors to nonzero coefficients.
//! The map is keyed by [`Monomial`], whose natural ordering is graded reverse
//! lexicographic with `x1 > x2 > ... > xr`; [`Polynomial::terms`] walks it from
//! the greatest monomial down. Other orders are supplied explicitly through
//! [`MonomialOrder`] wherever leading terms matter.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, format_rational, rat, QMatrix, QVector, Rational};

/// Exponent vector `x^a`, `a` in `N^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect())
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable if this is a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nonzero.next()?;
        nonzero.next().is_none().then_some(i)
    }

    /// All monomials in `nvars` variables of total degree `degree`, in
    /// descending graded reverse lexicographic order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(left);
                out.push(Monomial::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(nvars, left - e, prefix, out);
                prefix.pop();
            }
        }
        if nvars == 0 {
            return if degree == 0 { vec![Monomial::one(0)] } else { Vec::new() };
        }
        let mut out = Vec::new();
        rec(nvars, degree, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::GrevLex.cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The monomial orders shipped with the library. Variables are ordered
/// `x1 > x2 > ... > xr` in all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex];

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // The rightmost nonzero entry of a - b is negative => a > b.
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(Error::Argument(format!(
                "unknown monomial order `{other}` (expected lex, grlex or grevlex)"
            ))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A polynomial in `nvars` variables with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_term(Monomial::var(nvars, index), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial variable count");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the greatest monomial (graded reverse lexicographic) down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    /// Terms sorted from greatest to smallest under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant term (zero when absent).
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Leading coefficient and leading monomial under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Rational, Monomial)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<Monomial> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b)).cloned()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    /// Divides through by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((c, _)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    fn check_same_ring(&self, other: &Polynomial, context: &'static str) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                context,
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "polynomial addition (variable count)")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "polynomial subtraction (variable count)")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other, "polynomial multiplication (variable count)")?;
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `x_i := images[i]`. All images must share one variable
    /// count, which becomes the variable count of the result.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::Dimension {
                context: "compose (one image per variable)",
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, Polynomial::nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::Dimension {
                context: "compose (image variable count)",
                expected: target,
                found: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * rat(e as i64));
        }
        out
    }

    /// Splits into homogeneous components keyed by degree. The zero
    /// polynomial has no components.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// `x0^d * f(x/x0)` with the fresh variable `x0` inserted at index
    /// `position`.
    pub fn homogenize(&self, position: usize, degree: u32) -> Result<Polynomial> {
        if position > self.nvars {
            return Err(Error::Argument(format!(
                "fresh variable position {position} exceeds variable count {}",
                self.nvars
            )));
        }
        if let Some(d) = self.total_degree() {
            if degree < d {
                return Err(Error::Degree(format!(
                    "homogenization degree {degree} is below the total degree {d} of {self}"
                )));
            }
        }
        let mut out = Polynomial::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps.insert(position, degree - m.degree());
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Sets variable `position` to 1 and removes it.
    pub fn dehomogenize(&self, position: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut exps = m.exps.clone();
            exps.remove(position);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Euler-identity split `P = sum_j a_j x_j` with `a_j = (dP/dx_j) / deg P`.
    pub fn euler_split(&self) -> Result<Vec<Polynomial>> {
        let d = match self.total_degree() {
            Some(d) if d >= 1 && self.is_homogeneous() => d,
            _ => {
                return Err(Error::Degree(format!(
                    "euler_split needs a homogeneous polynomial of degree >= 1, got {self}"
                )))
            }
        };
        let inv = Rational::new(BigInt::one(), BigInt::from(d));
        Ok((0..self.nvars)
            .map(|j| self.partial_derivative(j).scale(&inv))
            .collect())
    }

    /// Rewrites `self` in the coordinates `u_j = basis[j](x)`: returns `g` with
    /// `g(basis[0](x), ..., basis[r-1](x)) = self(x)`.
    pub fn substitute_linear_forms(&self, basis: &[LinearForm]) -> Result<Polynomial> {
        let r = self.nvars;
        if basis.len() != r {
            return Err(Error::Dimension {
                context: "substitute_linear_forms (number of forms)",
                expected: r,
                found: basis.len(),
            });
        }
        if let Some(bad) = basis.iter().find(|f| f.dim() != r) {
            return Err(Error::Dimension {
                context: "substitute_linear_forms (form dimension)",
                expected: r,
                found: bad.dim(),
            });
        }
        let rows: Vec<QVector> = basis.iter().map(|f| f.coefficients().clone()).collect();
        let a = QMatrix::from_row_vectors(&rows, r);
        let inv = linalg::inverse(&a)?.ok_or_else(|| Error::Rank {
            context: "substitute_linear_forms (forms must be independent)",
            expected: r,
            found: linalg::rank(&a),
        })?;
        // x = A^{-1} u
        let images: Vec<Polynomial> = (0..r)
            .map(|k| LinearForm::new(inv.row(k)).to_polynomial())
            .collect();
        self.compose(&images)
    }

    /// Parses the text grammar with variables `x1..x{nvars}`.
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let raw = Parser::new(text).parse()?;
        let needed = raw.iter().flat_map(|(_, vars)| vars.iter().map(|(v, _)| *v)).max().unwrap_or(0);
        if needed > nvars {
            return Err(Error::UnknownVariable {
                name: format!("x{needed}"),
                nvars,
            });
        }
        Ok(raw_to_poly(raw, nvars))
    }

    /// Parses and sizes the ring by the largest variable index used.
    pub fn parse_infer(text: &str) -> Result<Polynomial> {
        let raw = Parser::new(text).parse()?;
        let nvars = raw.iter().flat_map(|(_, vars)| vars.iter().map(|(v, _)| *v)).max().unwrap_or(0);
        Ok(raw_to_poly(raw, nvars))
    }

    /// Largest variable index (1-based) appearing in `text`.
    pub fn max_variable(text: &str) -> Result<usize> {
        let raw = Parser::new(text).parse()?;
        Ok(raw.iter().flat_map(|(_, vars)| vars.iter().map(|(v, _)| *v)).max().unwrap_or(0))
    }

    /// Same ring, same terms, printed without spaces.
    pub fn to_compact_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

type RawTerm = (Rational, Vec<(usize, u32)>);

fn raw_to_poly(raw: Vec<RawTerm>, nvars: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for (c, vars) in raw {
        let mut exps = vec![0u32; nvars];
        for (v, e) in vars {
            exps[v - 1] += e;
        }
        p.add_term(Monomial::new(exps), c);
    }
    p
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { text: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits"))
    }

    fn parse(mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            if c == b'-' {
                sign = -sign;
            }
            self.pos += 1;
        }
        loop {
            let (c, vars) = self.term()?;
            terms.push((c * &sign, vars));
            match self.peek() {
                None => break,
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(other) => return self.err(format!("unexpected character `{}`", other as char)),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let start = self.pos;
                    let idx: usize = self.digits()?.parse().map_err(|_| Error::Syntax {
                        position: start,
                        message: "variable index too large".into(),
                    })?;
                    if idx == 0 {
                        return Err(Error::UnknownVariable {
                            name: "x0".into(),
                            nvars: 0,
                        });
                    }
                    let mut exp = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let start = self.pos;
                        exp = self.digits()?.parse().map_err(|_| Error::Syntax {
                            position: start,
                            message: "exponent too large".into(),
                        })?;
                        if exp == 0 {
                            return self.err("exponents must be >= 1");
                        }
                    }
                    vars.push((idx, exp));
                }
                Some(b'0'..=b'9') => {
                    let num: BigInt = self.digits()?.parse().expect("digits parse");
                    let mut q = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den: BigInt = self.digits()?.parse().expect("digits parse");
                        if den.is_zero() {
                            return self.err("zero denominator");
                        }
                        q /= Rational::from_integer(den);
                    }
                    coeff *= q;
                }
                Some(other) => return self.err(format!("expected a number or variable, found `{}`", other as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, vars));
            }
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A linear form `sum_i c_i x_i` without constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coefficients: QVector,
}

impl LinearForm {
    pub fn new(coefficients: QVector) -> Self {
        Self { coefficients }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(QVector::from_ints(values))
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &QVector {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_zero()
    }

    /// Value at a point.
    pub fn eval(&self, point: &QVector) -> Rational {
        self.coefficients.dot(point)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let r = self.dim();
        Polynomial::from_terms(
            r,
            self.coefficients
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(r, i), c.clone())),
        )
    }

    /// Inverse of [`LinearForm::to_polynomial`]; rejects anything that is not
    /// homogeneous of degree one (the zero polynomial is the zero form).
    pub fn from_polynomial(p: &Polynomial) -> Result<LinearForm> {
        let r = p.nvars();
        let mut coeffs = vec![Rational::zero(); r];
        for (m, c) in p.terms() {
            match m.pure_power_var() {
                Some(i) if m.degree() == 1 => coeffs[i] = c.clone(),
                _ => {
                    return Err(Error::Degree(format!(
                        "{p} is not a linear form (term {m})"
                    )))
                }
            }
        }
        Ok(LinearForm::new(QVector::new(coeffs)))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
