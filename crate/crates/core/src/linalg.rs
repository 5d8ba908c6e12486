//! Exact linear algebra over the rationals.
//!
//! Everything here is computed with reduced `BigRational`s, so results are
//! exact and comparisons are value comparisons. Elimination picks, among the
//! admissible pivots of a column, the entry with the smallest bit size.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q` (q nonzero).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = |message: &str| Error::Syntax {
        position: 0,
        message: format!("{message} in rational `{text}`"),
    };
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad("bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn bit_size(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

/// A vector of rationals whose length is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![Rational::zero(); len])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[index] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Standard dot product. Panics on length mismatch.
    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot product of vectors of different length");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> QVector {
        QVector::new(self.entries.iter().map(|e| e * factor).collect())
    }

    pub fn neg(&self) -> QVector {
        QVector::new(self.entries.iter().map(|e| -e).collect())
    }

    /// Rescales to a primitive integer vector whose first nonzero entry is
    /// positive. The zero vector is returned unchanged.
    pub fn canonical_direction(&self) -> QVector {
        let Some(first) = self.entries.iter().find(|e| !e.is_zero()) else {
            return self.clone();
        };
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
        let sign = if first.is_negative() { -BigInt::one() } else { BigInt::one() };
        QVector::new(
            ints.into_iter()
                .map(|e| Rational::from_integer(e / &gcd * &sign))
                .collect(),
        )
    }
}

impl Index<usize> for QVector {
    type Output = Rational;

    fn index(&self, index: usize) -> &Rational {
        &self.entries[index]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(e))?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    /// Matrix whose rows are the given vectors; `cols` is used when the list is
    /// empty.
    pub fn from_row_vectors(vectors: &[QVector], cols: usize) -> Self {
        let mut m = Self::zeros(vectors.len(), cols);
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), cols, "row length mismatch");
            for (j, e) in v.iter().enumerate() {
                m.data[i * cols + j] = e.clone();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(vectors: &[QVector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length mismatch");
            for (i, e) in v.iter().enumerate() {
                m.data[i * vectors.len() + j] = e.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> QVector {
        QVector::new(self.data[row * self.cols..(row + 1) * self.cols].to_vec())
    }

    pub fn mul_vector(&self, v: &QVector) -> QVector {
        assert_eq!(v.len(), self.cols);
        QVector::new((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }
}

/// Row reduction result: reduced row echelon form plus pivot columns.
struct Echelon {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

/// Gauss–Jordan elimination restricted to the first `pivot_cols` columns.
fn row_reduce(mut rows: Vec<Vec<Rational>>, pivot_cols: usize) -> Echelon {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| bit_size(&rows[i][c]))
        else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
        }
        let inv = rows[r][c].recip();
        for e in rows[r].iter_mut() {
            *e *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *e -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Rank over the rationals.
pub fn rank(m: &QMatrix) -> usize {
    row_reduce(m.to_rows(), m.cols).pivots.len()
}

/// Rank of the span of a list of vectors of length `dim`.
pub fn rank_of(vectors: &[QVector], dim: usize) -> usize {
    rank(&QMatrix::from_row_vectors(vectors, dim))
}

pub fn determinant(m: &QMatrix) -> Result<Rational> {
    if m.rows != m.cols {
        return Err(Error::Dimension {
            context: "determinant (square matrix required)",
            expected: m.rows,
            found: m.cols,
        });
    }
    let n = m.rows;
    let mut rows = m.to_rows();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| bit_size(&rows[i][c]))
        else {
            return Ok(Rational::zero());
        };
        if p != c {
            rows.swap(p, c);
            det = -det;
        }
        let pivot = rows[c][c].clone();
        det *= &pivot;
        let pivot_row = rows[c].clone();
        for row in rows.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot;
            for (e, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                *e -= &factor * p;
            }
        }
    }
    Ok(det)
}

/// One exact solution of `m x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &QMatrix, b: &QVector) -> Result<Option<QVector>> {
    if m.rows != b.len() {
        return Err(Error::Dimension {
            context: "solve (right-hand side length)",
            expected: m.rows,
            found: b.len(),
        });
    }
    let rows: Vec<Vec<Rational>> = m
        .to_rows()
        .into_iter()
        .zip(b.iter())
        .map(|(mut row, bi)| {
            row.push(bi.clone());
            row
        })
        .collect();
    let ech = row_reduce(rows, m.cols);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[m.cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (i, &c) in ech.pivots.iter().enumerate() {
        x[c] = ech.rows[i][m.cols].clone();
    }
    Ok(Some(QVector::new(x)))
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &QMatrix) -> Result<Option<QMatrix>> {
    if m.rows != m.cols {
        return Err(Error::Dimension {
            context: "inverse (square matrix required)",
            expected: m.rows,
            found: m.cols,
        });
    }
    let n = m.rows;
    let rows: Vec<Vec<Rational>> = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let ech = row_reduce(rows, n);
    if ech.pivots.len() < n {
        return Ok(None);
    }
    Ok(Some(QMatrix::from_rows(
        ech.rows.into_iter().map(|row| row[n..].to_vec()).collect(),
    )))
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &QMatrix) -> Vec<QVector> {
    let ech = row_reduce(m.to_rows(), m.cols);
    let free: Vec<usize> = (0..m.cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); m.cols];
            x[f] = Rational::one();
            for (i, &p) in ech.pivots.iter().enumerate() {
                x[p] = -ech.rows[i][f].clone();
            }
            QVector::new(x)
        })
        .collect()
}

/// Canonical normal of the hyperplane spanned by `vectors` in dimension
/// `dim`: a primitive integer vector with positive first nonzero entry.
pub fn hyperplane_normal(vectors: &[QVector], dim: usize) -> Result<QVector> {
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::Dimension {
            context: "hyperplane_normal (vector length)",
            expected: dim,
            found: v.len(),
        });
    }
    let m = QMatrix::from_row_vectors(vectors, dim);
    let ker = kernel(&m);
    if dim == 0 || ker.len() != 1 {
        return Err(Error::Rank {
            context: "hyperplane_normal (span must be a hyperplane)",
            expected: dim.saturating_sub(1),
            found: dim - ker.len(),
        });
    }
    Ok(ker[0].canonical_direction())
}

/// A linear inequality `coeffs · x >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Inequality {
    /// Scales so the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Signed::abs) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Returns some `xi` with `<a, xi> > 0` for every `a` in `forms`, or `None`
/// when no such vector exists.
///
/// Solves the equivalent system `<a, xi> >= 1` by Fourier–Motzkin
/// elimination (last variable first), then back-substitutes the midpoint of
/// each surviving interval (the finite endpoint for half-bounded intervals,
/// zero for unbounded ones).
pub fn strictly_feasible(forms: &[QVector], dim: usize) -> Result<Option<QVector>> {
    for (i, f) in forms.iter().enumerate() {
        if f.len() != dim {
            return Err(Error::Dimension {
                context: "strictly_feasible (vector length)",
                expected: dim,
                found: f.len(),
            });
        }
        if f.is_zero() {
            return Err(Error::Validation(format!(
                "strictly_feasible requires nonzero vectors; entry {} is {}",
                i + 1,
                f
            )));
        }
    }

    // levels[k] only involves x_0..x_{k-1}.
    let mut levels: Vec<Vec<Inequality>> = vec![Vec::new(); dim + 1];
    levels[dim] = forms
        .iter()
        .map(|f| {
            Inequality {
                coeffs: f.as_slice().to_vec(),
                rhs: Rational::one(),
            }
            .normalized()
        })
        .collect();
    dedup(&mut levels[dim]);

    for k in (0..dim).rev() {
        let current = &levels[k + 1];
        let mut next = Vec::new();
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for ineq in current {
            let a = &ineq.coeffs[k];
            if a.is_zero() {
                next.push(ineq.clone());
            } else if a.is_positive() {
                lower.push(ineq);
            } else {
                upper.push(ineq);
            }
        }
        for lo in &lower {
            for up in &upper {
                let wl = up.coeffs[k].abs();
                let wu = lo.coeffs[k].clone();
                let coeffs = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(a, b)| a * &wl + b * &wu)
                    .collect();
                let rhs = &lo.rhs * &wl + &up.rhs * &wu;
                next.push(Inequality { coeffs, rhs }.normalized());
            }
        }
        dedup(&mut next);
        levels[k] = next;
    }

    if levels[0].iter().any(|ineq| ineq.rhs.is_positive()) {
        return Ok(None);
    }

    let mut x: Vec<Rational> = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for ineq in &levels[k + 1] {
            let a = &ineq.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let rest = x
                .iter()
                .zip(&ineq.coeffs)
                .fold(Rational::zero(), |acc, (xi, c)| acc + xi * c);
            let bound = (&ineq.rhs - rest) / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        let value = match (lo, hi) {
            (Some(l), Some(h)) => {
                if l > h {
                    return Err(Error::Internal(format!(
                        "Fourier-Motzkin back-substitution found an empty interval for x{}",
                        k + 1
                    )));
                }
                (l + h) / rat(2)
            }
            (Some(l), None) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        };
        x.push(value);
    }
    Ok(Some(QVector::new(x)))
}

fn dedup(ineqs: &mut Vec<Inequality>) {
    ineqs.sort();
    ineqs.dedup();
}
