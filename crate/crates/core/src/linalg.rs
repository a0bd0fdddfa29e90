//! Dense exact linear algebra over the rationals.
//!
//! Rank and kernel computations clear denominators row by row and then run
//! fraction-free (Bareiss) elimination over the integers, so every
//! intermediate entry is a minor of the input and no fractions are formed.
//! Pivots are chosen as the first nonzero entry in column order, which makes
//! kernel bases reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, make_primitive, to_rationals, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Entry count does not equal `rows * cols`.
    Shape { rows: usize, cols: usize, len: usize },
    /// Vectors or matrices of incompatible length.
    DimensionMismatch { expected: usize, found: usize },
    /// Matrix is not invertible.
    Singular,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Shape { rows, cols, len } => {
                write!(f, "{rows}x{cols} matrix cannot hold {len} entries")
            }
            LinalgError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            LinalgError::Singular => f.write_str("matrix is singular"),
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if rows * cols != entries.len() {
            return Err(LinalgError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from equally long rows. An empty row list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Inverse by rational Gauss-Jordan elimination; intended for small matrices.
    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(LinalgError::Singular)?;
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c].clone();
            for j in 0..n {
                a[c][j] /= &piv;
                inv[c][j] /= &piv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let factor = a[r][c].clone();
                for j in 0..n {
                    let t = &factor * &a[c][j];
                    a[r][j] -= t;
                    let t = &factor * &inv[c][j];
                    inv[r][j] -= t;
                }
            }
        }
        RatMatrix::from_rows(inv)
    }

    pub fn determinant(&self) -> Result<Rational, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let (mut ints, scale) = self.integer_rows();
        let n = self.rows;
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !ints[r][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                ints.swap(k, p);
                negate = !negate;
            }
            let (head, tail) = ints.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                for j in k + 1..n {
                    row[j] = (&pivot_row[k] * &row[j] - &row[k] * &pivot_row[j]) / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = ints[k][k].clone();
        }
        let det = if n == 0 { BigInt::one() } else { prev };
        let det = Rational::new(det, scale);
        Ok(if negate { -det } else { det })
    }

    /// Rows scaled to integers, plus the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let den = common_denominator(row);
                let ints = row.iter().map(|v| v.numer() * (&den / v.denom())).collect();
                scale *= den;
                ints
            })
            .collect();
        (rows, scale)
    }
}

/// Fraction-free row echelon form. Row `i` has its pivot in column
/// `pivots[i]`; the last pivot `det` is the leading `rank x rank` minor of the
/// row-permuted input.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    det: BigInt,
}

fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, below) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        let prev_is_one = prev.is_one();
        // Rows below are zero left of `c`.
        for row in below.iter_mut() {
            let factor = core::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let touch = !factor.is_zero() && !pivot_row[j].is_zero();
                if row[j].is_zero() && !touch {
                    continue;
                }
                row[j] *= pivot;
                if touch {
                    row[j] -= &factor * &pivot_row[j];
                }
                if !prev_is_one {
                    row[j] /= &prev;
                }
            }
        }
        pivots.push(c);
        prev = pivot.clone();
        r += 1;
    }
    a.truncate(r);
    Echelon {
        rows: a,
        pivots,
        det: prev,
    }
}

fn integer_rows_of(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    m.integer_rows().0
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    bareiss(integer_rows_of(m), m.cols).pivots.len()
}

/// Basis of the right null space, one vector per non-pivot column in
/// increasing column order. Each vector is a primitive integer vector whose
/// first nonzero entry is positive.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let cols = m.cols;
    if m.rows == 0 {
        return (0..cols).map(|j| unit_vector(cols, j)).collect();
    }
    let ech = bareiss(integer_rows_of(m), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = back_substitute(&ech, j, cols);
            make_primitive(&mut v);
            to_rationals(&v)
        })
        .collect()
}

/// Solution with free column `j` set to `det` and the other free columns to
/// zero. By Cramer's rule it is integral, so every division below is exact.
fn back_substitute(ech: &Echelon, j: usize, cols: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); cols];
    v[j] = ech.det.clone();
    for (i, row) in ech.rows.iter().enumerate().rev() {
        let p = ech.pivots[i];
        if p > j {
            continue;
        }
        let mut acc = &row[j] * &ech.det;
        for &q in &ech.pivots[i + 1..] {
            if q < j && !row[q].is_zero() && !v[q].is_zero() {
                acc += &row[q] * &v[q];
            }
        }
        v[p] = -(acc / &row[p]);
    }
    v
}

fn unit_vector(n: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[j] = Rational::one();
    v
}

/// Whether `v` lies in the rational span of `basis`.
pub fn in_span(v: &[Rational], basis: &[Vec<Rational>]) -> Result<bool, LinalgError> {
    if let Some(bad) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(LinalgError::DimensionMismatch {
            expected: v.len(),
            found: bad.len(),
        });
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if basis.is_empty() {
        return Ok(false);
    }
    let span = RatMatrix::from_rows(basis.to_vec())?;
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    let extended = RatMatrix::from_rows(rows)?;
    Ok(rank(&span) == rank(&extended))
}
