use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    /// Panics if `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entries must fill a {rows}x{cols} matrix"
        );
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors of common length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        RationalMatrix::new(n, cols, entries)
    }

    pub fn from_integers<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        RationalMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
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

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (x.len(), 1),
            });
        }
        Ok(self.row_vectors().map(|row| dot(row, x)).collect())
    }

    /// `yᵀ · self` for a row vector `y`.
    pub fn vec_mul(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        if y.len() != self.rows {
            return Err(Error::ShapeMismatch {
                left: (1, y.len()),
                right: (self.rows, self.cols),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (coef, row) in y.iter().zip(self.row_vectors()) {
            if coef.is_zero() {
                continue;
            }
            for (acc, a) in out.iter_mut().zip(row) {
                if !a.is_zero() {
                    *acc += coef * a;
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let (rows, scale) = self.integer_rows();
        let reduced = reduce(rows, self.cols, Sweep::Forward);
        if reduced.pivot_cols.len() < self.rows {
            return Ok(Rational::zero());
        }
        let mut det = reduced.pivot;
        if reduced.swaps % 2 == 1 {
            det = -det;
        }
        Ok(Rational::from_integer(det) / scale)
    }

    pub fn rank(&self) -> usize {
        let (rows, _) = self.integer_rows();
        reduce(rows, self.cols, Sweep::Forward).pivot_cols.len()
    }

    /// A basis of the right null space `{x : self · x = 0}`.
    ///
    /// One vector per non-pivot column, in column order, each scaled so its
    /// first nonzero entry is 1. A matrix without rows has the standard basis
    /// as its kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rows, _) = self.integer_rows();
        let reduced = reduce(rows, self.cols, Sweep::Forward);
        let rank = reduced.pivot_cols.len();
        let mut is_pivot = vec![false; self.cols];
        for &c in &reduced.pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            // x_free = D (the last pivot, a maximal minor) keeps every other
            // coordinate integral, so back-substitution divides exactly
            let mut v = vec![BigInt::zero(); self.cols];
            v[free] = reduced.pivot.clone();
            for i in (0..rank).rev() {
                let row = &reduced.rows[i];
                let pc = reduced.pivot_cols[i];
                let mut acc = &row[free] * &v[free];
                for &pj in &reduced.pivot_cols[i + 1..] {
                    if !row[pj].is_zero() {
                        acc += &row[pj] * &v[pj];
                    }
                }
                v[pc] = exact_div(-acc, &row[pc]);
            }
            basis.push(normalize_first_nonzero(v));
        }
        basis
    }

    /// Exact inverse; `Singular` when the determinant vanishes.
    pub fn inverse(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut scales = Vec::with_capacity(n);
        let augmented = self
            .row_vectors()
            .enumerate()
            .map(|(i, row)| {
                let (mut ints, factor) = primitive_row(row);
                scales.push(factor);
                ints.extend((0..n).map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                }));
                ints
            })
            .collect();
        let reduced = reduce(augmented, 2 * n, Sweep::GaussJordan);
        if reduced.pivot_cols.len() < n
            || reduced.pivot_cols.iter().enumerate().any(|(i, &c)| i != c)
        {
            return Err(Error::Singular);
        }
        // [S·A | I] ~ [D·I | X]  =>  A⁻¹ = X·S / D
        let mut out = RationalMatrix::zeros(n, n);
        let pivot = Rational::from_integer(reduced.pivot.clone());
        for (i, row) in reduced.rows.iter().enumerate() {
            for j in 0..n {
                let x = Rational::from_integer(row[n + j].clone()) * &scales[j] / &pivot;
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    /// Each row rescaled to a primitive integer vector, with the product of
    /// the rescaling factors (integer row = factor · rational row).
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut total = Rational::one();
        let rows = self
            .row_vectors()
            .map(|row| {
                let (ints, factor) = primitive_row(row);
                total *= factor;
                ints
            })
            .collect();
        (rows, total)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_vectors() {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn row_scale(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Clears denominators, then divides out the content of the row.
fn primitive_row(row: &[Rational]) -> (Vec<BigInt>, Rational) {
    let scale = row_scale(row);
    let mut ints: Vec<BigInt> = row
        .iter()
        .map(|q| q.numer() * (&scale / q.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() || content.is_one() {
        return (ints, Rational::from_integer(scale));
    }
    for x in ints.iter_mut() {
        *x = &*x / &content;
    }
    (ints, Rational::new(scale, content))
}

fn normalize_first_nonzero(v: Vec<BigInt>) -> Vec<Rational> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::one);
    v.into_iter()
        .map(|x| Rational::new(x, lead.clone()))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sweep {
    /// Clear below each pivot only (echelon form).
    Forward,
    /// Clear above and below (reduced echelon form, every pivot equal).
    GaussJordan,
}

struct Reduced {
    rows: Vec<Vec<BigInt>>,
    /// Pivot column of each of the first `pivot_cols.len()` rows.
    pivot_cols: Vec<usize>,
    /// The last pivot used; under `GaussJordan` every pivot row carries it.
    pivot: BigInt,
    swaps: usize,
}

/// Bareiss elimination. Every intermediate entry is a minor of the input,
/// so each division by the previous pivot is exact.
fn reduce(mut a: Vec<Vec<BigInt>>, cols: usize, sweep: Sweep) -> Reduced {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut pivot_cols = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(found) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if found != r {
            a.swap(found, r);
            swaps += 1;
        }
        let pivot_row = std::mem::take(&mut a[r]);
        let p = pivot_row[c].clone();
        let targets = match sweep {
            Sweep::Forward => r + 1..n,
            Sweep::GaussJordan => 0..n,
        };
        for i in targets {
            if i == r {
                continue;
            }
            let row = &mut a[i];
            let factor = std::mem::take(&mut row[c]);
            let start = if sweep == Sweep::Forward { c + 1 } else { 0 };
            for j in start..cols {
                if j == c {
                    continue;
                }
                let mut x = &p * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    x -= &factor * &pivot_row[j];
                }
                row[j] = exact_div(x, &prev);
            }
        }
        a[r] = pivot_row;
        prev = p;
        pivot_cols.push(c);
        r += 1;
    }
    Reduced {
        rows: a,
        pivot_cols,
        pivot: prev,
        swaps,
    }
}

fn exact_div(x: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return x;
    }
    let (q, rem) = x.div_rem(d);
    debug_assert!(rem.is_zero(), "fraction-free step left a remainder");
    q
}
