//! Exact rational matrices: fraction-free rank, division-free characteristic
//! polynomial, and determinants of matrices with polynomial entries.
//!
//! The characteristic polynomial uses Berkowitz's division-free algorithm on
//! an integer-scaled copy of the matrix, so no rational arithmetic ever enters
//! the O(n^4) kernel; the result is rescaled back to a monic rational
//! polynomial. Rank uses Bareiss fraction-free elimination, where every
//! intermediate entry is a minor of the (scaled) input.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{to_f64, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
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

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> Rat {
        let mut t = Rat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn matmul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        RatMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    if !self[(i, k)].is_zero() {
                        acc += &self[(i, k)] * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product, blocks of `other` scaled by entries of `self`.
    pub fn kronecker(&self, other: &RatMatrix) -> RatMatrix {
        RatMatrix::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            &self[(i / other.rows, j / other.cols)] * &other[(i % other.rows, j % other.cols)]
        })
    }

    /// Principal submatrix dropping row and column `k` (0-based).
    pub fn principal_submatrix(&self, k: usize) -> RatMatrix {
        assert!(self.is_square() && k < self.rows);
        RatMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let ii = if i < k { i } else { i + 1 };
            let jj = if j < k { j } else { j + 1 };
            self[(ii, jj)].clone()
        })
    }

    /// Symmetric permutation: entry (i,j) of the result is (perm[i], perm[j]).
    pub fn permuted(&self, perm: &[usize]) -> RatMatrix {
        assert!(self.is_square() && perm.len() == self.rows);
        RatMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(perm[i], perm[j])].clone()
        })
    }

    /// Scale to an integer matrix: returns row-major `BigInt` data and the
    /// common denominator `c` such that `self = (1/c) * data`.
    fn to_scaled_int(&self) -> (Vec<BigInt>, BigInt) {
        let mut c = BigInt::one();
        for a in &self.data {
            c = c.lcm(a.denom());
        }
        let data = self
            .data
            .iter()
            .map(|a| a.numer() * (&c / a.denom()))
            .collect();
        (data, c)
    }

    /// Monic characteristic polynomial `det(xI - M)`, exact.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::invalid("charpoly of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let (ints, c) = self.to_scaled_int();
        let desc = int_berkowitz(n, &ints);
        // det(xI - M) = c^-n * det((cx)I - N): coefficient of x^k picks up c^(k-n).
        let c_rat = Rat::from_integer(c);
        let mut power = Rat::one();
        for _ in 0..n {
            power /= &c_rat;
        }
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            coeffs.push(Rat::from_integer(desc[n - k].clone()) * &power);
            power *= &c_rat;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Exact rank over Q via Bareiss fraction-free elimination.
    pub fn exact_rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (ints, _) = self.to_scaled_int();
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| ints[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in (r + 1)..self.rows {
                for j in (c + 1)..self.cols {
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    let (q, rem) = t.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division not exact");
                    m[i][j] = q;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }

    /// Row-major f64 image (numeric cross-checks only).
    pub fn to_f64_rowmajor(&self) -> Vec<f64> {
        self.data.iter().map(to_f64).collect()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", crate::rat::format_rat(&self[(i, j)]))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Berkowitz division-free characteristic polynomial of an integer matrix.
/// Returns descending coefficients of `det(xI - A)` (length n+1, leading 1).
fn int_berkowitz(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let at = |i: usize, j: usize| -> &BigInt { &a[i * n + j] };
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        // A_k = [[A_{k-1}, col], [row, diag]]; s_j = row * A_{k-1}^j * col.
        let diag = at(k - 1, k - 1).clone();
        let mut s = Vec::with_capacity(k.saturating_sub(1));
        if k > 1 {
            let mut v: Vec<BigInt> = (0..k - 1).map(|i| at(i, k - 1).clone()).collect();
            for j in 0..k - 1 {
                let mut dot = BigInt::zero();
                for i in 0..k - 1 {
                    dot += at(k - 1, i) * &v[i];
                }
                s.push(dot);
                if j + 2 < k {
                    let mut nv = vec![BigInt::zero(); k - 1];
                    for (i, nvi) in nv.iter_mut().enumerate() {
                        for l in 0..k - 1 {
                            if !at(i, l).is_zero() {
                                *nvi += at(i, l) * &v[l];
                            }
                        }
                    }
                    v = nv;
                }
            }
        }
        let mut q = Vec::with_capacity(k + 1);
        q.push(BigInt::one());
        q.push(-diag);
        for si in s {
            q.push(-si);
        }
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, ni) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if i >= j && i - j < q.len() {
                    *ni += &q[i - j] * pj;
                }
            }
        }
        p = next;
    }
    p
}

/// Determinant of a square matrix with polynomial entries, via Bareiss
/// elimination over Q[x] (every division is exact).
pub fn polymat_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one();
    let mut sign_flip = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        if k + 1 == n {
            break;
        }
        let pivot = a[k][k].clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = pivot.mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev);
            }
            a[i][k] = Poly::zero();
        }
        prev = pivot;
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}
