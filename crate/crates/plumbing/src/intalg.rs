//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers: Smith normal
//! form with transformation matrices, fraction-free determinants,
//! characteristic polynomials, and exact rational sum comparison. No
//! floating point is used anywhere on a verdict path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntAlgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero denominator at position {0}")]
    ZeroDenominator(usize),
}

/// Dense matrix of big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from machine integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
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

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a * &other[(k, j)];
                    out[(i, j)] += term;
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += q * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self[(source, j)] * q;
            self[(target, j)] += t;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self[(i, source)] * q;
            self[(i, target)] += t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V` and a
/// diagonal `D` whose entries form a divisibility chain.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries (nonnegative, divisibility chain).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Nontrivial invariant factors: diagonal entries that are not 1,
    /// with zeros (infinite cyclic factors) last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }
}

/// Smallest-nonzero-pivot Smith normal form with full transformation
/// tracking. Suited to the modest sizes produced by presentations.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if d[(pi, pj)].abs() <= d[(i, j)].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        // Reduce row and column k until the pivot divides everything it
        // meets; remainders become strictly smaller pivots.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, k)] / &d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d[(i, k)].is_zero() {
                    d.swap_rows(k, i);
                    u.swap_rows(k, i);
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(k, j)] / &d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !d[(k, j)].is_zero() {
                    d.swap_cols(k, j);
                    v.swap_cols(k, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must also divide the trailing block for the
            // divisibility chain; pull in a bad row and loop again.
            let mut dirty = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                        dirty = Some(i);
                        break 'scan;
                    }
                }
            }
            match dirty {
                Some(i) => {
                    d.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    SnfResult { d, u, v }
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(a: &IntMatrix) -> Result<BigInt, IntAlgError> {
    if !a.is_square() {
        return Err(IntAlgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = t / &prev;
            }
            m[(i, k)] = BigInt::zero();
        }
        prev = m[(k, k)].clone();
    }
    Ok(sign * m[(n - 1, n - 1)].clone())
}

/// Coefficients of `det(xI - A)`, highest degree first, so the result is
/// `[1, c1, ..., cn]`. Faddeev–LeVerrier; every division is exact.
pub fn char_poly(a: &IntMatrix) -> Result<Vec<BigInt>, IntAlgError> {
    if !a.is_square() {
        return Err(IntAlgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![BigInt::one()];
    let mut m = IntMatrix::zero(n, n);
    for k in 1..=n {
        // M_k = A * (M_{k-1} + c_{k-1} I)
        let mut shifted = m.clone();
        let c_prev = coeffs.last().unwrap().clone();
        for i in 0..n {
            shifted[(i, i)] += &c_prev;
        }
        m = a.mul(&shifted);
        let trace: BigInt = (0..n).map(|i| m[(i, i)].clone()).sum();
        let c = -trace / BigInt::from(k);
        coeffs.push(c);
    }
    Ok(coeffs)
}

/// Exact test of `m = sum_i d_i / b_i`.
pub fn rational_sum_eq(m: &BigInt, b: &[BigInt], d: &[BigInt]) -> Result<bool, IntAlgError> {
    assert_eq!(b.len(), d.len(), "length mismatch");
    if let Some(pos) = b.iter().position(|x| x.is_zero()) {
        return Err(IntAlgError::ZeroDenominator(pos));
    }
    let sum: BigRational = b
        .iter()
        .zip(d)
        .map(|(bi, di)| BigRational::new(di.clone(), bi.clone()))
        .sum();
    Ok(sum == BigRational::from_integer(m.clone()))
}

/// Exact rational sum `sum_i n_i / b_i` (used for the polygonal group test).
pub fn rational_sum(nums: &[BigInt], dens: &[BigInt]) -> Result<BigRational, IntAlgError> {
    assert_eq!(nums.len(), dens.len(), "length mismatch");
    if let Some(pos) = dens.iter().position(|x| x.is_zero()) {
        return Err(IntAlgError::ZeroDenominator(pos));
    }
    Ok(nums
        .iter()
        .zip(dens)
        .map(|(n, d)| BigRational::new(n.clone(), d.clone()))
        .sum())
}

/// Signature of a symmetric integer matrix as `(n_plus, n_zero, n_minus)`,
/// computed exactly: all roots of the characteristic polynomial are real,
/// so Descartes' rule of signs counts positive roots with multiplicity.
pub fn signature_of_char_poly(coeffs: &[BigInt]) -> (usize, usize, usize) {
    let n = coeffs.len() - 1;
    let mut trimmed = coeffs.to_vec();
    let mut n_zero = 0;
    while trimmed.last().is_some_and(Zero::is_zero) && trimmed.len() > 1 {
        trimmed.pop();
        n_zero += 1;
    }
    // Zero coefficients are skipped when counting sign changes.
    let variations = |signs: &[i8]| {
        let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
        nonzero.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let signs: Vec<i8> = trimmed
        .iter()
        .map(|c| {
            if c.is_zero() {
                0
            } else if c.is_positive() {
                1
            } else {
                -1
            }
        })
        .collect();
    let n_plus = variations(&signs);
    // p(-x): flip the sign of odd-degree coefficients.
    let deg = trimmed.len() - 1;
    let neg_signs: Vec<i8> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| if (deg - i) % 2 == 1 { -s } else { s })
        .collect();
    let n_minus = variations(&neg_signs);
    debug_assert_eq!(n_plus + n_zero + n_minus, n);
    (n_plus, n_zero, n_minus)
}
