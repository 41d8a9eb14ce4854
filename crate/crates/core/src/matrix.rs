//! Dense integer matrices, generic over the integer type.
//!
//! The algorithms only assume a signed Euclidean integer type
//! (`num_integer::Integer + num_traits::Signed`), so they run identically
//! over machine integers and over `BigInt`. The crate-level alias
//! [`crate::IntMatrix`] pins `BigInt` as the concrete scalar used by the
//! group-theoretic callers; adversarial presentations stay exact there.

use num_integer::Integer;
use num_traits::Signed;
use std::fmt;

use crate::error::{Error, Result};

/// A `rows x cols` matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat({}x{})", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl<T: Integer + Signed + Clone> Mat<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Square matrix with the given diagonal, zeros elsewhere.
    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = self[(i, k)].clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return T::zero();
                };
                a.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[(k, k)].clone() * a[(i, j)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = num / prev.clone();
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_j
    pub(crate) fn row_sub_scaled(&mut self, i: usize, j: usize, q: &T) {
        for c in 0..self.cols {
            let delta = q.clone() * self[(j, c)].clone();
            self[(i, c)] = self[(i, c)].clone() - delta;
        }
    }

    /// col_i -= q * col_j
    pub(crate) fn col_sub_scaled(&mut self, i: usize, j: usize, q: &T) {
        for r in 0..self.rows {
            let delta = q.clone() * self[(r, j)].clone();
            self[(r, i)] = self[(r, i)].clone() - delta;
        }
    }

    /// row_i += row_j
    pub(crate) fn row_add(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = self[(j, c)].clone();
            self[(i, c)] = self[(i, c)].clone() + v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -self[(i, c)].clone();
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m64(rows: usize, cols: usize, e: &[i64]) -> Mat<i64> {
        Mat::new(rows, cols, e.to_vec()).unwrap()
    }

    #[test]
    fn construction_checks_length() {
        assert!(Mat::<i64>::new(2, 2, vec![1, 2, 3]).is_err());
        assert!(Mat::<i64>::new(0, 3, vec![]).is_ok());
    }

    #[test]
    fn product() {
        let a = m64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = m64(3, 2, &[7, 8, 9, 10, 11, 12]);
        assert_eq!(a.mul(&b), m64(2, 2, &[58, 64, 139, 154]));
    }

    #[test]
    fn determinants() {
        assert_eq!(m64(2, 2, &[2, 4, 0, 2]).det(), 4);
        assert_eq!(m64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).det(), 0);
        assert_eq!(m64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]).det(), -1);
        let big = Mat::<BigInt>::diagonal(&[BigInt::from(1u32) << 80, BigInt::from(3)]);
        assert_eq!(big.det(), BigInt::from(3) << 80);
        assert_eq!(Mat::<i64>::identity(0).det(), 1);
    }
}
