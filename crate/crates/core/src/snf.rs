//! Smith normal form over any signed Euclidean integer type.
//!
//! `smith_normal_form(M)` returns `(D, U, V)` with `D = U * M * V`, `U` and
//! `V` unimodular, and `D` diagonal with nonnegative entries satisfying
//! `d_1 | d_2 | ...` (trailing zeros last). Pivoting is deterministic:
//! the entry of smallest nonzero absolute value wins, ties broken by
//! row-then-column position.

use num_integer::Integer;
use num_traits::Signed;

use crate::matrix::Mat;

/// The result of a Smith normal form computation: `d = u * m * v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfDecomposition<T> {
    pub d: Mat<T>,
    pub u: Mat<T>,
    pub v: Mat<T>,
}

impl<T: Integer + Signed + Clone> SnfDecomposition<T> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Diagonal entries `> 1`, i.e. the invariant factors of the cokernel.
    pub fn nontrivial_factors(&self) -> Vec<T> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect()
    }
}

/// Quotient rounded to nearest, so the remainder satisfies `2|r| <= |b|`.
fn div_round<T: Integer + Signed + Clone>(a: &T, b: &T) -> T {
    let (mut q, r) = a.div_rem(b);
    let two_r = r.abs() + r.abs();
    if two_r > b.abs() {
        if (r >= T::zero()) == (b >= &T::zero()) {
            q = q + T::one();
        } else {
            q = q - T::one();
        }
    }
    q
}

fn select_pivot<T: Integer + Signed + Clone>(d: &Mat<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            match &best {
                Some((b, _, _)) if *b <= v => {}
                _ => best = Some((v, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form<T: Integer + Signed + Clone>(m: &Mat<T>) -> SnfDecomposition<T> {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = Mat::identity(rows);
    let mut v = Mat::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = select_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // clear the pivot column; a nonzero remainder is strictly
            // smaller than the pivot, so promote it and start over
            for i in 0..rows {
                if i == t || d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(i, t)], &d[(t, t)]);
                if !q.is_zero() {
                    d.row_sub_scaled(i, t, &q);
                    u.row_sub_scaled(i, t, &q);
                }
                if !d[(i, t)].is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            // clear the pivot row
            for j in 0..cols {
                if j == t || d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, j)], &d[(t, t)]);
                if !q.is_zero() {
                    d.col_sub_scaled(j, t, &q);
                    v.col_sub_scaled(j, t, &q);
                }
                if !d[(t, j)].is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    continue 'reduce;
                }
            }
            // enforce pivot | remaining submatrix: fold an offending row
            // into the pivot row so the next pass shrinks the pivot
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d[(i, j)].is_multiple_of(&d[(t, t)]) {
                        d.row_add(t, i);
                        u.row_add(t, i);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    for i in 0..rows.min(cols) {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }

    SnfDecomposition { d, u, v }
}
