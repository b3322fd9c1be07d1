//! Exact linear algebra over the rationals, just enough to decompose a root
//! on a root configuration.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant of a square integer matrix (Bareiss fraction-free
/// elimination).
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse of a nonsingular integer matrix, kept in rational form.
#[derive(Debug, Clone)]
pub struct RationalInverse {
    n: usize,
    inv: Vec<Vec<BigRational>>,
}

impl RationalInverse {
    /// Inverts the matrix whose COLUMNS are `columns`. Returns `None` when
    /// the columns are linearly dependent.
    pub fn from_columns(columns: &[Vec<i64>]) -> Option<Self> {
        let n = columns.len();
        if columns.iter().any(|c| c.len() != n) {
            return None;
        }
        // Augmented [A | I] with A[r][c] = columns[c][r].
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|c| BigRational::from_integer(columns[c][r].into())).collect();
                row.extend((0..n).map(|c| {
                    if c == r {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            // partial pivoting on magnitude keeps the entries small
            let pivot = (col..n)
                .filter(|&r| !m[r][col].is_zero())
                .max_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()))?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x / &p;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        let inv = m.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(RationalInverse { n, inv })
    }

    /// Coefficients `x` with `Σ_c x_c · columns[c] = v`.
    pub fn solve(&self, v: &[i64]) -> Vec<BigRational> {
        (0..self.n)
            .map(|r| {
                self.inv[r]
                    .iter()
                    .zip(v)
                    .filter(|(_, &b)| b != 0)
                    .fold(BigRational::zero(), |acc, (a, &b)| acc + a * BigInt::from(b))
            })
            .collect()
    }

    /// Like [`RationalInverse::solve`] but insists on an integral answer.
    pub fn solve_integral(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.solve(v)
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    i64::try_from(q.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}
