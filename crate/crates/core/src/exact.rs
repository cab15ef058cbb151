//! Square integer matrices with exact determinant, rank and
//! positive-semidefiniteness tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense square matrix of `i64` entries, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    order: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix { order, data: vec![0; order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let order = rows.len();
        assert!(rows.iter().all(|r| r.len() == order), "matrix must be square");
        IntMatrix { order, data: rows.into_iter().flatten().collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.order + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.order.max(1)).take(self.order).map(<[i64]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: i64) -> Self {
        let mut m = self.clone();
        for i in 0..self.order {
            m.set(i, i, m.get(i, i) + shift);
        }
        m
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal(&self, indices: &[usize]) -> Self {
        let mut m = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.order;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a: Vec<Vec<BigInt>> =
            self.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
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
        sign * a[n - 1][n - 1].clone()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.rational_rows();
        let n = self.order;
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..n {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[rank][col];
                    for c in col..n {
                        let d = &f * &a[rank][c];
                        a[r][c] -= d;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact positive-semidefiniteness of a symmetric matrix by symmetric
    /// Gaussian elimination over the rationals: a negative pivot, or a zero
    /// pivot with a nonzero entry in its row, certifies a negative eigenvalue.
    pub fn is_positive_semidefinite(&self) -> bool {
        assert!(self.is_symmetric(), "PSD test needs a symmetric matrix");
        let n = self.order;
        let mut a = self.rational_rows();
        for k in 0..n {
            let pivot = a[k][k].clone();
            if pivot.is_negative() {
                return false;
            }
            if pivot.is_zero() {
                if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                    return false;
                }
                continue;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let d = &f * &a[k][j];
                    a[i][j] -= d;
                }
            }
        }
        true
    }

    fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows().into_iter().map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect()).collect()
    }
}

impl From<Vec<Vec<i64>>> for IntMatrix {
    fn from(rows: Vec<Vec<i64>>) -> Self {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let rows = vec![vec![2, -1, 0, 3], vec![0, 0, 4, 1], vec![5, 2, -2, 0], vec![1, 1, 1, 1]];
        let m = IntMatrix::from_rows(rows.clone());
        assert_eq!(m.determinant(), BigInt::from(cofactor_det(&rows)));
        let singular = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.determinant().is_zero());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn psd_detection() {
        assert!(IntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).is_positive_semidefinite());
        assert!(IntMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).is_positive_semidefinite());
        assert!(!IntMatrix::from_rows(vec![vec![1, 2], vec![2, 1]]).is_positive_semidefinite());
        assert!(!IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).is_positive_semidefinite());
        assert!(IntMatrix::zeros(3).is_positive_semidefinite());
    }

    #[test]
    fn serde_as_nested_rows() {
        let m = IntMatrix::from_rows(vec![vec![3, 1], vec![1, 3]]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[3,1],[1,3]]");
    }
}
