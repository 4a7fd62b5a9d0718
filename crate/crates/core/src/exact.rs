//! Dense square matrices over the integers with fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Row-major square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    /// Builds from a 0-indexed generator `f(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("expected {n} columns in every row")));
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j].clone().into()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-indexed `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.n != rhs.n {
            return Err(Error::Dimension(format!("cannot multiply {0}x{0} by {1}x{1}", self.n, rhs.n)));
        }
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Submatrix on the given 0-indexed rows and columns.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]).clone())
    }

    /// Entries as `i64` if every one fits.
    pub fn to_i64_entries(&self) -> Option<Vec<i64>> {
        self.data.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss(self.data.clone(), self.n).rank
    }

    /// Exact determinant; 1 for the empty matrix.
    pub fn determinant(&self) -> BigInt {
        let out = bareiss(self.data.clone(), self.n);
        if out.rank < self.n {
            BigInt::zero()
        } else if out.swaps % 2 == 1 {
            -out.last_pivot
        } else {
            out.last_pivot
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

struct Elimination {
    rank: usize,
    swaps: usize,
    last_pivot: BigInt,
}

/// Bareiss elimination with column skipping, so it also works on singular input.
///
/// After processing pivot row `r`, every entry below and to the right equals a
/// `(r+2)`-minor of the original matrix, so the division by the previous pivot is exact.
fn bareiss(mut a: Vec<BigInt>, n: usize) -> Elimination {
    let mut rank = 0;
    let mut swaps = 0;
    let mut prev = BigInt::one();
    for col in 0..n {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&r| !a[r * n + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..n {
                a.swap(p * n + j, rank * n + j);
            }
            swaps += 1;
        }
        let pivot = a[rank * n + col].clone();
        for i in rank + 1..n {
            let lead = a[i * n + col].clone();
            for j in col + 1..n {
                let v = &a[i * n + j] * &pivot - &lead * &a[rank * n + j];
                a[i * n + j] = v / &prev;
            }
            a[i * n + col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Elimination { rank, swaps, last_pivot: prev }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn determinants_small() {
        assert_eq!(m(&[]).determinant(), BigInt::one());
        assert_eq!(m(&[vec![7]]).determinant(), BigInt::from(7));
        assert_eq!(m(&[vec![0, -1], vec![1, 0]]).determinant(), BigInt::from(1));
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
        // needs a row swap at the second pivot
        assert_eq!(m(&[vec![1, 2, 3], vec![2, 4, 5], vec![1, 3, 4]]).determinant(), BigInt::from(1));
        assert_eq!(m(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]).determinant(), BigInt::from(0));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        fn cofactor(a: &[Vec<i64>]) -> i64 {
            if a.len() == 1 {
                return a[0][0];
            }
            (0..a.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = a[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * a[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let a = vec![vec![3, -1, 4, 1], vec![5, 9, -2, 6], vec![5, 3, 5, -8], vec![9, 7, 9, 3]];
        assert_eq!(m(&a).determinant(), BigInt::from(cofactor(&a)));
    }

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::zeros(4).rank(), 0);
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).rank(), 1);
        assert_eq!(m(&[vec![0, 0, 1], vec![0, 0, 2], vec![0, 0, 0]]).rank(), 1);
        assert_eq!(m(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).rank(), 2);
    }

    #[test]
    fn multiply_and_transpose() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(a.mul(&a).unwrap(), m(&[vec![7, 10], vec![15, 22]]));
        assert_eq!(a.transpose(), m(&[vec![1, 3], vec![2, 4]]));
        assert_eq!(a.trace(), BigInt::from(5));
        assert!(a.mul(&IntMatrix::zeros(3)).is_err());
    }
}
