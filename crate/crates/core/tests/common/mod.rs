#![allow(dead_code)]

use diffnorm_core::IntegerSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Determinant by the Leibniz permutation expansion.
pub fn leibniz_det(a: &[Vec<BigInt>]) -> BigInt {
    fn go(a: &[Vec<BigInt>], row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut BigInt) {
        let n = a.len();
        if row == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = BigInt::one();
            for (i, &c) in perm.iter().enumerate() {
                term *= &a[i][c];
            }
            if inversions % 2 == 1 {
                *acc -= term;
            } else {
                *acc += term;
            }
            return;
        }
        for c in 0..n {
            if !used[c] {
                used[c] = true;
                perm.push(c);
                go(a, row + 1, used, perm, acc);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut acc = BigInt::zero();
    go(a, 0, &mut vec![false; a.len()], &mut Vec::new(), &mut acc);
    acc
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(a: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        a.iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(p, rank);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn seq_of(v: &[i64]) -> IntegerSequence {
    IntegerSequence::from_literal(v.iter().copied()).unwrap()
}

pub fn int_seq(len: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, len)
}
