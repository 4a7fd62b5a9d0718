//! The difference matrix `A = [x_i − x_j]` and its exact structure: the
//! row-difference transform, rank, principal minors and the trinomial
//! characteristic polynomial.
//!
//! Only the real skew-symmetric `A` is stored. Quantities for the Hermitian
//! matrix `iA` follow by scaling each k-minor with `i^k`; for `k = 2` that is a
//! sign flip.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::sequences::IntegerSequence;

/// Upper bound on the number of index sets visited by [`sum_principal_minors`].
/// Equal to `C(16, 8)`, the widest layer of a full sweep at `n = 16`.
pub const MAX_MINOR_SUBSETS: u64 = 12_870;

/// Exact `n × n` matrix with entry `(i, j) = x_i − x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceMatrix {
    source: IntegerSequence,
    entries: IntMatrix,
}

/// Builds the difference matrix of `seq`.
pub fn build(seq: &IntegerSequence) -> DifferenceMatrix {
    let x = seq.terms();
    let entries = IntMatrix::from_fn(x.len(), |i, j| &x[i] - &x[j]);
    DifferenceMatrix { source: seq.clone(), entries }
}

impl DifferenceMatrix {
    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    pub fn source(&self) -> &IntegerSequence {
        &self.source
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.entries
    }

    /// Entry `(i, j)`, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> Option<&BigInt> {
        let n = self.dim();
        if (1..=n).contains(&i) && (1..=n).contains(&j) {
            Some(self.entries.get(i - 1, j - 1))
        } else {
            None
        }
    }

    /// Subtracts row `i−1` from row `i` for `i = n, n−1, …, 2`.
    ///
    /// Row 1 is untouched and every later row `i` becomes the constant row
    /// `x_i − x_{i−1}`.
    pub fn row_difference_transform(&self) -> IntMatrix {
        let a = &self.entries;
        let n = a.dim();
        // descending order reads only original rows, so no copy-on-write juggling
        IntMatrix::from_fn(n, |i, j| if i == 0 { a.get(0, j).clone() } else { a.get(i, j) - a.get(i - 1, j) })
    }

    pub fn exact_rank(&self) -> usize {
        self.entries.rank()
    }

    /// Determinant of the submatrix on rows and columns `set`.
    pub fn principal_minor(&self, set: &IndexSet) -> Result<BigInt> {
        if set.max_index().is_some_and(|m| m > self.dim()) {
            return Err(Error::Index(format!("index set {set} exceeds dimension {}", self.dim())));
        }
        let zero_based: Vec<usize> = set.indices().iter().map(|i| i - 1).collect();
        Ok(self.entries.principal_submatrix(&zero_based).determinant())
    }

    /// Sum of all `C(n, k)` principal k-minors of `A` (not `iA`).
    pub fn sum_principal_minors(&self, k: usize) -> Result<BigInt> {
        let n = self.dim();
        if !(1..=n).contains(&k) {
            return Err(Error::Index(format!("minor order {k} outside 1..={n}")));
        }
        let count: u64 = binomial(n as u64, k as u64);
        if count > MAX_MINOR_SUBSETS {
            return Err(Error::Dimension(format!(
                "C({n}, {k}) = {count} principal minors exceeds the enumeration cap {MAX_MINOR_SUBSETS}"
            )));
        }
        let mut total = BigInt::zero();
        for combo in (0..n).combinations(k) {
            total += self.entries.principal_submatrix(&combo).determinant();
        }
        Ok(total)
    }

    /// `A³ + s²·A = 0` with `s²` the sum of principal 2-minors, evaluated exactly.
    pub fn cubic_identity_holds(&self) -> bool {
        let s_squared = self.sum_principal_minors(2).unwrap_or_else(|_| self.pairwise_square_sum());
        if let Some(holds) = self.cubic_identity_i128(&s_squared) {
            return holds;
        }
        let a = &self.entries;
        let a2 = a.mul(a).expect("square");
        let a3 = a2.mul(a).expect("square");
        let n = a.dim();
        (0..n).all(|i| (0..n).all(|j| (a3.get(i, j) + &s_squared * a.get(i, j)).is_zero()))
    }

    // s² from the Gram trace, used only when the minor enumeration is capped.
    fn pairwise_square_sum(&self) -> BigInt {
        self.entries.rows().flatten().map(|v| v * v).sum::<BigInt>() / 2
    }

    // Checked machine-integer path; None on any overflow.
    fn cubic_identity_i128(&self, s_squared: &BigInt) -> Option<bool> {
        let n = self.dim();
        let a: Vec<i128> = self.entries.to_i64_entries()?.into_iter().map(i128::from).collect();
        let s2 = i128::try_from(s_squared).ok()?;
        let mut a2 = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = a[i * n + k];
                for j in 0..n {
                    a2[i * n + j] = a2[i * n + j].checked_add(lhs.checked_mul(a[k * n + j])?)?;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = s2.checked_mul(a[i * n + j])?;
                for k in 0..n {
                    acc = acc.checked_add(a2[i * n + k].checked_mul(a[k * n + j])?)?;
                }
                if acc != 0 {
                    return Some(false);
                }
            }
        }
        Some(true)
    }
}

impl fmt::Display for DifferenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.entries.fmt(f)
    }
}

/// Strictly increasing 1-based indices `i_1 < i_2 < … < i_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::Index("indices are 1-based".into()));
        }
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Index(format!("indices {indices:?} are not strictly increasing")));
        }
        Ok(Self { indices })
    }

    /// Validates against a dimension as well.
    pub fn within(indices: Vec<usize>, n: usize) -> Result<Self> {
        let set = Self::new(indices)?;
        if set.max_index().is_some_and(|m| m > n) {
            return Err(Error::Index(format!("index set {set} exceeds dimension {n}")));
        }
        Ok(set)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn max_index(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// All k-subsets of `1..=n` in lexicographic order.
    pub fn all(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
        (1..=n).combinations(k).map(|indices| IndexSet { indices })
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.indices.iter().join(","))
    }
}

/// Trinomial characteristic polynomial of a difference matrix.
///
/// For `A` it is `λⁿ + s²·λⁿ⁻²`; for `iA` it is `λⁿ − s²·λⁿ⁻²`. The `λⁿ⁻¹`
/// coefficient vanishes because the trace is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub n: usize,
    pub s_squared: BigInt,
}

/// Characteristic polynomial with `s²` read off the principal 2-minors.
pub fn char_poly(seq: &IntegerSequence) -> Result<CharPoly> {
    let n = seq.len();
    if n < 2 {
        return Err(Error::Dimension("characteristic polynomial needs n >= 2".into()));
    }
    let s_squared = build(seq).sum_principal_minors(2)?;
    Ok(CharPoly { n, s_squared })
}

impl CharPoly {
    /// Coefficient of `λⁿ⁻¹`; the negated trace.
    pub fn a1(&self) -> BigInt {
        BigInt::zero()
    }

    /// Coefficient of `λⁿ⁻²` for `iA`.
    pub fn a2_hermitian(&self) -> BigInt {
        -self.s_squared.clone()
    }

    /// Coefficient of `λⁿ⁻²` for `A`.
    pub fn a2_skew(&self) -> BigInt {
        self.s_squared.clone()
    }

    /// Dense coefficients of the `iA` polynomial, highest degree first.
    pub fn hermitian_coefficients(&self) -> Vec<BigInt> {
        self.coefficients(self.a2_hermitian())
    }

    /// Dense coefficients of the `A` polynomial, highest degree first.
    pub fn skew_coefficients(&self) -> Vec<BigInt> {
        self.coefficients(self.a2_skew())
    }

    fn coefficients(&self, a2: BigInt) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); self.n + 1];
        c[0] = BigInt::from(1);
        c[2] = a2;
        c
    }

    /// Evaluates the `iA` polynomial at an integer point.
    pub fn eval_hermitian(&self, lambda: &BigInt) -> BigInt {
        let low = lambda.pow(self.n as u32 - 2);
        &low * lambda * lambda - &self.s_squared * &low
    }

    pub fn render_hermitian(&self) -> String {
        render(self.n, &self.a2_hermitian())
    }

    pub fn render_skew(&self) -> String {
        render(self.n, &self.a2_skew())
    }
}

fn power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "λ".to_string(),
        _ => format!("λ^{k}"),
    }
}

fn render(n: usize, a2: &BigInt) -> String {
    let lead = power(n);
    if a2.is_zero() {
        return lead;
    }
    let sign = if a2.is_negative() { '-' } else { '+' };
    let tail = power(n - 2);
    let mag = a2.abs();
    if tail.is_empty() {
        format!("{lead} {sign} {mag}")
    } else {
        format!("{lead} {sign} {mag}{tail}")
    }
}
