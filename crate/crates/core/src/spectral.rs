//! Closed-form spectral norms of difference matrices and the Fibonacci/Lucas
//! norm formulas.
//!
//! The nonzero eigenvalues of `iA` are `±s` with `s² = Σ_{r<s}(x_r − x_s)²`, so
//! the spectral norm is `s`, not `s²`. [`SpectralSummary`] keeps both.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::diffmatrix::build;
use crate::error::{Error, Result};
use crate::sequences::{fibonacci_number, lucas_number, Family, IntegerSequence};

/// Inputs up to this length get the closed form cross-checked against brute force.
pub const BRUTE_FORCE_CHECK_MAX_N: usize = 64;

/// `Σ_{1≤r<s≤n} (x_r − x_s)²` by the double loop.
pub fn pairwise_square_sum_bruteforce(seq: &IntegerSequence) -> BigInt {
    let x = seq.terms();
    let mut total = BigInt::zero();
    for r in 0..x.len() {
        for s in r + 1..x.len() {
            let d = &x[r] - &x[s];
            total += &d * &d;
        }
    }
    total
}

/// The same sum as `n·Σx² − (Σx)²`, in O(n).
pub fn pairwise_square_sum_closed(seq: &IntegerSequence) -> BigInt {
    let x = seq.terms();
    let sum: BigInt = x.iter().sum();
    let sum_sq: BigInt = x.iter().map(|v| v * v).sum();
    BigInt::from(x.len()) * sum_sq - &sum * &sum
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    pub n: usize,
    /// `Σ_{r<s}(x_r − x_s)²`, the squared spectral norm.
    pub s_squared: BigInt,
    /// `√s²`, rounded.
    pub spectral_norm: f64,
    pub frobenius_norm: f64,
    /// The pairwise sum reported as the norm itself, without the square root.
    pub closed_form_value: BigInt,
}

pub fn spectral_summary(seq: &IntegerSequence) -> SpectralSummary {
    let s_squared = pairwise_square_sum_closed(seq);
    if seq.len() <= BRUTE_FORCE_CHECK_MAX_N {
        assert_eq!(s_squared, pairwise_square_sum_bruteforce(seq), "closed form disagrees with brute force");
    }
    let frobenius_squared: BigInt = build(seq).as_matrix().rows().flatten().map(|v| v * v).sum();
    SpectralSummary {
        n: seq.len(),
        spectral_norm: to_f64(&s_squared).sqrt(),
        frobenius_norm: to_f64(&frobenius_squared).sqrt(),
        closed_form_value: s_squared.clone(),
        s_squared,
    }
}

fn to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Range { value: 0, min: 1, max: usize::MAX })
    } else {
        Ok(())
    }
}

/// `Σ_{1≤r<s≤n} term(r)·term(s)`; zero for `n = 1`.
fn cross_products(n: usize, term: fn(usize) -> BigInt) -> BigInt {
    let t: Vec<BigInt> = (1..=n).map(term).collect();
    // Σ_{r<s} t_r t_s via running prefix sums
    let mut prefix = BigInt::zero();
    let mut total = BigInt::zero();
    for v in &t {
        total += &prefix * v;
        prefix += v;
    }
    total
}

/// `Σ_{r=1}^{n−1} Σ_{s=r+1}^{n} L_{r+s}`.
fn lucas_index_sum(n: usize) -> BigInt {
    let lucas: Vec<BigInt> = (0..=2 * n).map(lucas_number).collect();
    let mut total = BigInt::zero();
    for r in 1..n {
        for s in r + 1..=n {
            total += &lucas[r + s];
        }
    }
    total
}

/// `L_n − 2` for even `n`, `L_n − 1` for odd `n`.
fn parity_term(n: usize) -> BigInt {
    lucas_number(n) - if n.is_multiple_of(2) { 2 } else { 1 }
}

/// `(n−1)·F_{n+1}·F_n − 2·Σ_{r<s} F_r·F_s`.
pub fn fibonacci_norm_direct(n: usize) -> Result<BigInt> {
    require_positive(n)?;
    let head = BigInt::from(n - 1) * fibonacci_number(n + 1) * fibonacci_number(n);
    Ok(head - 2 * cross_products(n, fibonacci_number))
}

/// `(n−1)·F_{n+1}·F_n − (2/5)·(L_n − c + Σ_{r<s} L_{r+s})` with `c = 2` for even
/// `n` and `c = 1` for odd `n`, kept exact.
pub fn fibonacci_norm_cased(n: usize) -> Result<BigRational> {
    require_positive(n)?;
    let head = BigInt::from(n - 1) * fibonacci_number(n + 1) * fibonacci_number(n);
    let inner = parity_term(n) + lucas_index_sum(n);
    let two_fifths = BigRational::new(BigInt::from(2), BigInt::from(5));
    Ok(BigRational::from_integer(head) - two_fifths * BigRational::from_integer(inner))
}

/// `(n−1)·(L_{n+1}·L_n − 2) − 2·Σ_{r<s} L_r·L_s`.
pub fn lucas_norm_direct(n: usize) -> Result<BigInt> {
    require_positive(n)?;
    let head = BigInt::from(n - 1) * (lucas_number(n + 1) * lucas_number(n) - 2);
    Ok(head - 2 * cross_products(n, lucas_number))
}

/// Which grouping of the Lucas even/odd formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LucasVariant {
    /// `−2·(L_n − c + Σ L_{r+s})`.
    AsPrinted,
    /// `−2·(Σ L_{r+s} − (L_n − c))`, from `L_r·L_s = L_{r+s} + (−1)^r·L_{s−r}`.
    SignCorrected,
}

pub fn lucas_norm_cased(n: usize, variant: LucasVariant) -> Result<BigInt> {
    require_positive(n)?;
    let head = BigInt::from(n - 1) * (lucas_number(n + 1) * lucas_number(n) - 2);
    let inner = match variant {
        LucasVariant::AsPrinted => parity_term(n) + lucas_index_sum(n),
        LucasVariant::SignCorrected => lucas_index_sum(n) - parity_term(n),
    };
    Ok(head - 2 * inner)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn is_match(self) -> bool {
        self == Verdict::Match
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One `n` of an [`ErratumReport`].
///
/// For the Fibonacci family there is a single cased formula, so
/// `cased_corrected` repeats `cased_printed`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErratumRow {
    pub n: usize,
    pub ground_truth: BigInt,
    pub direct_formula: BigInt,
    pub cased_printed: BigRational,
    pub cased_corrected: BigRational,
    pub verdict_printed: Verdict,
    pub verdict_corrected: Verdict,
}

impl ErratumRow {
    pub fn direct_matches(&self) -> bool {
        self.direct_formula == self.ground_truth
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErratumReport {
    pub family: Family,
    pub rows: Vec<ErratumRow>,
}

impl ErratumReport {
    /// True when the direct formula and both cased variants match on every row.
    pub fn all_match(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.direct_matches() && r.verdict_printed.is_match() && r.verdict_corrected.is_match())
    }

    /// Indices `n` where the printed cased formula disagrees with brute force.
    pub fn printed_mismatches(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.verdict_printed.is_match()).map(|r| r.n).collect()
    }
}

/// Compares the closed norm formulas of `family` with brute force for `n = 1..=max_n`.
pub fn erratum_report(family: Family, max_n: usize) -> Result<ErratumReport> {
    require_positive(max_n)?;
    let rows = (1..=max_n).map(|n| erratum_row(family, n)).collect::<Result<Vec<_>>>()?;
    Ok(ErratumReport { family, rows })
}

fn erratum_row(family: Family, n: usize) -> Result<ErratumRow> {
    let ground_truth = pairwise_square_sum_bruteforce(&family.generate(n)?);
    let (direct_formula, cased_printed, cased_corrected) = match family {
        Family::Fibonacci => {
            let cased = fibonacci_norm_cased(n)?;
            (fibonacci_norm_direct(n)?, cased.clone(), cased)
        }
        Family::Lucas => (
            lucas_norm_direct(n)?,
            BigRational::from_integer(lucas_norm_cased(n, LucasVariant::AsPrinted)?),
            BigRational::from_integer(lucas_norm_cased(n, LucasVariant::SignCorrected)?),
        ),
    };
    let truth = BigRational::from_integer(ground_truth.clone());
    Ok(ErratumRow {
        n,
        verdict_printed: Verdict::of(cased_printed == truth),
        verdict_corrected: Verdict::of(cased_corrected == truth),
        ground_truth,
        direct_formula,
        cased_printed,
        cased_corrected,
    })
}
