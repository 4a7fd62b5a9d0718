//! The `verify` bundle: exact and numeric audits of the rank-2 structure on
//! seeded random sequences plus the Fibonacci and Lucas families.

use diffnorm_core::{
    binet_residuals, build, fibonacci, lucas, lucas_fib_identity_holds, numeric_spectral_norm,
    pairwise_square_sum_bruteforce, pairwise_square_sum_closed, spectrum_check, Family, IndexSet, IntegerSequence,
};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

/// Magnitude bound for the exact suites.
pub const EXACT_BOUND: i64 = 1_000_000;
/// Magnitude bound for the floating-point oracle suites.
pub const ORACLE_BOUND: i64 = 10_000;
/// Largest dimension swept exhaustively for minors of order three and up.
pub const MINOR_SWEEP_MAX_N: usize = 7;
/// Largest family member handed to the oracle; `L_70 < 2^52`.
pub const ORACLE_FAMILY_MAX_N: usize = 70;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, cases: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty();
        let noun = if cases == 1 { "case" } else { "cases" };
        let detail = if passed {
            format!("{cases} {noun}")
        } else {
            format!("{} of {cases} failed; first: {}", failures.len(), failures[0])
        };
        Self { name, passed, cases, detail }
    }
}

/// `count` sequences with lengths in `2..=max_n` and terms in `[-bound, bound]`.
pub fn random_sequences(rng: &mut ChaCha8Rng, count: usize, max_n: usize, bound: i64) -> Vec<IntegerSequence> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            let terms = (0..n).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect();
            IntegerSequence::new("random", terms).expect("n >= 2")
        })
        .collect()
}

fn families(max_n: usize) -> Vec<IntegerSequence> {
    (1..=max_n).flat_map(|n| [fibonacci(n).expect("n >= 1"), lucas(n).expect("n >= 1")]).collect()
}

fn constants(max_n: usize) -> Vec<IntegerSequence> {
    (1..=max_n).map(|n| IntegerSequence::from_literal(vec![-17; n]).expect("n >= 1")).collect()
}

pub fn closed_vs_bruteforce(seqs: &[IntegerSequence]) -> Check {
    let failures = seqs
        .iter()
        .filter(|s| pairwise_square_sum_closed(s) != pairwise_square_sum_bruteforce(s))
        .map(|s| s.render())
        .collect();
    Check::new("closed_vs_bruteforce", seqs.len(), failures)
}

pub fn minor_sums(seqs: &[IntegerSequence]) -> Result<Check, CliError> {
    let mut failures = Vec::new();
    for s in seqs.iter().filter(|s| s.len() >= 2) {
        let m = build(s);
        let trace = m.sum_principal_minors(1)?;
        let second = m.sum_principal_minors(2)?;
        if !trace.is_zero() || second != pairwise_square_sum_bruteforce(s) {
            failures.push(format!("n={} trace={trace} two_minor_sum={second}", s.len()));
        }
    }
    Ok(Check::new("minor_sums", seqs.len(), failures))
}

/// Rank 0 for constant input and 2 otherwise, for `A` and for the row-difference transform.
pub fn rank_dichotomy(seqs: &[IntegerSequence]) -> Check {
    let mut failures = Vec::new();
    for s in seqs {
        let m = build(s);
        let want = if s.is_constant() { 0 } else { 2 };
        let (a, b) = (m.exact_rank(), m.row_difference_transform().rank());
        if a != want || b != a {
            failures.push(format!("{} rank(A)={a} rank(B)={b} expected {want}", s.label()));
        }
    }
    Check::new("rank_dichotomy", seqs.len(), failures)
}

/// Every principal minor of order three or more is zero.
pub fn minor_vanishing(seqs: &[IntegerSequence]) -> Result<Check, CliError> {
    let mut failures = Vec::new();
    let mut minors = 0;
    for s in seqs.iter().filter(|s| s.len() <= MINOR_SWEEP_MAX_N) {
        let m = build(s);
        for k in 3..=s.len() {
            for set in IndexSet::all(s.len(), k) {
                minors += 1;
                let v = m.principal_minor(&set)?;
                if !v.is_zero() {
                    failures.push(format!("{} minor {set} = {v}", s.render()));
                }
            }
        }
    }
    Ok(Check::new("minor_vanishing", minors, failures))
}

pub fn cubic_identity(seqs: &[IntegerSequence]) -> Check {
    let failures = seqs.iter().filter(|s| !build(s).cubic_identity_holds()).map(|s| s.render()).collect();
    Check::new("cubic_identity", seqs.len(), failures)
}

/// Relative gap between the Jacobi norm and `√s²`.
pub fn oracle_gap(seq: &IntegerSequence) -> Result<f64, CliError> {
    let exact = pairwise_square_sum_closed(seq).to_f64().unwrap_or(f64::INFINITY).sqrt();
    let numeric = numeric_spectral_norm(&build(seq))?;
    Ok((numeric - exact).abs() / exact.max(1.0))
}

pub fn oracle_norm_agreement(seqs: &[IntegerSequence], tol: f64) -> Result<Check, CliError> {
    let mut failures = Vec::new();
    for s in seqs {
        let gap = oracle_gap(s)?;
        if gap > tol {
            failures.push(format!("{} relative gap {gap:e}", s.label()));
        }
    }
    Ok(Check::new("oracle_norm_agreement", seqs.len(), failures))
}

pub fn spectrum_shape(seqs: &[IntegerSequence], tol: f64) -> Result<Check, CliError> {
    let mut failures = Vec::new();
    for s in seqs.iter().filter(|s| s.len() >= 2) {
        if !spectrum_check(s, tol)? {
            failures.push(format!("{} n={}", s.label(), s.len()));
        }
    }
    Ok(Check::new("spectrum_shape", seqs.len(), failures))
}

/// `L_n = F_{n−1} + F_{n+1}` and the Binet relative residuals for `n = 1..=60`.
pub fn sequence_identities(tol: f64) -> Result<Check, CliError> {
    let mut failures = Vec::new();
    for n in 1..=60 {
        if !lucas_fib_identity_holds(n) {
            failures.push(format!("identity fails at n={n}"));
        }
        let r = binet_residuals(n)?;
        if r.fib_relative() > tol || r.lucas_relative() > tol {
            failures.push(format!("binet residual at n={n}"));
        }
    }
    Ok(Check::new("sequence_identities", 60, failures))
}

/// Runs the full bundle. Exact checks use `cases` random sequences bounded by
/// [`EXACT_BOUND`]; oracle checks use `cases` more bounded by [`ORACLE_BOUND`].
pub fn run_suite(max_n: usize, cases: usize, seed: u64, tol: f64) -> Result<Vec<Check>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exact = random_sequences(&mut rng, cases, max_n, EXACT_BOUND);
    let small = random_sequences(&mut rng, cases.min(50), max_n.min(MINOR_SWEEP_MAX_N), EXACT_BOUND);
    let oracle = random_sequences(&mut rng, cases, max_n, ORACLE_BOUND);

    let fam = families(max_n);
    let mut structural = exact.clone();
    structural.extend(fam.iter().cloned());
    structural.extend(constants(max_n));

    let mut vanishing = families(max_n.min(MINOR_SWEEP_MAX_N));
    vanishing.extend(small);

    let mut numeric = oracle;
    numeric.extend(families(max_n.min(ORACLE_FAMILY_MAX_N)).into_iter().filter(|s| s.len() >= 2));

    Ok(vec![
        closed_vs_bruteforce(&structural),
        minor_sums(&structural)?,
        rank_dichotomy(&structural),
        minor_vanishing(&vanishing)?,
        cubic_identity(&structural),
        oracle_norm_agreement(&numeric, tol)?,
        spectrum_shape(&numeric, tol)?,
        sequence_identities(tol)?,
    ])
}

/// All members `1..=max_n` of a family.
pub fn family_members(family: Family, max_n: usize) -> Result<Vec<IntegerSequence>, CliError> {
    (1..=max_n).map(|n| family.generate(n).map_err(CliError::from)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_defaults() {
        let checks = run_suite(12, 40, 7, 1e-9).unwrap();
        assert_eq!(checks.len(), 8);
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn random_sequences_are_reproducible() {
        let a = random_sequences(&mut ChaCha8Rng::seed_from_u64(3), 5, 10, 100);
        let b = random_sequences(&mut ChaCha8Rng::seed_from_u64(3), 5, 10, 100);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| (2..=10).contains(&s.len())));
    }

    #[test]
    fn failing_check_reports_detail() {
        let c = Check::new("x", 3, vec!["bad".into()]);
        assert!(!c.passed);
        assert_eq!(c.detail, "1 of 3 failed; first: bad");
    }
}
