//! Seeded workloads shared by the criterion benches.

use diffnorm_core::IntegerSequence;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `n` uniform terms in `[-bound, bound]`, reproducible from `seed`.
pub fn random_sequence(n: usize, bound: i64, seed: u64) -> IntegerSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = (0..n).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect();
    IntegerSequence::new("random", terms).expect("n >= 1")
}
