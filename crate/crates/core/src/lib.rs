//! Exact and numeric analysis of difference matrices `A = [x_i − x_j]` built
//! from integer sequences.
//!
//! `A` is skew-symmetric with rank 0 or 2, so every principal minor of order
//! three or more vanishes and the characteristic polynomial collapses to
//! `λⁿ + s²·λⁿ⁻²` with `s² = Σ_{r<s}(x_r − x_s)²`. The spectral norm is `√s²`.
//!
//! - [`sequences`]: explicit, Fibonacci, Lucas and linear-recurrence inputs.
//! - [`diffmatrix`]: the exact matrix, its rank, minors and polynomial.
//! - [`spectral`]: closed-form norms and the Fibonacci/Lucas formula checks.
//! - [`oracle`]: an independent Jacobi eigensolver on `AᵀA`.

pub mod diffmatrix;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod sequences;
pub mod spectral;

pub use diffmatrix::{build, char_poly, CharPoly, DifferenceMatrix, IndexSet};
pub use error::{Error, Result};
pub use exact::IntMatrix;
pub use oracle::{gram, jacobi_eigen, numeric_spectral_norm, spectrum_check, DenseSymMatrix, EigenResult};
pub use sequences::{
    binet_residuals, fibonacci, linear_recurrence, lucas, lucas_fib_identity_holds, parse_sequence_text,
    BinetResidualReport, Family, IntegerSequence,
};
pub use spectral::{
    erratum_report, fibonacci_norm_cased, fibonacci_norm_direct, lucas_norm_cased, lucas_norm_direct,
    pairwise_square_sum_bruteforce, pairwise_square_sum_closed, spectral_summary, ErratumReport, ErratumRow,
    LucasVariant, SpectralSummary, Verdict,
};
