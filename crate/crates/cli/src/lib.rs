//! Library side of the `diffnorm` command-line tool.
//!
//! [`run`] dispatches a [`CommandRequest`] to `diffnorm-core` and returns a
//! [`RunReport`]; [`RunReport::render`] produces the text, CSV or JSON payload.

pub mod args;
pub mod error;
pub mod report;
pub mod request;
pub mod verify;

use diffnorm_core::{build, char_poly, erratum_report, numeric_spectral_norm, spectral_summary};

pub use error::{exit, CliError};
pub use report::{Outcome, RunReport};
pub use request::{Command, CommandRequest, Format, SequenceSource};
pub use verify::Check;

pub fn run(request: &CommandRequest) -> Result<RunReport, CliError> {
    request.validate()?;
    let tol = request.tol;
    let (outcome, verdicts) = match &request.command {
        Command::Norm { source } => {
            let seq = source.resolve()?;
            let summary = spectral_summary(&seq);
            let oracle_norm = numeric_spectral_norm(&build(&seq))?;
            let gap = (oracle_norm - summary.spectral_norm).abs() / summary.spectral_norm.max(1.0);
            let check = Check {
                name: "oracle_norm_agreement",
                passed: gap <= tol,
                cases: 1,
                detail: format!("relative gap {gap:e}"),
            };
            (Outcome::Norm { sequence: seq.render(), summary, oracle_norm }, vec![check])
        }
        Command::CharPoly { source } => {
            let seq = source.resolve()?;
            let poly = char_poly(&seq)?;
            let m = build(&seq);
            let checks = vec![
                verify::minor_sums(std::slice::from_ref(&seq))?,
                Check {
                    name: "cubic_identity",
                    passed: m.cubic_identity_holds(),
                    cases: 1,
                    detail: "A^3 + s^2 A = 0".into(),
                },
            ];
            (Outcome::CharPoly { sequence: seq.render(), poly }, checks)
        }
        Command::Verify { max_n, cases, seed } => (Outcome::Verify, verify::run_suite(*max_n, *cases, *seed, tol)?),
        Command::Table { family, max_n } => {
            let rows = verify::family_members(*family, *max_n)?.iter().map(spectral_summary).collect();
            (Outcome::Table { family: *family, rows }, Vec::new())
        }
        Command::Erratum { family, max_n } => {
            let report = erratum_report(*family, *max_n)?;
            let checks = vec![
                Check {
                    name: "direct_formula",
                    passed: report.rows.iter().all(|r| r.direct_matches()),
                    cases: report.rows.len(),
                    detail: mismatch_detail(report.rows.iter().filter(|r| !r.direct_matches()).map(|r| r.n)),
                },
                Check {
                    name: "cased_printed",
                    passed: report.printed_mismatches().is_empty(),
                    cases: report.rows.len(),
                    detail: mismatch_detail(report.printed_mismatches().into_iter()),
                },
                Check {
                    name: "cased_corrected",
                    passed: report.rows.iter().all(|r| r.verdict_corrected.is_match()),
                    cases: report.rows.len(),
                    detail: mismatch_detail(
                        report.rows.iter().filter(|r| !r.verdict_corrected.is_match()).map(|r| r.n),
                    ),
                },
            ];
            (Outcome::Erratum(report), checks)
        }
    };
    let exit_code = if verdicts.iter().all(|c| c.passed) { exit::SUCCESS } else { exit::MISMATCH };
    Ok(RunReport { request: request.clone(), outcome, verdicts, exit_code })
}

fn mismatch_detail(ns: impl Iterator<Item = usize>) -> String {
    let ns: Vec<String> = ns.map(|n| n.to_string()).collect();
    if ns.is_empty() {
        "all rows match".into()
    } else {
        format!("mismatch at n = {}", ns.join(" "))
    }
}
