//! Text, CSV and JSON rendering of a [`RunReport`].
//!
//! Big integers go out as decimal strings in JSON. Floats use Rust's shortest
//! round-trip formatting, so identical requests give identical bytes.

use std::fmt::Write;

use diffnorm_core::{CharPoly, ErratumReport, Family, SpectralSummary};
use serde_json::{json, Value};

use crate::request::{CommandRequest, Format};
use crate::verify::Check;

pub const TABLE_CSV_HEADER: &str = "n,s_squared,spectral_norm,frobenius_norm";
pub const ERRATUM_CSV_HEADER: &str =
    "n,ground_truth,direct,cased_printed,cased_corrected,verdict_printed,verdict_corrected";

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Norm { sequence: String, summary: SpectralSummary, oracle_norm: f64 },
    CharPoly { sequence: String, poly: CharPoly },
    Verify,
    Table { family: Family, rows: Vec<SpectralSummary> },
    Erratum(ErratumReport),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub request: CommandRequest,
    pub outcome: Outcome,
    pub verdicts: Vec<Check>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        match self.request.format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.request.command.name(),
            "input": self.request.to_json(),
            "results": self.results_json(),
            "verdicts": self.verdicts.iter().map(|c| json!({
                "check": c.name,
                "passed": c.passed,
                "cases": c.cases,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    fn results_json(&self) -> Value {
        match &self.outcome {
            Outcome::Norm { sequence, summary, oracle_norm } => {
                let mut v = summary_json(summary);
                v["sequence"] = json!(sequence);
                v["oracle_norm"] = json!(oracle_norm);
                v
            }
            Outcome::CharPoly { sequence, poly } => json!({
                "sequence": sequence,
                "n": poly.n,
                "s_squared": poly.s_squared.to_string(),
                "a1": poly.a1().to_string(),
                "a2_hermitian": poly.a2_hermitian().to_string(),
                "a2_skew": poly.a2_skew().to_string(),
                "hermitian": poly.render_hermitian(),
                "skew": poly.render_skew(),
            }),
            Outcome::Verify => json!({ "passed": self.all_passed() }),
            Outcome::Table { family, rows } => json!({
                "family": family.name(),
                "rows": rows.iter().map(summary_json).collect::<Vec<_>>(),
            }),
            Outcome::Erratum(report) => json!({
                "family": report.family.name(),
                "rows": report.rows.iter().map(|r| json!({
                    "n": r.n,
                    "ground_truth": r.ground_truth.to_string(),
                    "direct": r.direct_formula.to_string(),
                    "cased_printed": r.cased_printed.to_string(),
                    "cased_corrected": r.cased_corrected.to_string(),
                    "verdict_printed": r.verdict_printed.as_str(),
                    "verdict_corrected": r.verdict_corrected.as_str(),
                })).collect::<Vec<_>>(),
            }),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.outcome {
            Outcome::Norm { summary: s, oracle_norm, .. } => {
                out.push_str("n,s_squared,spectral_norm,frobenius_norm,closed_form_value,oracle_norm\n");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    s.n, s.s_squared, s.spectral_norm, s.frobenius_norm, s.closed_form_value, oracle_norm
                );
            }
            Outcome::CharPoly { poly, .. } => {
                out.push_str("n,s_squared,hermitian,skew\n");
                let _ = writeln!(out, "{},{},{},{}", poly.n, poly.s_squared, poly.render_hermitian(), poly.render_skew());
            }
            Outcome::Verify => {
                out.push_str("check,passed,cases,detail\n");
                for c in &self.verdicts {
                    let _ = writeln!(out, "{},{},{},{}", c.name, c.passed, c.cases, csv_field(&c.detail));
                }
            }
            Outcome::Table { rows, .. } => {
                out.push_str(TABLE_CSV_HEADER);
                out.push('\n');
                for s in rows {
                    let _ = writeln!(out, "{},{},{},{}", s.n, s.s_squared, s.spectral_norm, s.frobenius_norm);
                }
            }
            Outcome::Erratum(report) => {
                out.push_str(ERRATUM_CSV_HEADER);
                out.push('\n');
                for r in &report.rows {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.n,
                        r.ground_truth,
                        r.direct_formula,
                        r.cased_printed,
                        r.cased_corrected,
                        r.verdict_printed,
                        r.verdict_corrected
                    );
                }
            }
        }
        out
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.outcome {
            Outcome::Norm { sequence, summary: s, oracle_norm } => {
                let _ = writeln!(out, "sequence          {sequence}");
                let _ = writeln!(out, "n                 {}", s.n);
                let _ = writeln!(out, "s_squared         {}", s.s_squared);
                let _ = writeln!(out, "spectral_norm     {}", s.spectral_norm);
                let _ = writeln!(out, "frobenius_norm    {}", s.frobenius_norm);
                let _ = writeln!(out, "closed_form_value {}", s.closed_form_value);
                let _ = writeln!(out, "oracle_norm       {oracle_norm}");
            }
            Outcome::CharPoly { sequence, poly } => {
                let _ = writeln!(out, "sequence   {sequence}");
                let _ = writeln!(out, "s_squared  {}", poly.s_squared);
                let _ = writeln!(out, "det(λI - iA) = {}", poly.render_hermitian());
                let _ = writeln!(out, "det(λI - A)  = {}", poly.render_skew());
            }
            Outcome::Verify => {}
            Outcome::Table { family, rows } => {
                let _ = writeln!(out, "{family}");
                let _ = writeln!(out, "{:>4}  {:>28}  {:>24}  {:>24}", "n", "s_squared", "spectral_norm", "frobenius_norm");
                for s in rows {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:>28}  {:>24}  {:>24}",
                        s.n, s.s_squared, s.spectral_norm, s.frobenius_norm
                    );
                }
            }
            Outcome::Erratum(report) => {
                let _ = writeln!(out, "{}", report.family);
                let _ = writeln!(
                    out,
                    "{:>4}  {:>24}  {:>24}  {:>24}  {:>24}  {:>9}  {:>9}",
                    "n", "ground_truth", "direct", "cased_printed", "cased_corrected", "printed", "corrected"
                );
                for r in &report.rows {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:>24}  {:>24}  {:>24}  {:>24}  {:>9}  {:>9}",
                        r.n,
                        r.ground_truth.to_string(),
                        r.direct_formula.to_string(),
                        r.cased_printed.to_string(),
                        r.cased_corrected.to_string(),
                        r.verdict_printed.as_str(),
                        r.verdict_corrected.as_str()
                    );
                }
            }
        }
        for c in &self.verdicts {
            let _ = writeln!(out, "{} {:<24} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        out
    }
}

fn summary_json(s: &SpectralSummary) -> Value {
    json!({
        "n": s.n,
        "s_squared": s.s_squared.to_string(),
        "spectral_norm": s.spectral_norm,
        "frobenius_norm": s.frobenius_norm,
        "closed_form_value": s.closed_form_value.to_string(),
    })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
