use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use diffnorm_core::{linear_recurrence, parse_sequence_text, Family, IntegerSequence};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::CliError;

/// Seed used by `verify` when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_CASES: usize = 200;
pub const DEFAULT_VERIFY_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Usage(format!("unknown format {other:?} (expected text, csv or json)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Where the input sequence of `norm` and `charpoly` comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum SequenceSource {
    Literal(String),
    File(PathBuf),
    Family { family: Family, n: usize },
    Recurrence { coeffs: Vec<BigInt>, init: Vec<BigInt>, n: usize },
}

impl SequenceSource {
    pub fn resolve(&self) -> Result<IntegerSequence, CliError> {
        match self {
            SequenceSource::Literal(text) => Ok(parse_sequence_text(text)?),
            SequenceSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
                Ok(parse_sequence_text(&text)?.with_label(path.display().to_string()))
            }
            SequenceSource::Family { family, n } => Ok(family.generate(*n)?),
            SequenceSource::Recurrence { coeffs, init, n } => Ok(linear_recurrence(coeffs, init, *n)?),
        }
    }

    pub fn to_json(&self) -> Value {
        let join = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            SequenceSource::Literal(text) => json!({ "source": "literal", "seq": text }),
            SequenceSource::File(path) => json!({ "source": "file", "path": path.display().to_string() }),
            SequenceSource::Family { family, n } => json!({ "source": "family", "family": family.name(), "n": n }),
            SequenceSource::Recurrence { coeffs, init, n } => json!({
                "source": "recurrence", "coeffs": join(coeffs), "init": join(init), "n": n
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Norm { source: SequenceSource },
    CharPoly { source: SequenceSource },
    Verify { max_n: usize, cases: usize, seed: u64 },
    Table { family: Family, max_n: usize },
    Erratum { family: Family, max_n: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Norm { .. } => "norm",
            Command::CharPoly { .. } => "charpoly",
            Command::Verify { .. } => "verify",
            Command::Table { .. } => "table",
            Command::Erratum { .. } => "erratum",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandRequest {
    pub command: Command,
    pub tol: f64,
    pub format: Format,
}

impl CommandRequest {
    pub fn new(command: Command) -> Self {
        Self { command, tol: DEFAULT_TOL, format: Format::Text }
    }

    pub fn with_format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {}", self.tol)));
        }
        match &self.command {
            Command::Verify { max_n, .. } if *max_n < 2 => Err(CliError::Usage("verify needs --max-n >= 2".into())),
            Command::Table { max_n: 0, .. } | Command::Erratum { max_n: 0, .. } => {
                Err(CliError::Usage("--max-n must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Echo of the request for the `input` field of JSON output.
    pub fn to_json(&self) -> Value {
        let mut v = match &self.command {
            Command::Norm { source } | Command::CharPoly { source } => source.to_json(),
            Command::Verify { max_n, cases, seed } => json!({ "max_n": max_n, "cases": cases, "seed": seed }),
            Command::Table { family, max_n } | Command::Erratum { family, max_n } => {
                json!({ "family": family.name(), "max_n": max_n })
            }
        };
        v["tol"] = json!(self.tol);
        v["format"] = json!(self.format.to_string());
        v
    }
}
