use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diffnorm_core::Family;
use num_bigint::BigInt;

use crate::error::CliError;
use crate::request::{
    Command, CommandRequest, Format, SequenceSource, DEFAULT_CASES, DEFAULT_SEED, DEFAULT_TOL, DEFAULT_VERIFY_MAX_N,
};

#[derive(Debug, Parser)]
#[command(name = "diffnorm", version, about = "Spectral norms and characteristic polynomials of difference matrices [x_i - x_j]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Fibonacci,
    Lucas,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Fibonacci => Family::Fibonacci,
            FamilyArg::Lucas => Family::Lucas,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceFamilyArg {
    Fibonacci,
    Lucas,
    Recurrence,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceSelect {
    /// Literal integers, separated by commas or whitespace
    #[arg(long, allow_hyphen_values = true)]
    pub seq: Option<String>,

    /// File of integers separated by commas and/or newlines
    #[arg(long)]
    pub file: Option<PathBuf>,

    /// Generated family; `recurrence` also needs --coeffs and --init
    #[arg(long, value_enum)]
    pub family: Option<SourceFamilyArg>,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    #[command(flatten)]
    pub select: SourceSelect,

    /// Number of terms for --family
    #[arg(long)]
    pub n: Option<usize>,

    /// Recurrence coefficients, most recent term first
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,

    /// Initial terms of the recurrence
    #[arg(long, allow_hyphen_values = true)]
    pub init: Option<String>,

    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,

    /// Relative tolerance for the oracle comparison
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Exact s², spectral and Frobenius norms, and the Jacobi oracle norm
    Norm(SourceArgs),
    /// Trinomial characteristic polynomial of A and iA
    Charpoly(SourceArgs),
    /// Exact and numeric audit on seeded random and family sequences
    Verify {
        #[arg(long, default_value_t = DEFAULT_VERIFY_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// s² and norms of a family for n = 1..=max-n
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Closed norm formulas of a family against brute force
    Erratum {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

fn parse_ints(flag: &str, text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("--{flag}: {t:?} is not an integer"))))
        .collect()
}

impl SourceArgs {
    fn source(&self) -> Result<SequenceSource, CliError> {
        if let Some(seq) = &self.select.seq {
            return Ok(SequenceSource::Literal(seq.clone()));
        }
        if let Some(path) = &self.select.file {
            return Ok(SequenceSource::File(path.clone()));
        }
        let n = self.n.ok_or_else(|| CliError::Usage("--family needs --n".into()))?;
        if n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        Ok(match self.select.family {
            Some(SourceFamilyArg::Fibonacci) => SequenceSource::Family { family: Family::Fibonacci, n },
            Some(SourceFamilyArg::Lucas) => SequenceSource::Family { family: Family::Lucas, n },
            Some(SourceFamilyArg::Recurrence) => {
                let coeffs = self.coeffs.as_deref().ok_or_else(|| CliError::Usage("recurrence needs --coeffs".into()))?;
                let init = self.init.as_deref().ok_or_else(|| CliError::Usage("recurrence needs --init".into()))?;
                SequenceSource::Recurrence { coeffs: parse_ints("coeffs", coeffs)?, init: parse_ints("init", init)?, n }
            }
            None => return Err(CliError::Usage("one of --seq, --file or --family is required".into())),
        })
    }
}

impl Cli {
    pub fn into_request(self) -> Result<CommandRequest, CliError> {
        let request = match self.command {
            Cmd::Norm(src) => CommandRequest::new(Command::Norm { source: src.source()? })
                .with_format(src.format.into())
                .with_tol(src.tol),
            Cmd::Charpoly(src) => CommandRequest::new(Command::CharPoly { source: src.source()? })
                .with_format(src.format.into())
                .with_tol(src.tol),
            Cmd::Verify { max_n, tol, cases, seed, format } => {
                CommandRequest::new(Command::Verify { max_n, cases, seed }).with_format(format.into()).with_tol(tol)
            }
            Cmd::Table { family, max_n, format } => {
                CommandRequest::new(Command::Table { family: family.into(), max_n }).with_format(format.into())
            }
            Cmd::Erratum { family, max_n, format } => {
                CommandRequest::new(Command::Erratum { family: family.into(), max_n }).with_format(format.into())
            }
        };
        request.validate()?;
        Ok(request)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<CommandRequest, CliError> {
        Cli::try_parse_from(std::iter::once("diffnorm").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?
            .into_request()
    }

    #[test]
    fn norm_sources() {
        let r = parse(&["norm", "--seq", "0,2", "--format", "json"]).unwrap();
        assert_eq!(r.command, Command::Norm { source: SequenceSource::Literal("0,2".into()) });
        assert_eq!(r.format, Format::Json);
        let r = parse(&["charpoly", "--family", "lucas", "--n", "5"]).unwrap();
        assert_eq!(r.command, Command::CharPoly { source: SequenceSource::Family { family: Family::Lucas, n: 5 } });
        let r = parse(&["norm", "--family", "recurrence", "--n", "4", "--coeffs", "2", "--init", "1"]).unwrap();
        assert!(matches!(r.command, Command::Norm { source: SequenceSource::Recurrence { n: 4, .. } }));
        let r = parse(&["norm", "--seq", "-3,4"]).unwrap();
        assert_eq!(r.command, Command::Norm { source: SequenceSource::Literal("-3,4".into()) });
    }

    #[test]
    fn rejects_bad_invocations() {
        assert!(parse(&["norm"]).is_err());
        assert!(parse(&["norm", "--seq", "1", "--file", "x"]).is_err());
        assert!(parse(&["norm", "--family", "fibonacci"]).is_err());
        assert!(parse(&["norm", "--family", "recurrence", "--n", "3"]).is_err());
        assert!(parse(&["table", "--family", "primes", "--max-n", "3"]).is_err());
        assert!(parse(&["verify", "--max-n", "1"]).is_err());
        assert!(parse(&["verify", "--tol", "-1"]).is_err());
    }

    #[test]
    fn verify_defaults() {
        let r = parse(&["verify"]).unwrap();
        assert_eq!(
            r.command,
            Command::Verify { max_n: DEFAULT_VERIFY_MAX_N, cases: DEFAULT_CASES, seed: DEFAULT_SEED }
        );
        assert_eq!(r.tol, DEFAULT_TOL);
    }
}
