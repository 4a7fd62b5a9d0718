use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use diffnorm_cli::args::Cli;
use diffnorm_cli::{exit, run};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { exit::USAGE as u8 } else { exit::SUCCESS as u8 });
        }
    };
    let outcome = cli.into_request().and_then(|req| run(&req));
    match outcome {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(report.render().as_bytes()).is_err() {
                return ExitCode::from(exit::USAGE as u8);
            }
            ExitCode::from(report.exit_code as u8)
        }
        Err(err) => {
            eprintln!("diffnorm: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
