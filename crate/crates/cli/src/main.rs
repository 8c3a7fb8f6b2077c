mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nrr_core::{Bounds, Error};

use args::{Cli, Command};

/// A failure together with its exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Overflow(_) | Error::BoundExceeded { .. } | Error::EmptySeries => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Bounds::from_env().map_err(Failure::from).and_then(|bounds| match &cli.command {
        Command::Partitions(a) => commands::partitions(a),
        Command::Signature(a) => commands::signature(a, &bounds),
        Command::Series(a) => commands::series(a, &bounds),
        Command::Verify(a) => commands::verify(a, &bounds),
    });
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
