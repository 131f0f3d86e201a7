mod args;
mod cache;
mod commands;
mod report;

use clap::Parser;
use pathdepth::Error;
use std::process::ExitCode;

/// Exit codes: 0 success, 1 a must-hold check failed, 2 parse or usage,
/// 3 resource cap, 4 timeout, 5 domain.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Parameter(_) | Error::LengthMismatch { .. } | Error::Overflow => 2,
        Error::ResourceLimit { .. } => 3,
        Error::Timeout { .. } => 4,
        Error::Domain(_) => 5,
        Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let mut out = std::io::stdout().lock();
    match commands::run(cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
