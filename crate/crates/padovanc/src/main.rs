//! File-based encoder/decoder CLI.
//!
//! Exit codes: 0 on success, 1 on input or format problems (unreadable
//! files, bad characters, malformed coded files), 2 on codec failures
//! (singular systems, non-integer or out-of-range centers, failed
//! remediation). Diagnostics go to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use padovanc::{decode_message, encode_message, wire, AlphabetKey, Error};

#[derive(Parser)]
#[command(name = "padovanc", version, about = "Block-code messages behind per-block determinants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a plaintext file into a coded-message file
    Encode {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Decode a coded-message file back into plaintext
    Decode {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print the layout and per-row diagnostics of a coded-message file
    Inspect {
        #[arg(long)]
        input: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::ZeroMinor
            | Error::SingularSystem
            | Error::NonIntegerSolution
            | Error::CenterOutOfRange(_)
            | Error::RemediationFailed { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{}: {err}", path.display()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let is_usage_error = err.use_stderr();
            let _ = err.print();
            return if is_usage_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS // --help / --version
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("padovanc: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Encode { input, output } => {
            let raw = std::fs::read_to_string(&input).map_err(|e| io_failure(&input, e))?;
            let coded = encode_message(&flatten_lines(&raw))?;
            std::fs::write(&output, wire::serialize(&coded)).map_err(|e| io_failure(&output, e))
        }
        Command::Decode { input, output } => {
            let bytes = std::fs::read(&input).map_err(|e| io_failure(&input, e))?;
            let coded = wire::parse(&bytes)?;
            let mut text = decode_message(&coded)?;
            text.push('\n');
            std::fs::write(&output, text).map_err(|e| io_failure(&output, e))
        }
        Command::Inspect { input } => {
            let bytes = std::fs::read(&input).map_err(|e| io_failure(&input, e))?;
            let coded = wire::parse(&bytes)?;
            let key = AlphabetKey::for_block_count(coded.m)?;
            println!("m = {}", coded.m);
            println!("n = {}", key.exponent());
            for (i, row) in coded.rows.iter().enumerate() {
                let minor = row.minor22();
                let status = if minor == 0 { "zero" } else { "nonzero" };
                println!("row {}: d = {}, minor22 = {} ({})", i + 1, row.d, minor, status);
            }
            Ok(())
        }
    }
}

/// Treat embedded newlines as word separators; a trailing newline is just
/// end-of-file.
fn flatten_lines(raw: &str) -> String {
    raw.replace("\r\n", "\n")
        .trim_end_matches('\n')
        .replace('\n', " ")
}
