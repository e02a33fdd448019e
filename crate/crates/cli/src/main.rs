use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nf_core::parallel::Execution;
use nf_core::report::{compare_polynomials, inspect_polynomial, Options, Report};
use nf_core::NfError;

/// Arithmetic invariants of number fields given by monic integer polynomials.
#[derive(Parser)]
#[command(name = "nf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Run without worker threads.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one field.
    Inspect {
        /// Polynomial, e.g. "x^3 - 8*x - 15" or "[-15, -8, 0, 1]".
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare two fields and report verdicts.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        json: bool,
        /// Treat both fields as Galois without checking.
        #[arg(long)]
        assume_galois: bool,
        /// Treat the fields as arithmetically equivalent.
        #[arg(long)]
        assume_ae: bool,
    },
}

fn exit_code(e: &NfError) -> u8 {
    match e {
        NfError::Parse { .. } => 2,
        NfError::NotMonic(_) | NfError::Reducible(_) | NfError::DegreeTooSmall(_) => 3,
        NfError::Domain(_) | NfError::Unsupported(_) | NfError::PrimeTooLarge(_) => 3,
        NfError::Internal(_) => 4,
    }
}

fn emit(report: &Report, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.has_internal_errors() {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let execution = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let result = match &cli.command {
        Command::Inspect { poly, json } => {
            let opts = Options {
                execution,
                ..Options::default()
            };
            inspect_polynomial(poly, &opts).map(|r| (r, *json))
        }
        Command::Compare {
            left,
            right,
            json,
            assume_galois,
            assume_ae,
        } => {
            let opts = Options {
                assume_galois: *assume_galois,
                assume_ae: *assume_ae,
                execution,
            };
            compare_polynomials(left, right, &opts).map(|r| (r, *json))
        }
    };
    match result {
        Ok((report, json)) => emit(&report, json),
        Err(e) => {
            eprintln!("nf: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
