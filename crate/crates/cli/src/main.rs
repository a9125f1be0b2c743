//! Batch front end: symbolic proofs, identity fuzzing, single-configuration
//! analysis, and finite-plane sweeps.
//!
//! Exit codes: 0 when every checked property holds, 1 on a property
//! failure, 2 on usage or parse errors.

mod input;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crossdet::fields::{FieldSelector, Rationals};
use crossdet::plane::Budget;
use crossdet::symbolic::{prove_all, prove_identity, IdentityId};

use input::InputFormat;

#[derive(Parser)]
#[command(
    name = "crossdet",
    version,
    about = "Exact projective-plane geometry: prove, fuzz and sweep the generalized Pappus and Desargues formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    /// Human-readable text.
    Text,
    /// Machine-readable JSON; byte-identical for identical runs.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Prove the identity catalog by symbolic expansion in 18 variables.
    Verify {
        /// Prove a single identity (P, D, perp_3, box_5, prop_6, cyclic_7,
        /// swap_8, transpose_9, scalar_10, additive_11, gram_12, triple_13,
        /// quadruple_15).
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate both six-point formulas on seeded random configurations.
    Fuzz {
        /// Field selector: "rational" or "gf:<p>".
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of configurations.
        #[arg(long, default_value_t = 1000)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze one six-point configuration from a file.
    Check {
        /// Path to the configuration file.
        path: PathBuf,
        /// Input flavor: line-oriented text or structured JSON.
        #[arg(long, value_enum, default_value_t = InputFormat::Text)]
        input: InputFormat,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate PG(2,q), verify its invariants and sweep both theorems.
    Enumerate {
        /// Plane order (a prime up to 13).
        #[arg(long)]
        q: u64,
        /// Sweep every admissible configuration instead of sampling
        /// (supported for q <= 3).
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count per sweep when not exhaustive.
        #[arg(long, default_value_t = 100_000)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    };
    std::process::exit(code);
}

/// Ok(true): everything held. Ok(false): a checked property failed.
/// Err: usage/parse-class problem.
fn run(command: Command) -> Result<bool, String> {
    match command {
        Command::Verify { only, format, out } => {
            let reports = match only {
                Some(name) => {
                    let id: IdentityId = name.parse().map_err(|e| format!("{e}"))?;
                    vec![prove_identity(id)]
                }
                None => prove_all(),
            };
            let ok = reports.iter().all(|r| r.is_zero);
            emit(
                format,
                out,
                || report::verify_text(&reports),
                &report::verify_doc(&reports),
            )?;
            Ok(ok)
        }
        Command::Fuzz {
            field,
            seed,
            n,
            format,
            out,
        } => {
            let selector: FieldSelector = field.parse().map_err(|e| format!("{e}"))?;
            let doc = match selector {
                FieldSelector::Rational => report::run_fuzz(&Rationals, seed, n),
                FieldSelector::Gf(gf) => report::run_fuzz(&gf, seed, n),
            };
            emit(format, out, || report::fuzz_text(&doc), &doc)?;
            Ok(doc.ok)
        }
        Command::Check {
            path,
            input,
            format,
            out,
        } => {
            let body = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let raw = input::parse_raw(&body, input).map_err(|e| format!("{e}"))?;
            let doc = match raw.selector {
                FieldSelector::Rational => {
                    let c = raw
                        .configuration(&Rationals)
                        .map_err(|e| format!("{e}"))?;
                    report::run_check(&Rationals, &c)
                }
                FieldSelector::Gf(gf) => {
                    let c = raw.configuration(&gf).map_err(|e| format!("{e}"))?;
                    report::run_check(&gf, &c)
                }
            };
            emit(format, out, || report::check_text(&doc), &doc)?;
            Ok(doc.ok)
        }
        Command::Enumerate {
            q,
            exhaustive,
            seed,
            n,
            format,
            out,
        } => {
            let catalog = crossdet::plane::enumerate_plane(q).map_err(|e| format!("{e}"))?;
            let budget = if exhaustive {
                Budget::Exhaustive
            } else {
                Budget::Samples(n)
            };
            let doc = report::run_enumerate(&catalog, budget, seed).map_err(|e| format!("{e}"))?;
            emit(format, out, || report::enumerate_text(&doc), &doc)?;
            Ok(doc.ok)
        }
    }
}

/// Render in the chosen format and write to stdout or the --out path.
fn emit<T: serde::Serialize>(
    format: Format,
    out: Option<PathBuf>,
    text: impl FnOnce() -> String,
    doc: &T,
) -> Result<(), String> {
    let rendered = match format {
        Format::Text => text(),
        Format::Structured => {
            let mut json = serde_json::to_string_pretty(doc)
                .map_err(|e| format!("serialization failed: {e}"))?;
            json.push('\n');
            json
        }
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
