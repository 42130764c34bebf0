//! Command-line front end for `zmlat-core`.

pub mod export;
pub mod scan;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use zmlat_core::oracle::DEFAULT_BOUND;
use zmlat_core::{Oracle, ZmTriple};

use export::{LatticeDocument, LatticeKind};
use scan::CheckFamily;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zmlat",
    version,
    about = "Subgroup lattices of ZM(m,n,r) groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(allow_negative_numbers = true)]
    pub m: i64,
    #[arg(allow_negative_numbers = true)]
    pub n: i64,
    #[arg(allow_negative_numbers = true)]
    pub r: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the ZM conditions on (m, n, r).
    Validate(TripleArgs),
    /// List every subgroup.
    Subgroups {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: ListFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest group order for which the lattice is materialized (JSON only).
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// List normal subgroups with the closed-form counts and chain verdict.
    Normal {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: ListFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the Hasse diagram as DOT or the lattice as JSON.
    Export {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value = "full")]
        lattice: LatticeKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest group order for which the full lattice is materialized.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Verify every valid triple with mn <= max-order, one CSV row each.
    Scan {
        #[arg(long)]
        max_order: u64,
        #[arg(long, value_enum, default_value = "all")]
        check: CheckFamily,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Oracle bound; `--check all` refuses max-order above it.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid: {0}")]
    Invalid(#[from] zmlat_core::Error),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }
}

fn triple(args: &TripleArgs) -> Result<ZmTriple, CliError> {
    Ok(ZmTriple::new(args.m, args.n, args.r)?)
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        }),
        None => stdout.write_all(text).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

pub fn execute(
    cmd: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match cmd {
        Command::Validate(args) => {
            let t = triple(&args)?;
            let mut text = format!(
                "valid: {t}\nr = {}\nd = {}\norder = {}\n",
                t.r(),
                t.d(),
                t.order()
            );
            if t.is_cyclic() {
                text.push_str(&format!("cyclic group Z_{}\n", t.n()));
            }
            emit(None, stdout, text.as_bytes())
        }
        Command::Subgroups {
            triple: args,
            format,
            out,
            bound,
        } => {
            let t = triple(&args)?;
            let text = match format {
                ListFormat::Table => export::table(&t, LatticeKind::Full)?,
                ListFormat::Json => {
                    LatticeDocument::build(&t, LatticeKind::Full, &Oracle::with_bound(bound))?
                        .to_json()
                }
            };
            emit(out.as_deref(), stdout, text.as_bytes())
        }
        Command::Normal {
            triple: args,
            format,
            out,
        } => {
            let t = triple(&args)?;
            let text = match format {
                ListFormat::Table => export::table(&t, LatticeKind::Normal)?,
                ListFormat::Json => {
                    LatticeDocument::build(&t, LatticeKind::Normal, &Oracle::default())?.to_json()
                }
            };
            emit(out.as_deref(), stdout, text.as_bytes())
        }
        Command::Export {
            triple: args,
            lattice,
            format,
            out,
            bound,
        } => {
            let t = triple(&args)?;
            let doc = LatticeDocument::build(&t, lattice, &Oracle::with_bound(bound))?;
            let text = match format {
                ExportFormat::Dot => doc.to_dot(),
                ExportFormat::Json => doc.to_json(),
            };
            emit(out.as_deref(), stdout, text.as_bytes())
        }
        Command::Scan {
            max_order,
            check,
            out,
            bound,
        } => {
            if check == CheckFamily::All && max_order > bound {
                return Err(CliError::Usage(format!(
                    "--check all needs --max-order <= oracle bound {bound}"
                )));
            }
            let outcome = scan::scan(max_order, check, &Oracle::with_bound(bound));
            let mut csv = Vec::new();
            outcome
                .write_csv(&mut csv)
                .map_err(|e| CliError::Usage(format!("csv: {e}")))?;
            emit(out.as_deref(), stdout, &csv)?;
            let _ = writeln!(
                stderr,
                "scanned {} triples, {} failures",
                outcome.rows.len(),
                outcome.failures.len()
            );
            match outcome.failures.first() {
                Some(f) => Err(CliError::Verification(format!(
                    "{}: {}",
                    f.triple, f.reason
                ))),
                None => Ok(()),
            }
        }
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("zmlat").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage(String::new()).exit_code(), 1);
        assert_eq!(
            CliError::Invalid(zmlat_core::Error::MixedGroups).exit_code(),
            2
        );
        assert_eq!(CliError::Verification(String::new()).exit_code(), 3);
        assert_eq!(run_str(&["validate", "7", "3", "2"]).0, EXIT_OK);
        assert_eq!(run_str(&["validate", "9", "3", "2"]).0, EXIT_INVALID);
        assert_eq!(run_str(&["validate"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("scan") && err.is_empty());
    }
}
