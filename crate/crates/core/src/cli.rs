//! The `wbcc` command line.
//!
//! Exit status: `0` when the computation succeeded (including a "no"
//! answer from `iso`), `1` when the input is mathematically rejected (an
//! axiom fails, or a law fails), `2` for usage, I/O and parse errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::Algebra;
use crate::canonical::canonical_form;
use crate::catalog::IsoClassCatalog;
use crate::enumerate::{self, SearchConfig};
use crate::error::Error;
use crate::laws::{self, Status};
use crate::mask::PropertyMask;
use crate::report::Report;
use crate::table::CayleyTable;
use crate::tablefile::{format_table, read_table_file};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the enumeration worker count.
pub const THREADS_VAR: &str = "WBCC_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "wbcc",
    version,
    about = "Check, classify and enumerate finite weak BCC-algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: axioms, classification, order, branches, solidity, identities, laws
    Check {
        file: PathBuf,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Minimal elements and branches
    Branches { file: PathBuf },
    /// Run the law registry (or one law)
    Laws {
        file: PathBuf,
        #[arg(long = "law", value_name = "ID")]
        law: Option<String>,
    },
    /// Print the canonical form of a table
    Canon { file: PathBuf },
    /// Decide whether two tables are isomorphic
    Iso { first: PathBuf, second: PathBuf },
    /// Enumerate isomorphism classes of a given order
    Enumerate {
        order: usize,
        /// Only proper weak BCC-algebras (neither BCC nor BCI)
        #[arg(long)]
        proper: bool,
        #[arg(long)]
        solid: bool,
        #[arg(long)]
        bcc: bool,
        #[arg(long)]
        bci: bool,
        /// Print only the number of classes
        #[arg(long)]
        count_only: bool,
        /// Write the catalog here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Permit orders above the default cap
        #[arg(long)]
        allow_large: bool,
    },
}

/// Failure that ends a command, carrying its exit status.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: message.into(),
        }
    }
}

fn load(path: &Path) -> Result<CayleyTable, Exit> {
    read_table_file(path).map_err(|e| match e {
        Error::Parse { line, message } => Exit::usage(format!("{}:{line}: {message}", path.display())),
        other => Exit::usage(format!("{}: {other}", path.display())),
    })
}

fn load_algebra(path: &Path) -> Result<Algebra, Exit> {
    let t = load(path)?;
    Algebra::new(t).map_err(|e| Exit::domain(format!("{}: {e}", path.display())))
}

fn workers_from_env(value: Option<String>) -> Result<usize, Exit> {
    match value {
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Exit::usage(format!("{THREADS_VAR} must be a positive integer, got `{v}`"))),
    }
}

fn io_err(e: std::io::Error) -> Exit {
    Exit::usage(format!("write failed: {e}"))
}

fn execute(cli: Cli, out: &mut dyn Write, threads: Option<String>) -> Result<i32, Exit> {
    match cli.command {
        Command::Check { file, json } => {
            let t = load(&file)?;
            let report = Report::build(&t).map_err(|e| Exit::domain(e.to_string()))?;
            let body = if json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            out.write_all(body.as_bytes()).map_err(io_err)?;
            Ok(if report.is_weak_bcc() && !report.any_law_failed() {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            })
        }
        Command::Branches { file } => {
            let a = load_algebra(&file)?;
            let b = a.branches();
            let minimal: Vec<String> = b.minimal.iter().map(|m| m.to_string()).collect();
            writeln!(out, "minimal elements: {{{}}}", minimal.join(", ")).map_err(io_err)?;
            for (m, members) in b.minimal.iter().zip(&b.branches) {
                let members: Vec<String> = members.iter().map(|v| v.to_string()).collect();
                writeln!(out, "B({m}) = {{{}}}", members.join(", ")).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Laws { file, law } => {
            let a = load_algebra(&file)?;
            let results = match law {
                Some(id) => vec![laws::verify(&a, &id)
                    .map_err(|e| Exit::usage(format!("{e}; known laws: {}", laws::list_laws().join(", "))))?],
                None => laws::verify_all(&a),
            };
            let mut failed = false;
            for r in &results {
                failed |= r.status == Status::Fail;
                match &r.witness {
                    None => writeln!(out, "{}: {}", r.law_id, r.status),
                    Some(w) => writeln!(out, "{}: {} at {:?} [{}]", r.law_id, r.status, w.elements, w.clause),
                }
                .map_err(io_err)?;
            }
            Ok(if failed { EXIT_DOMAIN } else { EXIT_OK })
        }
        Command::Canon { file } => {
            let a = load_algebra(&file)?;
            let c = canonical_form(a.table());
            out.write_all(format_table(c.table()).as_bytes()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Iso { first, second } => {
            let a = load_algebra(&first)?;
            let b = load_algebra(&second)?;
            let answer = if crate::canonical::are_isomorphic(a.table(), b.table()) {
                "isomorphic"
            } else {
                "non-isomorphic"
            };
            writeln!(out, "{answer}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            order,
            proper,
            solid,
            bcc,
            bci,
            count_only,
            out: path,
            allow_large,
        } => {
            let mut require = PropertyMask::empty();
            for (on, flag) in [
                (proper, PropertyMask::PROPER_WEAK),
                (solid, PropertyMask::SOLID),
                (bcc, PropertyMask::BCC),
                (bci, PropertyMask::BCI),
            ] {
                if on {
                    require |= flag;
                }
            }
            let cfg = SearchConfig::new(order)
                .require(require)
                .count_only(count_only)
                .allow_above_cap(allow_large)
                .workers(workers_from_env(threads)?);
            let catalog = enumerate::enumerate_classes(&cfg).map_err(|e| Exit::usage(e.to_string()))?;
            if count_only {
                writeln!(out, "{}", catalog.len()).map_err(io_err)?;
                return Ok(EXIT_OK);
            }
            write_catalog(&catalog, path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_catalog(c: &IsoClassCatalog, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Exit> {
    match path {
        Some(p) => c
            .write_file(p)
            .map_err(|e| Exit::usage(format!("{}: {e}", p.display()))),
        None => c.write_to(out).map_err(|e| Exit::usage(e.to_string())),
    }
}

/// Runs one command line; `args` includes the program name. Returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out, std::env::var(THREADS_VAR).ok()) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "wbcc: {}", e.message);
            e.code
        }
    }
}
