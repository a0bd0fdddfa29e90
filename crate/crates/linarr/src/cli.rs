//! Command-line front end.
//!
//! Exit codes: 0 when every applicable check passes, 1 on a check failure or
//! corpus mismatch, 2 on input or usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use linarr_core::invariants::{describe, verify_all_with, AnalysisOptions, DimsTable, Report};
use linarr_core::Arrangement;

use crate::expectations;
use crate::json;
use crate::search::{self, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "linarr", version, about = "Exact invariants of rational line arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one arrangement file (one form `a b c` per line).
    Analyze {
        file: PathBuf,
        /// Write the JSON report here; `-` sends it to standard output instead of the summary.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Largest degree in the graded-dimension table.
        #[arg(long)]
        dims: Option<usize>,
    },
    /// Run the built-in corpus against its reference values.
    Corpus,
    /// Analyze seeded random arrangements with planted pencils.
    Search {
        /// Degree range `min..max` (inclusive) or a single degree.
        #[arg(long, value_parser = parse_range)]
        d: (usize, usize),
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pencil sizes, e.g. `3` or `3,4`; by default zero to two random pencils.
        #[arg(long, value_delimiter = ',')]
        pencils: Option<Vec<usize>>,
        #[arg(long, default_value_t = 10)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 1)]
        den_bound: i64,
    },
    /// Closed-form bounds for every r at a fixed degree.
    BoundsTable {
        #[arg(long)]
        d: u64,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => parse(s).map(|d| (d, d)),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Analyze { file, json, dims } => analyze(file, json.as_ref(), *dims, out),
        Command::Corpus => {
            let results = expectations::run();
            write_all(out, &expectations::render(&results))?;
            Ok(if results.iter().all(|e| e.holds()) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Search {
            d,
            samples,
            seed,
            pencils,
            coeff_bound,
            den_bound,
        } => {
            let config = SearchConfig {
                d_min: d.0,
                d_max: d.1,
                samples: *samples,
                seed: *seed,
                pencils: pencils.clone(),
                coeff_bound: *coeff_bound,
                den_bound: *den_bound,
            };
            let findings = search::run(&config).map_err(|e| e.to_string())?;
            write_all(out, &search::render(&config, &findings))?;
            Ok(if findings.iter().all(|f| f.violations.is_empty()) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::BoundsTable { d } => {
            if *d < 4 {
                return Err("bounds-table needs d >= 4".to_string());
            }
            write_all(out, &expectations::bounds_table(*d))?;
            Ok(EXIT_OK)
        }
    }
}

fn write_all(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn analyze(
    file: &PathBuf,
    json_out: Option<&PathBuf>,
    dims: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let arrangement = Arrangement::parse(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let dims = dims.map_or(DimsTable::Full, DimsTable::UpTo);
    let report = verify_all_with(&arrangement, &AnalysisOptions { dims });
    let encoded = serde_json::to_string_pretty(&json::report(&report)).expect("JSON values serialize");
    match json_out {
        Some(path) if path.as_os_str() == "-" => write_all(out, &format!("{encoded}\n"))?,
        Some(path) => {
            fs::write(path, format!("{encoded}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
            write_all(out, &summary(&report))?;
        }
        None => write_all(out, &summary(&report))?,
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

/// Human-readable report.
pub fn summary(rep: &Report) -> String {
    let mut s = String::new();
    let c = &rep.classification;
    s.push_str(&format!("d = {}  mdr = {}  tau = {}\n", rep.d, rep.r, rep.tau));
    let convention = if rep.n_is_pencil_convention {
        " (single multiple point, n = 1 by convention)"
    } else {
        ""
    };
    s.push_str(&format!("m = {}  n = {}{convention}\n", rep.m, rep.n));
    s.push_str(&format!("lattice: {}  {}\n", rep.lattice_type, rep.fingerprint));
    let exps = c
        .exponents
        .map_or_else(String::new, |(a, b)| format!("  exponents ({a}, {b})"));
    s.push_str(&format!("class: {}{exps}  nu = {}\n", c.kind, c.nu));
    let dims: Vec<String> = rep.ar_dims.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    s.push_str(&format!("dim AR(f)_k: {}\n", dims.join(" ")));
    s.push_str(&format!("minimal relation: {}\n", rep.min_syzygy));
    if let Some(t) = &rep.terao {
        s.push_str(&format!(
            "lattice-determined freeness: {} (r = {}, threshold {})\n",
            t.lattice_determined, t.r, t.threshold
        ));
    }
    s.push_str("checks:\n");
    for ch in &rep.checks {
        s.push_str(&format!("  {}\n", describe(ch)));
    }
    let failed = rep.failures().count();
    s.push_str(&format!("{} checks, {} failed\n", rep.checks.len(), failed));
    s
}
