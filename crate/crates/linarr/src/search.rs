//! Seeded random arrangements with planted pencils.
//!
//! Each sample draws its degree, plants up to two pencils through random
//! points, and fills the remaining lines with random forms. Samples whose
//! lattice has any multiple point beyond the planted ones are redrawn, so the
//! multiplicity multiset always matches the plan. Sample `i` uses ChaCha stream
//! `i` under the configured seed, so output does not depend on evaluation order.

use std::fmt;
use std::fmt::Write as _;

use linarr_core::invariants::{verify_all_with, AnalysisOptions, DimsTable, FreenessKind, Report};
use linarr_core::{Arrangement, LinForm, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub d_min: usize,
    pub d_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// Fixed pencil sizes; `None` draws zero to two pencils per sample.
    pub pencils: Option<Vec<usize>>,
    /// Numerators are drawn from `-coeff_bound..=coeff_bound`.
    pub coeff_bound: i64,
    /// Denominators are drawn from `1..=den_bound`.
    pub den_bound: i64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            d_min: 4,
            d_max: 8,
            samples: 100,
            seed: 0,
            pencils: None,
            coeff_bound: 10,
            den_bound: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    InvalidConfig(String),
    /// No admissible arrangement was found for a sample.
    Exhausted { index: usize, d: usize, plan: Vec<usize> },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::InvalidConfig(msg) => write!(f, "invalid search configuration: {msg}"),
            SearchError::Exhausted { index, d, plan } => write!(
                f,
                "sample {index}: no arrangement of {d} lines with pencils {plan:?} after {MAX_ATTEMPTS} attempts"
            ),
        }
    }
}

impl std::error::Error for SearchError {}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidConfig(m.to_string()));
        if self.d_min < 1 || self.d_min > self.d_max {
            return bad("degree range must satisfy 1 <= min <= max");
        }
        if self.coeff_bound < 1 || self.den_bound < 1 {
            return bad("coefficient bounds must be positive");
        }
        if let Some(sizes) = &self.pencils {
            if sizes.len() > 2 {
                return bad("at most two pencils can be planted");
            }
            if sizes.iter().any(|&s| s < 3) {
                return bad("pencil sizes must be at least 3");
            }
            let total: usize = sizes.iter().sum();
            if total > self.d_min {
                return bad("pencil sizes exceed the smallest degree");
            }
        }
        Ok(())
    }
}

/// A sampled arrangement together with the pencil sizes planted in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub index: usize,
    pub plan: Vec<usize>,
    pub arrangement: Arrangement,
}

pub fn sample(config: &SearchConfig, index: usize) -> Result<Sample, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let d = rng.random_range(config.d_min..=config.d_max);
    let plan = match &config.pencils {
        Some(sizes) => sizes.clone(),
        None => random_plan(&mut rng, d),
    };
    for _ in 0..MAX_ATTEMPTS {
        if let Some(arrangement) = attempt(&mut rng, config, d, &plan) {
            return Ok(Sample {
                index,
                plan,
                arrangement,
            });
        }
    }
    Err(SearchError::Exhausted { index, d, plan })
}

pub fn samples(config: &SearchConfig) -> Result<Vec<Sample>, SearchError> {
    config.validate()?;
    (0..config.samples).into_par_iter().map(|i| sample(config, i)).collect()
}

/// Zero, one or two pencil sizes, each at least 3, summing to at most `d`.
fn random_plan(rng: &mut ChaCha8Rng, d: usize) -> Vec<usize> {
    let mut plan = Vec::new();
    let count = rng.random_range(0..=2usize);
    let mut left = d;
    for _ in 0..count {
        if left < 3 {
            break;
        }
        let size = rng.random_range(3..=left);
        plan.push(size);
        left -= size;
    }
    plan
}

fn random_rational(rng: &mut ChaCha8Rng, config: &SearchConfig) -> Rational {
    let num = rng.random_range(-config.coeff_bound..=config.coeff_bound);
    let den = rng.random_range(1..=config.den_bound);
    Rational::new(num.into(), den.into())
}

fn random_triple(rng: &mut ChaCha8Rng, config: &SearchConfig) -> [Rational; 3] {
    [(); 3].map(|_| random_rational(rng, config))
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn attempt(rng: &mut ChaCha8Rng, config: &SearchConfig, d: usize, plan: &[usize]) -> Option<Arrangement> {
    let mut lines = Vec::with_capacity(d);
    for &size in plan {
        let center = random_triple(rng, config);
        for _ in 0..size {
            // a zero cross product is rejected by LinForm::new
            let through = cross(&center, &random_triple(rng, config));
            lines.push(LinForm::new(through).ok()?);
        }
    }
    while lines.len() < d {
        lines.push(LinForm::new(random_triple(rng, config)).ok()?);
    }
    let arrangement = Arrangement::new(lines).ok()?;
    let mut planted: Vec<usize> = plan.to_vec();
    planted.sort_unstable_by(|a, b| b.cmp(a));
    let lattice = arrangement.lattice();
    let found: Vec<usize> = lattice.multiplicities().into_iter().filter(|&k| k > 2).collect();
    (found == planted).then_some(arrangement)
}

/// Per-sample summary emitted by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub index: usize,
    pub plan: Vec<usize>,
    pub d: u64,
    pub r: u64,
    pub m: u64,
    pub n: u64,
    pub tau: u64,
    /// `tau - tau'_min` when the lower bound applies.
    pub gap: Option<i64>,
    pub kind: FreenessKind,
    pub nu: i64,
    /// Names of failed checks.
    pub violations: Vec<&'static str>,
    pub lines: String,
}

impl Finding {
    pub fn from_report(sample: &Sample, report: &Report) -> Finding {
        Finding {
            index: sample.index,
            plan: sample.plan.clone(),
            d: report.d,
            r: report.r,
            m: report.m,
            n: report.n,
            tau: report.tau,
            gap: report
                .bounds
                .tau_prime_min
                .filter(|_| !report.is_free())
                .map(|t| report.tau as i64 - t),
            kind: report.classification.kind,
            nu: report.classification.nu,
            violations: report.failures().map(|c| c.name).collect(),
            lines: compact_lines(&sample.arrangement),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gap = self.gap.map_or_else(|| "-".to_string(), |g| g.to_string());
        write!(
            f,
            "{:>4} d={} plan={:?} r={} m={} n={} tau={} tau-tau'={} kind={} nu={} violations={}",
            self.index,
            self.d,
            self.plan,
            self.r,
            self.m,
            self.n,
            self.tau,
            gap,
            self.kind,
            self.nu,
            self.violations.len()
        )?;
        for v in &self.violations {
            write!(f, " !{v}")?;
        }
        write!(f, " lines={}", self.lines)
    }
}

fn compact_lines(a: &Arrangement) -> String {
    let mut s = String::new();
    for (i, l) in a.lines().iter().enumerate() {
        let [x, y, z]: &[BigInt; 3] = l.coeffs();
        if i > 0 {
            s.push(';');
        }
        let _ = write!(s, "{x},{y},{z}");
    }
    s
}

/// Runs the full verification on every sample. Samples are analyzed in
/// parallel; findings come back in sample order.
pub fn run(config: &SearchConfig) -> Result<Vec<Finding>, SearchError> {
    let options = AnalysisOptions {
        dims: DimsTable::Computed,
    };
    Ok(samples(config)?
        .par_iter()
        .map(|s| Finding::from_report(s, &verify_all_with(&s.arrangement, &options)))
        .collect())
}

/// Text output of a search: one line per sample, then a summary line.
pub fn render(config: &SearchConfig, findings: &[Finding]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# search seed={} samples={} d={}..{} coeff_bound={} den_bound={}",
        config.seed, config.samples, config.d_min, config.d_max, config.coeff_bound, config.den_bound
    );
    for f in findings {
        let _ = writeln!(out, "{f}");
    }
    let violations: usize = findings.iter().map(|f| f.violations.len()).sum();
    let tight = findings.iter().filter(|f| f.gap == Some(0)).count();
    let _ = writeln!(
        out,
        "# total samples={} violations={} tight_tau_prime={}",
        findings.len(),
        violations,
        tight
    );
    out
}
