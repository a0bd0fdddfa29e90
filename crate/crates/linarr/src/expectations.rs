//! Hard-coded reference values for the built-in corpus, diffed against
//! freshly computed reports.

use std::fmt;
use std::fmt::Write as _;

use linarr_core::arrangement::LatticeType;
use linarr_core::corpus;
use linarr_core::invariants::{self, verify_all, FreenessKind, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub entry: String,
    pub quantity: String,
    pub expected: String,
    pub actual: String,
}

impl Expectation {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "ok  " } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<18} {:<22} expected {:<14} got {}",
            self.entry, self.quantity, self.expected, self.actual
        )
    }
}

struct Sheet<'a> {
    entry: &'a str,
    out: &'a mut Vec<Expectation>,
}

impl Sheet<'_> {
    fn eq(&mut self, quantity: &str, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.out.push(Expectation {
            entry: self.entry.to_string(),
            quantity: quantity.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn basics(&mut self, rep: &Report, tau: u64, r: u64, m: u64, n: u64) {
        self.eq("tau", tau, rep.tau);
        self.eq("mdr", r, rep.r);
        self.eq("m", m, rep.m);
        self.eq("n", n, rep.n);
        self.eq("failed checks", 0, rep.failures().count());
    }

    fn kind(&mut self, rep: &Report, kind: FreenessKind, exponents: Option<(u64, u64)>, nu: i64) {
        self.eq("kind", kind, rep.classification.kind);
        self.eq("exponents", fmt_pair(exponents), fmt_pair(rep.classification.exponents));
        self.eq("nu", nu, rep.classification.nu);
    }
}

fn fmt_pair(p: Option<(u64, u64)>) -> String {
    p.map_or_else(|| "-".to_string(), |(a, b)| format!("({a},{b})"))
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn multiplicity_profile(rep: &Report) -> String {
    let mults = rep.lattice.multiplicities();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < mults.len() {
        let k = mults[i];
        let run = mults[i..].iter().take_while(|&&x| x == k).count();
        parts.push(format!("{k}^{run}"));
        i += run;
    }
    parts.join(",")
}

/// One row of the lattice-determinacy threshold table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeraoRow {
    pub d: u64,
    pub threshold: u64,
    pub sqrt_bound: u64,
    /// Disjointness holds for every `s` with `1 <= s < threshold`.
    pub witnesses_hold: bool,
}

pub fn terao_row(d: u64) -> TeraoRow {
    let threshold = invariants::terao_threshold(d);
    TeraoRow {
        d,
        threshold,
        sqrt_bound: invariants::sqrt_bound(d),
        witnesses_hold: (1..threshold).all(|s| invariants::disjointness_witness(d, s).holds),
    }
}

/// Computes every corpus entry and the threshold table, returning one
/// expectation per reference value.
pub fn run() -> Vec<Expectation> {
    let mut out = Vec::new();

    let c1 = verify_all(&corpus::c1());
    let c2 = verify_all(&corpus::c2());
    let c3 = verify_all(&corpus::c3());
    for (name, rep, m) in [("C1", &c1, 4), ("C2", &c2, 4), ("C3", &c3, 3)] {
        let mut s = Sheet { entry: name, out: &mut out };
        s.basics(rep, 25, 3, m, 3);
        s.eq("tau_min", 18, rep.bounds.tau_min);
        s.eq("tau_prime_min", 25, fmt_opt(rep.bounds.tau_prime_min));
        s.kind(rep, FreenessKind::Other, None, 2);
    }
    Sheet { entry: "C1", out: &mut out }.eq("multiplicities", "4^1,3^1,2^12", multiplicity_profile(&c1));
    Sheet { entry: "C2", out: &mut out }.eq("lattice type", LatticeType::Other, c2.lattice_type);
    Sheet { entry: "C3", out: &mut out }.eq("multiplicities", "3^4,2^9", multiplicity_profile(&c3));
    Sheet { entry: "C3", out: &mut out }.eq("tau_dprime_min", 25, fmt_opt(c3.bounds.tau_dprime_min));
    Sheet { entry: "C1,C2", out: &mut out }.eq("fingerprints differ", true, c1.fingerprint != c2.fingerprint);
    let saturation = c1
        .check("nu_le_defect_bound")
        .map_or_else(|| "-".to_string(), |c| format!("{} <= {}", c.lhs, c.rhs));
    Sheet { entry: "C1", out: &mut out }.eq("nu vs defect bound", "2 <= 2", saturation);

    for (m1, m2) in [(2u64, 2u64), (2, 3), (3, 3), (3, 4)] {
        let name = format!("two_pencils({m1},{m2})");
        let rep = verify_all(&corpus::two_pencils(m1 as usize, m2 as usize));
        let d = m1 + m2;
        let tau = (d - 1) * (d - 1) - m1 * m2 + 1;
        let mut s = Sheet { entry: &name, out: &mut out };
        s.eq("d", d, rep.d);
        s.eq("tau", tau, rep.tau);
        s.eq("mdr", m1, rep.r);
        s.eq("tau_prime_min", tau, fmt_opt(rep.bounds.tau_prime_min));
        // with m2 = 2 every point is a node
        let lattice_type = if m2 >= 3 {
            LatticeType::TwoPencils {
                m1: m1 as usize,
                m2: m2 as usize,
            }
        } else {
            LatticeType::Generic
        };
        s.eq("lattice type", lattice_type, rep.lattice_type);
        s.eq("failed checks", 0, rep.failures().count());
    }

    let tri = verify_all(&corpus::triangle());
    let mut s = Sheet { entry: "triangle", out: &mut out };
    s.basics(&tri, 3, 1, 2, 2);
    s.kind(&tri, FreenessKind::Free, Some((1, 1)), 0);

    for d in [3u64, 4, 5] {
        let rep = verify_all(&corpus::pencil(d as usize));
        let name = format!("pencil({d})");
        let mut s = Sheet { entry: &name, out: &mut out };
        s.basics(&rep, (d - 1) * (d - 1), 0, d, 1);
        s.kind(&rep, FreenessKind::Free, Some((0, d - 1)), 0);
        s.eq("lattice type", LatticeType::Pencil, rep.lattice_type);
    }

    for d in [4u64, 5, 6] {
        let rep = verify_all(&corpus::near_pencil(d as usize));
        let name = format!("near_pencil({d})");
        // one point of multiplicity d-1 and d-1 nodes
        let tau = (d - 2) * (d - 2) + (d - 1);
        let mut s = Sheet { entry: &name, out: &mut out };
        s.basics(&rep, tau, 1, d - 1, 2);
        s.kind(&rep, FreenessKind::Free, Some((1, d - 2)), 0);
    }

    for (d, threshold, sqrt_bound) in [(10u64, 4u64, 2u64), (50, 9, 6), (100, 13, 9)] {
        let row = terao_row(d);
        let name = format!("terao(d={d})");
        let mut s = Sheet { entry: &name, out: &mut out };
        s.eq("threshold", threshold, row.threshold);
        s.eq("sqrt(d-2) bound", sqrt_bound, row.sqrt_bound);
        s.eq("witnesses below", true, row.witnesses_hold);
    }
    out
}

pub fn render(expectations: &[Expectation]) -> String {
    let mut text = String::new();
    for e in expectations {
        let _ = writeln!(text, "{e}");
    }
    let failed = expectations.iter().filter(|e| !e.holds()).count();
    let _ = writeln!(
        text,
        "# {} expectations, {} mismatches",
        expectations.len(),
        failed
    );
    text
}

/// Text table of closed-form bounds for `r = 1..d-1`.
pub fn bounds_table(d: u64) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:>3} {:>8} {:>8} {:>12} {:>10} {:>10}",
        "r", "tau_min", "tau_max", "refined_max", "tau'(n=2)", "tau'(n=3)"
    );
    for r in 1..d {
        let refined = fmt_opt(invariants::tau_max_refined(d, r).ok());
        let lower = |n| {
            if r >= 2 && d >= 4 {
                invariants::tau_prime_min(d, r, n).to_string()
            } else {
                "-".to_string()
            }
        };
        let _ = writeln!(
            text,
            "{:>3} {:>8} {:>8} {:>12} {:>10} {:>10}",
            r,
            invariants::tau_min(d, r),
            invariants::tau_max(d, r),
            refined,
            lower(2),
            lower(3)
        );
    }
    text
}
