//! Closed-form Tjurina bounds, freeness classification, the freeness defect,
//! the full verification report, and the lattice-determinacy certificate.
//!
//! All threshold tests use integer arithmetic on doubled or squared forms;
//! no floating point is involved.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arrangement::{Arrangement, Lattice, LatticeType};
use crate::syzygy::{class_nonzero_mod, dim_s, extremal_pair, GradedDims, Jacobian, Syzygy};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// A hypothesis of the requested bound does not hold.
    Precondition(&'static str),
    /// Both freeness-defect formulas apply and disagree.
    InconsistentOverlap { low: i64, high: i64 },
    /// No `r < d/2` has `tau_max(d, r) = tau`.
    NoSolution,
    MultipleSolutions(Vec<u64>),
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::Precondition(what) => write!(f, "PRECONDITION: {what}"),
            InvariantError::InconsistentOverlap { low, high } => {
                write!(f, "INCONSISTENT_OVERLAP: defect formulas give {low} and {high}")
            }
            InvariantError::NoSolution => f.write_str("NO_SOLUTION: tau is not tau_max(d, r) for any r < d/2"),
            InvariantError::MultipleSolutions(rs) => write!(f, "MULTIPLE_SOLUTIONS: {rs:?}"),
        }
    }
}

pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `(d-1)(d-r-1)`.
pub fn tau_min(d: u64, r: u64) -> i64 {
    let (d, r) = (d as i64, r as i64);
    (d - 1) * (d - r - 1)
}

/// `(d-1)(d-r-1) + r^2`.
pub fn tau_max(d: u64, r: u64) -> i64 {
    tau_min(d, r) + (r * r) as i64
}

/// `tau_max(d, r) - C(2r+2-d, 2)`, valid when `r > (d-1)/2`.
pub fn tau_max_refined(d: u64, r: u64) -> Result<i64, InvariantError> {
    if 2 * r <= d.saturating_sub(1) || d == 0 {
        return Err(InvariantError::Precondition("r > (d-1)/2"));
    }
    let (di, ri) = (d as i64, r as i64);
    Ok(tau_max(d, r) - binom2(2 * ri + 2 - di))
}

/// `tau_min(d, r) + C(r, 2) + C(n, 2) + 1`.
pub fn tau_prime_min(d: u64, r: u64, n: u64) -> i64 {
    tau_min(d, r) + binom2(r as i64) + binom2(n as i64) + 1
}

/// `tau_min(d, r) + C(r, 2) + C(m, 2) + 1`.
pub fn tau_dprime_min(d: u64, r: u64, m: u64) -> i64 {
    tau_prime_min(d, r, m)
}

/// `tau_min(d, r) + C(r, 2) + 4`.
pub fn tau_n_min(d: u64, r: u64) -> i64 {
    tau_min(d, r) + binom2(r as i64) + 4
}

/// All bounds for a type `(d, r)` with extremal multiplicities `m >= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub tau_min: i64,
    pub tau_max: i64,
    /// Present iff `r > (d-1)/2`.
    pub tau_max_refined: Option<i64>,
    /// Present iff `d >= 4` and `r >= 2`.
    pub tau_prime_min: Option<i64>,
    /// Present iff `tau_prime_min` is and `r != d - m`.
    pub tau_dprime_min: Option<i64>,
    /// Present iff `tau_prime_min` is, `r >= 3` and `n >= 3`.
    pub tau_n_min: Option<i64>,
}

impl Bounds {
    pub fn compute(d: u64, r: u64, m: u64, n: u64) -> Bounds {
        let lower = d >= 4 && r >= 2;
        Bounds {
            tau_min: tau_min(d, r),
            tau_max: tau_max(d, r),
            tau_max_refined: tau_max_refined(d, r).ok(),
            tau_prime_min: lower.then(|| tau_prime_min(d, r, n)),
            tau_dprime_min: (lower && r + m != d).then(|| tau_dprime_min(d, r, m)),
            tau_n_min: (lower && r >= 3 && n >= 3).then(|| tau_n_min(d, r)),
        }
    }

    /// Smallest applicable upper bound on tau.
    pub fn upper(&self) -> i64 {
        self.tau_max_refined.unwrap_or(self.tau_max)
    }
}

/// The lower bounds for non-free arrangements; requires `d >= 4`, `r >= 2`.
pub fn tau_lower_bounds(d: u64, r: u64, m: u64, n: u64) -> Result<Bounds, InvariantError> {
    if d < 4 {
        return Err(InvariantError::Precondition("d >= 4"));
    }
    if r < 2 {
        return Err(InvariantError::Precondition("r >= 2"));
    }
    Ok(Bounds::compute(d, r, m, n))
}

/// Which formula produced the freeness defect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuBranch {
    /// `r < d/2`: `nu = tau_max(d, r) - tau`.
    Low,
    /// `r >= (d-2)/2`: `nu = ceil(3(d-1)^2/4) - tau`.
    High,
    /// Both applied and agreed.
    Both,
}

impl fmt::Display for NuBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuBranch::Low => "r<d/2",
            NuBranch::High => "r>=(d-2)/2",
            NuBranch::Both => "both",
        })
    }
}

/// `ceil(3 (d-1)^2 / 4)`.
pub fn three_quarter_ceiling(d: u64) -> i64 {
    let s = (d as i64 - 1).pow(2);
    (3 * s + 3) / 4
}

/// Freeness defect of an arrangement of type `(d, r)` with Tjurina number `tau`.
pub fn nu(d: u64, r: u64, tau: u64) -> Result<(i64, NuBranch), InvariantError> {
    if r < 1 && d > 1 {
        return Err(InvariantError::Precondition("r >= 1"));
    }
    let tau = tau as i64;
    let low = (2 * r < d).then(|| tau_max(d, r) - tau);
    let high = (2 * r + 2 >= d).then(|| three_quarter_ceiling(d) - tau);
    match (low, high) {
        (Some(l), Some(h)) if l == h => Ok((l, NuBranch::Both)),
        (Some(l), Some(h)) => Err(InvariantError::InconsistentOverlap { low: l, high: h }),
        (Some(l), None) => Ok((l, NuBranch::Low)),
        (None, Some(h)) => Ok((h, NuBranch::High)),
        (None, None) => unreachable!("every integer r satisfies one of the branch conditions"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreenessKind {
    Free,
    NearlyFree,
    Other,
}

impl fmt::Display for FreenessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FreenessKind::Free => "FREE",
            FreenessKind::NearlyFree => "NEARLY_FREE",
            FreenessKind::Other => "OTHER",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub kind: FreenessKind,
    pub exponents: Option<(u64, u64)>,
    pub nu: i64,
    pub branch: NuBranch,
}

/// Classifies from `(d, r, tau)`: free iff `tau = tau_max`, nearly free iff
/// `tau = tau_max - 1`.
pub fn classify_values(d: u64, r: u64, tau: u64) -> Classification {
    let t = tau as i64;
    let max = tau_max(d, r);
    let (kind, exponents) = if t == max {
        (FreenessKind::Free, Some((r, d - 1 - r)))
    } else if t == max - 1 {
        (FreenessKind::NearlyFree, Some((r, d - r)))
    } else {
        (FreenessKind::Other, None)
    };
    let (nu, branch) = match nu(d, r, tau) {
        Ok(v) => v,
        // pencils: free with defect zero by definition
        Err(_) => (max - t, NuBranch::Low),
    };
    Classification {
        kind,
        exponents,
        nu,
        branch,
    }
}

pub fn classify(c: &Arrangement) -> Classification {
    let tau = c.lattice().tau();
    let r = Jacobian::new(c).mdr();
    classify_values(c.degree() as u64, r as u64, tau)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
    Lt,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not applicable; names the failed precondition.
    Skipped(String),
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("PASS"),
            CheckStatus::Fail => f.write_str("FAIL"),
            CheckStatus::Skipped(_) => f.write_str("SKIPPED"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: i64,
    pub status: CheckStatus,
}

impl Check {
    fn compare(name: &'static str, lhs: i64, relation: Relation, rhs: i64) -> Check {
        let status = if relation.holds(lhs, rhs) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name,
            relation,
            lhs,
            rhs,
            status,
        }
    }

    fn truth(name: &'static str, lhs: bool, rhs: bool) -> Check {
        Self::compare(name, lhs as i64, Relation::Eq, rhs as i64)
    }

    fn skipped(name: &'static str, relation: Relation, reason: &str) -> Check {
        Check {
            name,
            relation,
            lhs: 0,
            rhs: 0,
            status: CheckStatus::Skipped(String::from(reason)),
        }
    }
}

/// Interval-disjointness step used by the certificate:
/// `tau_max(d, s) < tau_n_min(d, s - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessWitness {
    pub s: u64,
    pub tau_max: i64,
    pub tau_n_min_prev: i64,
    pub holds: bool,
}

pub fn disjointness_witness(d: u64, s: u64) -> DisjointnessWitness {
    assert!(s >= 1);
    let tmax = tau_max(d, s);
    let tn = tau_n_min(d, s - 1);
    DisjointnessWitness {
        s,
        tau_max: tmax,
        tau_n_min_prev: tn,
        holds: tmax < tn,
    }
}

/// Whether `r < (-3 + sqrt(8d + 41)) / 2`, i.e. `(2r + 3)^2 < 8d + 41`.
pub fn below_terao_threshold(d: u64, r: u64) -> bool {
    (2 * r + 3).pow(2) < 8 * d + 41
}

/// Smallest integer `t` with `t >= (-3 + sqrt(8d + 41)) / 2`; the certified
/// values of `r` are exactly `r < t`.
pub fn terao_threshold(d: u64) -> u64 {
    (0..).find(|&t| !below_terao_threshold(d, t)).expect("threshold exists")
}

/// `floor(sqrt(d - 2))`, the earlier bound for the same certificate.
pub fn sqrt_bound(d: u64) -> u64 {
    let n = d.saturating_sub(2);
    let mut s = 0u64;
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}

/// Certificate that freeness of an arrangement with `d` lines and Tjurina
/// number `tau_free` is determined by its intersection lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeraoCertificate {
    pub d: u64,
    pub tau: u64,
    /// The unique `r < d/2` with `tau_max(d, r) = tau`.
    pub r: u64,
    pub threshold: u64,
    pub lattice_determined: bool,
    /// One entry per `s = 1..=r`.
    pub witness: Vec<DisjointnessWitness>,
}

pub fn terao_certificate(d: u64, tau_free: u64) -> Result<TeraoCertificate, InvariantError> {
    if d < 3 {
        return Err(InvariantError::Precondition("d >= 3"));
    }
    let hits: Vec<u64> = (0..d)
        .take_while(|r| 2 * r < d)
        .filter(|&r| tau_max(d, r) == tau_free as i64)
        .collect();
    let r = match hits.as_slice() {
        [] => return Err(InvariantError::NoSolution),
        [r] => *r,
        _ => return Err(InvariantError::MultipleSolutions(hits)),
    };
    Ok(TeraoCertificate {
        d,
        tau: tau_free,
        r,
        threshold: terao_threshold(d),
        lattice_determined: below_terao_threshold(d, r),
        witness: (1..=r).map(|s| disjointness_witness(d, s)).collect(),
    })
}

/// Which degrees of `AR(f)` appear in [`Report::ar_dims`]. Degrees computed
/// along the way (`0..=mdr` and `d-2`) are always included.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DimsTable {
    /// Only the degrees the checks needed.
    Computed,
    /// Every degree up to `max(d-2, mdr)`.
    #[default]
    Full,
    /// Every degree up to the given one.
    UpTo(usize),
}

/// Options for [`verify_all_with`].
#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub dims: DimsTable,
}

/// Invariants, classification and verification verdicts for one arrangement.
#[derive(Debug, Clone)]
pub struct Report {
    pub arrangement: Arrangement,
    pub lattice: Lattice,
    pub d: u64,
    pub r: u64,
    pub m: u64,
    pub n: u64,
    pub tau: u64,
    pub fingerprint: String,
    pub lattice_type: LatticeType,
    pub ar_dims: GradedDims,
    pub min_syzygy: Syzygy,
    pub bounds: Bounds,
    pub classification: Classification,
    pub checks: Vec<Check>,
    pub terao: Option<TeraoCertificate>,
    /// `n(C)` was set by the single-point convention.
    pub n_is_pencil_convention: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn is_free(&self) -> bool {
        self.classification.kind == FreenessKind::Free
    }
}

pub fn verify_all(c: &Arrangement) -> Report {
    verify_all_with(c, &AnalysisOptions::default())
}

pub fn verify_all_with(c: &Arrangement, opts: &AnalysisOptions) -> Report {
    let d = c.degree();
    let lattice = c.lattice();
    let tau = lattice.tau();
    let (m, n) = lattice.m_and_n();
    let jac = Jacobian::new(c);

    // dim AR(f)_{d-2} = tau - C(d-1, 2) >= d - 1 > 0, so mdr <= d - 2.
    let top = (d >= 2).then(|| d - 2);
    let top_basis = top.map(|q| jac.ar_basis(q));
    let mut ar_dims = GradedDims::new();
    let scan_end = top.filter(|_| top_basis.as_ref().is_some_and(|b| !b.is_empty())).unwrap_or(d);
    let mut r = scan_end;
    let mut scanned = None;
    for k in 0..scan_end {
        let basis = jac.ar_basis(k);
        ar_dims.insert(k, basis.len());
        if !basis.is_empty() {
            r = k;
            scanned = Some(basis);
            break;
        }
    }
    if let (Some(q), Some(basis)) = (top, &top_basis) {
        ar_dims.insert(q, basis.len());
    }
    let min_basis = match (scanned, &top_basis) {
        (Some(basis), _) => basis,
        (None, Some(basis)) if top == Some(r) => basis.clone(),
        _ => jac.ar_basis(r),
    };
    let min_syzygy = min_basis[0].clone();
    let top_dim = top_basis.as_ref().map(Vec::len);

    let kmax = match opts.dims {
        DimsTable::Computed => 0,
        DimsTable::Full => top.unwrap_or(0).max(r),
        DimsTable::UpTo(k) => k,
    };
    for k in 0..=kmax {
        ar_dims.entry(k).or_insert_with(|| if k < r { 0 } else { jac.ar_dim(k) });
    }

    let (du, ru, mu, nu_) = (d as u64, r as u64, m as u64, n as u64);
    let bounds = Bounds::compute(du, ru, mu, nu_);
    let classification = classify_values(du, ru, tau);
    let free = classification.kind == FreenessKind::Free;
    let t = tau as i64;
    let lattice_type = lattice.lattice_type();

    let mut checks = Vec::new();
    let pairs: usize = lattice.points().iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
    checks.push(Check::compare("pair_count", pairs as i64, Relation::Eq, binom2(d as i64)));

    // Bounds on tau for a type (d, r), r >= 1.
    if r >= 1 {
        checks.push(Check::compare("tau_ge_tau_min", t, Relation::Ge, bounds.tau_min));
        checks.push(Check::compare("tau_le_tau_max", t, Relation::Le, bounds.tau_max));
    } else {
        checks.push(Check::skipped("tau_ge_tau_min", Relation::Ge, "r >= 1"));
        checks.push(Check::skipped("tau_le_tau_max", Relation::Le, "r >= 1"));
    }
    match bounds.tau_max_refined {
        Some(v) if r >= 1 => checks.push(Check::compare("tau_le_tau_max_refined", t, Relation::Le, v)),
        _ => checks.push(Check::skipped("tau_le_tau_max_refined", Relation::Le, "r > (d-1)/2")),
    }

    let lower_reason = if free {
        Some("not free")
    } else if r < 2 {
        Some("r >= 2")
    } else if d < 4 {
        Some("d >= 4")
    } else {
        None
    };
    match (lower_reason, bounds.tau_prime_min) {
        (None, Some(v)) => checks.push(Check::compare("tau_ge_tau_prime_min", t, Relation::Ge, v)),
        (reason, _) => checks.push(Check::skipped(
            "tau_ge_tau_prime_min",
            Relation::Ge,
            reason.unwrap_or("d >= 4, r >= 2"),
        )),
    }
    match (lower_reason, bounds.tau_dprime_min) {
        (None, Some(v)) => checks.push(Check::compare("tau_ge_tau_dprime_min", t, Relation::Ge, v)),
        (Some(reason), _) => checks.push(Check::skipped("tau_ge_tau_dprime_min", Relation::Ge, reason)),
        (None, None) => checks.push(Check::skipped("tau_ge_tau_dprime_min", Relation::Ge, "r != d - m")),
    }
    match (lower_reason, bounds.tau_n_min) {
        (None, Some(v)) => checks.push(Check::compare("tau_ge_tau_n_min", t, Relation::Ge, v)),
        (Some(reason), _) => checks.push(Check::skipped("tau_ge_tau_n_min", Relation::Ge, reason)),
        (None, None) => checks.push(Check::skipped("tau_ge_tau_n_min", Relation::Ge, "r >= 3, n >= 3")),
    }

    // Defect upper bound, 2 <= r < d/2, non-free.
    if !free && r >= 2 && 2 * r < d {
        let rhs = (r * (r + 1) / 2) as i64 - binom2(n as i64) - 1;
        checks.push(Check::compare("nu_le_defect_bound", classification.nu, Relation::Le, rhs));
    } else {
        let reason = if free { "not free" } else { "2 <= r < d/2" };
        checks.push(Check::skipped("nu_le_defect_bound", Relation::Le, reason));
    }
    checks.push(Check::compare("nu_nonnegative", classification.nu, Relation::Ge, 0));
    if r >= 1 && 2 * r < d && 2 * r + 2 >= d {
        let low = tau_max(du, ru) - t;
        let high = three_quarter_ceiling(du) - t;
        checks.push(Check::compare("nu_branches_agree", low, Relation::Eq, high));
    } else {
        checks.push(Check::skipped("nu_branches_agree", Relation::Eq, "1 <= r, (d-2)/2 <= r < d/2"));
    }
    checks.push(Check::compare(
        "free_defect_zero",
        (classification.kind == FreenessKind::Free) as i64,
        Relation::Eq,
        (classification.nu == 0) as i64,
    ));
    checks.push(Check::compare(
        "nearly_free_defect_one",
        (classification.kind == FreenessKind::NearlyFree) as i64,
        Relation::Eq,
        (classification.nu == 1) as i64,
    ));
    match classification.kind {
        FreenessKind::Free => checks.push(Check::compare("free_exponent_range", 2 * r as i64, Relation::Lt, d as i64)),
        FreenessKind::NearlyFree => {
            checks.push(Check::compare("nearly_free_exponent_range", 2 * r as i64, Relation::Le, d as i64))
        }
        FreenessKind::Other => {}
    }

    if let Some(top_dim) = top_dim {
        let lhs = t;
        let rhs = top_dim as i64 + ((d - 1) * (d - 2) / 2) as i64;
        checks.push(Check::compare("tjurina_ar_identity", lhs, Relation::Eq, rhs));
    } else {
        checks.push(Check::skipped("tjurina_ar_identity", Relation::Eq, "d >= 2"));
    }
    checks.push(Check::truth("mdr_zero_iff_pencil", r == 0, m == d));
    checks.push(Check::truth("mdr_one_iff_near_pencil", r == 1, m + 1 == d));

    if let LatticeType::TwoPencils { m1, m2 } = lattice_type {
        let rhs = ((d - 1) * (d - 1)) as i64 - (m1 * m2) as i64 + 1;
        checks.push(Check::compare("two_pencil_tau", t, Relation::Eq, rhs));
    }

    // Exact sequence 0 -> S(r-d) -> AR(f) -> B(-r+1) -> 0 at q = d - 2.
    match (&top_basis, free) {
        (Some(basis), false) if d - 2 >= r && d - 2 + r + 1 >= d => {
            let q = d - 2;
            let lhs = basis.len() as i64;
            let rhs = match jac.bourbaki_dim_from_basis(&min_syzygy, basis) {
                Ok(b) => (dim_s(q as i64 - r as i64) + b) as i64,
                Err(_) => -1,
            };
            checks.push(Check::compare("exact_sequence_count", lhs, Relation::Eq, rhs));
        }
        (_, true) => checks.push(Check::skipped("exact_sequence_count", Relation::Eq, "not free")),
        _ => checks.push(Check::skipped("exact_sequence_count", Relation::Eq, "mdr <= d-2")),
    }

    let mut rho_ok = 0;
    for lp in lattice.points() {
        if let Ok(rho) = jac.rho_point(&lp.point) {
            if jac.verify(&rho) && rho.degree() == d - lp.multiplicity() {
                rho_ok += 1;
            }
        }
    }
    checks.push(Check::compare(
        "point_syzygies_verified",
        rho_ok,
        Relation::Eq,
        lattice.points().len() as i64,
    ));

    match (free, extremal_pair(&lattice)) {
        (false, Some((p, q))) => {
            let holds = jac
                .rho_pair(&p, &q)
                .and_then(|(rho_p, rho_q)| class_nonzero_mod(&rho_q, &rho_p))
                .unwrap_or(false);
            checks.push(Check::truth("point_syzygy_class_nonzero", holds, true));
        }
        (true, _) => checks.push(Check::skipped("point_syzygy_class_nonzero", Relation::Eq, "not free")),
        (false, None) => checks.push(Check::skipped(
            "point_syzygy_class_nonzero",
            Relation::Eq,
            "two distinct multiple points",
        )),
    }

    let terao = if free && d >= 3 {
        terao_certificate(du, tau).ok()
    } else {
        None
    };
    if free && d >= 3 {
        checks.push(Check::truth("terao_unique_r", terao.as_ref().is_some_and(|c| c.r == ru), true));
    }

    Report {
        arrangement: c.clone(),
        fingerprint: lattice.fingerprint(),
        lattice_type,
        n_is_pencil_convention: lattice.points().len() == 1,
        lattice,
        d: du,
        r: ru,
        m: mu,
        n: nu_,
        tau,
        ar_dims,
        min_syzygy,
        bounds,
        classification,
        checks,
        terao,
    }
}

/// Renders a check as `name: lhs REL rhs [STATUS]`.
pub fn describe(check: &Check) -> String {
    match &check.status {
        CheckStatus::Skipped(reason) => format!("{}: skipped (requires {})", check.name, reason),
        s => format!(
            "{}: {} {} {} [{}]",
            check.name,
            check.lhs,
            check.relation.symbol(),
            check.rhs,
            s
        ),
    }
}
