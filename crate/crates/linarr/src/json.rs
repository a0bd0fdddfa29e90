//! JSON encoding of analysis reports.
//!
//! Objects use `serde_json`'s default sorted maps, so the same report always
//! serializes to the same bytes.

use linarr_core::invariants::{CheckStatus, DisjointnessWitness, Report, TeraoCertificate};
use linarr_core::{Arrangement, ArrangementError, LinForm, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Integers that fit in `i64` become JSON numbers; larger ones become strings.
pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

pub fn lines(a: &Arrangement) -> Value {
    Value::Array(
        a.lines()
            .iter()
            .map(|l| Value::Array(l.coeffs().iter().map(int).collect()))
            .collect(),
    )
}

fn witness(w: &DisjointnessWitness) -> Value {
    json!({
        "s": w.s,
        "tau_max": w.tau_max,
        "tau_n_min_prev": w.tau_n_min_prev,
        "holds": w.holds,
    })
}

pub fn terao(t: &TeraoCertificate) -> Value {
    json!({
        "d": t.d,
        "tau": t.tau,
        "r": t.r,
        "threshold": t.threshold,
        "lattice_determined": t.lattice_determined,
        "witness": t.witness.iter().map(witness).collect::<Vec<_>>(),
    })
}

pub fn report(rep: &Report) -> Value {
    let points: Vec<Value> = rep
        .lattice
        .points()
        .iter()
        .map(|p| {
            json!({
                "coords": p.point.coords().iter().map(int).collect::<Vec<_>>(),
                "mult": p.multiplicity(),
                "lines": p.lines,
            })
        })
        .collect();
    let ar_dims: Map<String, Value> = rep
        .ar_dims
        .iter()
        .map(|(k, v)| (k.to_string(), Value::from(*v)))
        .collect();
    let b = &rep.bounds;
    let c = &rep.classification;
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|ch| {
            let mut o = json!({
                "name": ch.name,
                "relation": ch.relation.symbol(),
                "status": ch.status.to_string(),
            });
            match &ch.status {
                CheckStatus::Skipped(reason) => {
                    o["lhs"] = Value::Null;
                    o["rhs"] = Value::Null;
                    o["reason"] = Value::from(reason.as_str());
                }
                _ => {
                    o["lhs"] = Value::from(ch.lhs);
                    o["rhs"] = Value::from(ch.rhs);
                }
            }
            o
        })
        .collect();
    json!({
        "d": rep.d,
        "lines": lines(&rep.arrangement),
        "lattice": {
            "points": points,
            "fingerprint": rep.fingerprint,
            "type": rep.lattice_type.to_string(),
        },
        "m": rep.m,
        "n": rep.n,
        "n_is_pencil_convention": rep.n_is_pencil_convention,
        "tau": rep.tau,
        "mdr": rep.r,
        "min_syzygy": rep.min_syzygy.to_string(),
        "ar_dims": ar_dims,
        "classification": {
            "kind": c.kind.to_string(),
            "exponents": c.exponents.map(|(a, b)| vec![a, b]),
            "nu": c.nu,
            "branch": c.branch.to_string(),
        },
        "bounds": {
            "tau_min": b.tau_min,
            "tau_max": b.tau_max,
            "tau_max_refined": b.tau_max_refined,
            "tau_prime_min": b.tau_prime_min,
            "tau_dprime_min": b.tau_dprime_min,
            "tau_n_min": b.tau_n_min,
        },
        "checks": checks,
        "all_passed": rep.all_passed(),
        "terao": rep.terao.as_ref().map(terao),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EchoError {
    MissingLines,
    BadCoefficient(String),
    Arrangement(ArrangementError),
}

impl std::fmt::Display for EchoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EchoError::MissingLines => f.write_str("report has no \"lines\" array of triples"),
            EchoError::BadCoefficient(v) => write!(f, "not an integer coefficient: {v}"),
            EchoError::Arrangement(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EchoError {}

fn coefficient(v: &Value) -> Result<Rational, EchoError> {
    let parsed = match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse::<BigInt>().ok(),
        _ => None,
    };
    parsed
        .map(Rational::from_integer)
        .ok_or_else(|| EchoError::BadCoefficient(v.to_string()))
}

/// Rebuilds the arrangement from the `"lines"` echo of a report.
pub fn arrangement_from_report(v: &Value) -> Result<Arrangement, EchoError> {
    let rows = v["lines"].as_array().ok_or(EchoError::MissingLines)?;
    let forms = rows
        .iter()
        .map(|row| {
            let row = row.as_array().filter(|r| r.len() == 3).ok_or(EchoError::MissingLines)?;
            let coeffs = [coefficient(&row[0])?, coefficient(&row[1])?, coefficient(&row[2])?];
            LinForm::new(coeffs).map_err(|_| EchoError::Arrangement(ArrangementError::ZeroForm { line: 0 }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(forms).map_err(EchoError::Arrangement)
}
