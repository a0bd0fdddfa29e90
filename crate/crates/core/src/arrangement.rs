//! Line arrangements and their intersection lattices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{HomPoly, LinForm, PolyError};
use crate::rational::{make_primitive, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    /// Two input lines are proportional; the curve would not be reduced.
    DuplicateLine { first: usize, second: usize },
    /// A line has all coefficients zero (1-based input line number).
    ZeroForm { line: usize },
    Malformed { line: usize, message: String },
    Empty,
}

impl fmt::Display for ArrangementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementError::DuplicateLine { first, second } => write!(
                f,
                "DUPLICATE_LINE: lines {} and {} are proportional",
                first + 1,
                second + 1
            ),
            ArrangementError::ZeroForm { line } => {
                write!(f, "ZERO_FORM: input line {line} is the zero form")
            }
            ArrangementError::Malformed { line, message } => {
                write!(f, "MALFORMED: input line {line}: {message}")
            }
            ArrangementError::Empty => f.write_str("MALFORMED: arrangement has no lines"),
        }
    }
}

/// A reduced arrangement of `d >= 1` pairwise non-proportional lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<LinForm>,
}

impl Arrangement {
    pub fn new(lines: Vec<LinForm>) -> Result<Self, ArrangementError> {
        if lines.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let mut seen: BTreeMap<&LinForm, usize> = BTreeMap::new();
        for (i, l) in lines.iter().enumerate() {
            if let Some(&first) = seen.get(l) {
                return Err(ArrangementError::DuplicateLine { first, second: i });
            }
            seen.insert(l, i);
        }
        Ok(Arrangement { lines })
    }

    pub fn from_ints(rows: &[[i64; 3]]) -> Result<Self, ArrangementError> {
        let lines = rows
            .iter()
            .enumerate()
            .map(|(i, &[a, b, c])| {
                LinForm::from_ints(a, b, c).map_err(|_| ArrangementError::ZeroForm { line: i + 1 })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(lines)
    }

    /// Parses one form `a b c` per line; `#` starts a comment, blank lines are
    /// skipped, and a standalone `/` separates several forms on one line.
    /// Coefficients are rationals such as `3`, `-2/5`.
    pub fn parse(text: &str) -> Result<Self, ArrangementError> {
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            for fields in tokens.split(|t| *t == "/") {
                lines.push(parse_form(no, fields)?);
            }
        }
        Self::new(lines)
    }

    /// Canonical text form, accepted by [`Arrangement::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let [a, b, c] = l.coeffs();
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }

    pub fn lines(&self) -> &[LinForm] {
        &self.lines
    }

    pub fn degree(&self) -> usize {
        self.lines.len()
    }

    /// The defining polynomial `f`, the product of the lines.
    pub fn polynomial(&self) -> HomPoly {
        let polys: Vec<HomPoly> = self.lines.iter().map(LinForm::to_poly).collect();
        HomPoly::product(&polys)
    }

    /// Computes all multiple points with their incident lines.
    pub fn lattice(&self) -> Lattice {
        Lattice::of(self)
    }
}

fn parse_form(no: usize, fields: &[&str]) -> Result<LinForm, ArrangementError> {
    if fields.len() != 3 {
        return Err(ArrangementError::Malformed {
            line: no,
            message: format!("expected 3 coefficients, found {}", fields.len()),
        });
    }
    let mut coeffs: [Rational; 3] = Default::default();
    for (slot, field) in coeffs.iter_mut().zip(fields) {
        *slot = parse_rational(field).ok_or_else(|| ArrangementError::Malformed {
            line: no,
            message: format!("invalid rational {field:?}"),
        })?;
    }
    LinForm::new(coeffs).map_err(|e| match e {
        PolyError::ZeroLinearForm => ArrangementError::ZeroForm { line: no },
        other => ArrangementError::Malformed {
            line: no,
            message: format!("{other}"),
        },
    })
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// A point of the projective plane as a primitive integer triple with first
/// nonzero coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([BigInt; 3]);

impl ProjPoint {
    pub fn new(mut coords: [BigInt; 3]) -> Option<Self> {
        if coords.iter().all(Zero::is_zero) {
            return None;
        }
        make_primitive(&mut coords);
        Some(ProjPoint(coords))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Option<Self> {
        Self::new([BigInt::from(a), BigInt::from(b), BigInt::from(c)])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// Intersection of two distinct lines by the cross product.
    pub fn meet(l: &LinForm, m: &LinForm) -> Option<Self> {
        let [a1, b1, c1] = l.coeffs();
        let [a2, b2, c2] = m.coeffs();
        Self::new([
            b1 * c2 - c1 * b2,
            c1 * a2 - a1 * c2,
            a1 * b2 - b1 * a2,
        ])
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "({a}:{b}:{c})")
    }
}

/// A multiple point together with the indices of the lines through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePoint {
    pub point: ProjPoint,
    pub lines: Vec<usize>,
}

impl LatticePoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// Intersection lattice data: multiple points sorted by decreasing
/// multiplicity, then by coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    d: usize,
    points: Vec<LatticePoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeType {
    /// All lines pass through one point.
    Pencil,
    /// `n(C) = 2`: `m` concurrent lines plus `d - m` lines in general position.
    NearPencil { d: usize, m: usize },
    /// Union of two pencils of sizes `m1 <= m2` with no line through both centers.
    TwoPencils { m1: usize, m2: usize },
    /// Only double points.
    Generic,
    Other,
}

impl fmt::Display for LatticeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeType::Pencil => f.write_str("PENCIL"),
            LatticeType::NearPencil { d, m } => write!(f, "NEAR_PENCIL_L({d},{m})"),
            LatticeType::TwoPencils { m1, m2 } => write!(f, "TWO_PENCILS({m1},{m2})"),
            LatticeType::Generic => f.write_str("GENERIC"),
            LatticeType::Other => f.write_str("OTHER"),
        }
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Lattice {
    pub fn of(arr: &Arrangement) -> Lattice {
        let lines = arr.lines();
        let d = lines.len();
        let mut found: BTreeSet<ProjPoint> = BTreeSet::new();
        for i in 0..d {
            for j in i + 1..d {
                let p = ProjPoint::meet(&lines[i], &lines[j])
                    .expect("distinct lines meet in a single point");
                found.insert(p);
            }
        }
        let mut points: Vec<LatticePoint> = found
            .into_iter()
            .map(|point| {
                let incident = (0..d)
                    .filter(|&k| lines[k].eval(point.coords()).is_zero())
                    .collect();
                LatticePoint {
                    point,
                    lines: incident,
                }
            })
            .collect();
        points.sort_by(|a, b| {
            b.multiplicity()
                .cmp(&a.multiplicity())
                .then_with(|| a.point.cmp(&b.point))
        });
        let pairs: usize = points.iter().map(|p| choose2(p.multiplicity())).sum();
        assert_eq!(pairs, choose2(d), "every pair of lines meets in exactly one point");
        Lattice { d, points }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn find(&self, p: &ProjPoint) -> Option<&LatticePoint> {
        self.points.iter().find(|lp| &lp.point == p)
    }

    /// Global Tjurina number: sum of `(n(p) - 1)^2` over multiple points.
    pub fn tau(&self) -> u64 {
        self.points
            .iter()
            .map(|p| {
                let k = p.multiplicity() as u64 - 1;
                k * k
            })
            .sum()
    }

    /// `(m(C), n(C))`. A single multiple point gives `n = 1`.
    pub fn m_and_n(&self) -> (usize, usize) {
        match self.points.as_slice() {
            [] => (1, 1),
            [only] => (only.multiplicity(), 1),
            [first, second, ..] => (first.multiplicity(), second.multiplicity()),
        }
    }

    /// Multiplicities in decreasing order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.points.iter().map(LatticePoint::multiplicity).collect()
    }

    pub fn lattice_type(&self) -> LatticeType {
        let d = self.d;
        let (m, n) = self.m_and_n();
        if self.points.len() <= 1 && m == d {
            return LatticeType::Pencil;
        }
        if self.points.iter().all(|p| p.multiplicity() == 2) {
            return LatticeType::Generic;
        }
        if let Some((m1, m2)) = self.two_pencils() {
            return LatticeType::TwoPencils { m1, m2 };
        }
        if n == 2 && m < d {
            return LatticeType::NearPencil { d, m };
        }
        LatticeType::Other
    }

    /// Sizes `(m1, m2)` when the lines split into two pencils with centers `P`
    /// (multiplicity `m2 >= 3`) and `Q` (multiplicity `m1 >= 2`), no line
    /// through both, and all remaining points double.
    fn two_pencils(&self) -> Option<(usize, usize)> {
        let d = self.d;
        for (pi, p) in self.points.iter().enumerate() {
            let m2 = p.multiplicity();
            if m2 < 3 {
                break;
            }
            let m1 = d - m2;
            if m1 < 2 || m1 > m2 {
                continue;
            }
            let rest: Vec<usize> = (0..d).filter(|k| !p.lines.contains(k)).collect();
            let Some(qi) = self.points.iter().position(|q| q.lines == rest) else {
                continue;
            };
            let others_double = self
                .points
                .iter()
                .enumerate()
                .all(|(i, pt)| i == pi || i == qi || pt.multiplicity() == 2);
            if others_double {
                return Some((m1, m2));
            }
        }
        None
    }

    /// Canonical encoding of the multiplicity multiset and of the sorted
    /// per-line multiplicity profiles. Isomorphic lattices have equal
    /// fingerprints; the converse does not hold in general.
    pub fn fingerprint(&self) -> String {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for p in &self.points {
            *counts.entry(p.multiplicity()).or_default() += 1;
        }
        let mults: Vec<String> = counts
            .iter()
            .rev()
            .map(|(m, c)| format!("{m}^{c}"))
            .collect();
        let mut profiles: Vec<Vec<usize>> = (0..self.d)
            .map(|l| {
                let mut prof: Vec<usize> = self
                    .points
                    .iter()
                    .filter(|p| p.lines.contains(&l))
                    .map(LatticePoint::multiplicity)
                    .collect();
                prof.sort_unstable_by(|a, b| b.cmp(a));
                prof
            })
            .collect();
        profiles.sort_unstable_by(|a, b| b.cmp(a));
        let profiles: Vec<String> = profiles
            .iter()
            .map(|p| {
                let items: Vec<String> = p.iter().map(|m| format!("{m}")).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        format!("d={};points={};lines={}", self.d, mults.join(","), profiles.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Arrangement {
        Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    fn pencil3() -> Arrangement {
        Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]).unwrap()
    }

    #[test]
    fn parsing() {
        let a = Arrangement::parse("1 0 0\n0 1 0\n0 0 1\n").unwrap();
        assert_eq!(a, triangle());
        let b = Arrangement::parse("# comment\n\n 2 0 0 # x\n0 -1/2 0\n0 0 3/7\n").unwrap();
        assert_eq!(b, triangle());
        assert_eq!(Arrangement::parse("1 0 0 / 0 1 0 / 0 0 1").unwrap(), triangle());
        assert_eq!(
            Arrangement::parse("1 0 0 / 2 0 0"),
            Err(ArrangementError::DuplicateLine { first: 0, second: 1 })
        );
        assert_eq!(
            Arrangement::parse("1 0 0\n2 0 0\n"),
            Err(ArrangementError::DuplicateLine { first: 0, second: 1 })
        );
        assert_eq!(
            Arrangement::parse("1 0 0\n0 0 0\n"),
            Err(ArrangementError::ZeroForm { line: 2 })
        );
        assert!(matches!(Arrangement::parse("1 0\n"), Err(ArrangementError::Malformed { line: 1, .. })));
        assert!(matches!(Arrangement::parse("1 a 0\n"), Err(ArrangementError::Malformed { .. })));
        assert!(matches!(Arrangement::parse("1 1/0 0\n"), Err(ArrangementError::Malformed { .. })));
        assert_eq!(Arrangement::parse("# nothing\n"), Err(ArrangementError::Empty));
    }

    #[test]
    fn text_round_trip() {
        let a = Arrangement::from_ints(&[[4, 8, 1], [1, -3, 0], [0, 2, 2]]).unwrap();
        assert_eq!(Arrangement::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn small_lattices() {
        let t = triangle().lattice();
        assert_eq!(t.multiplicities(), [2, 2, 2]);
        assert_eq!(t.tau(), 3);
        assert_eq!(t.lattice_type(), LatticeType::Generic);

        let p = pencil3().lattice();
        assert_eq!(p.points().len(), 1);
        assert_eq!(p.points()[0].point, ProjPoint::from_ints(0, 0, 1).unwrap());
        assert_eq!(p.points()[0].multiplicity(), 3);
        assert_eq!(p.m_and_n(), (3, 1));
        assert_eq!(p.lattice_type(), LatticeType::Pencil);
    }

    #[test]
    fn near_pencil_type() {
        let a = Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [0, 0, 1]]).unwrap();
        let l = a.lattice();
        assert_eq!(l.m_and_n(), (4, 2));
        assert_eq!(l.lattice_type(), LatticeType::NearPencil { d: 5, m: 4 });
    }

    #[test]
    fn two_pencil_type() {
        // y, y+z through (1:0:0); x, x+z, x+2z through (0:1:0)
        let a = Arrangement::from_ints(&[[0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 0, 2]]).unwrap();
        let l = a.lattice();
        assert_eq!(l.multiplicities(), [3, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(l.lattice_type(), LatticeType::TwoPencils { m1: 2, m2: 3 });
    }

    #[test]
    fn fingerprints() {
        assert_ne!(triangle().lattice().fingerprint(), pencil3().lattice().fingerprint());
        let a = Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1], [1, 2, 3]]).unwrap();
        let b = Arrangement::from_ints(&[[1, 2, 3], [0, 0, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0]]).unwrap();
        assert_eq!(a.lattice().fingerprint(), b.lattice().fingerprint());
    }
}
