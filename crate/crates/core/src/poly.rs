//! Homogeneous polynomials in `x, y, z` with dense rational coefficients.
//!
//! Monomials of a fixed degree `n` are indexed in graded-lexicographic order
//! with `x > y > z`: `x^n, x^(n-1) y, x^(n-1) z, x^(n-2) y^2, ...`, so index
//! `0` is `x^n` and index `C(n+2,2) - 1` is `z^n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{LinalgError, RatMatrix};
use crate::rational::{common_denominator, make_primitive, primitive_integer_vector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    DegreeMismatch { left: usize, right: usize },
    /// Derivative of a constant.
    ConstantDerivative,
    /// The divisor does not divide the dividend exactly.
    NotDivisible,
    DivisionByZero,
    /// Coordinate change matrix is singular or not 3x3.
    BadCoordinateChange,
    ZeroLinearForm,
    /// Entries of a 3x3 determinant do not give homogeneous products.
    IncompatibleDegrees,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            PolyError::ConstantDerivative => f.write_str("cannot differentiate a degree-0 polynomial"),
            PolyError::NotDivisible => f.write_str("NOT_DIVISIBLE: no exact quotient exists"),
            PolyError::DivisionByZero => f.write_str("division by the zero polynomial"),
            PolyError::BadCoordinateChange => f.write_str("coordinate change is not an invertible 3x3 matrix"),
            PolyError::ZeroLinearForm => f.write_str("linear form is identically zero"),
            PolyError::IncompatibleDegrees => f.write_str("determinant entries have incompatible degrees"),
        }
    }
}

impl From<LinalgError> for PolyError {
    fn from(_: LinalgError) -> Self {
        PolyError::BadCoordinateChange
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Exponent triple `(i, j, k)` for `x^i y^j z^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(self) -> usize {
        (self.0[0] + self.0[1] + self.0[2]) as usize
    }

    /// Position of the monomial among all monomials of its degree.
    pub fn index(self) -> usize {
        let [i, j, _] = self.0;
        let n = self.degree();
        let s = n - i as usize;
        s * (s + 1) / 2 + (s - j as usize)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..3).all(|v| self.0[v] <= other.0[v])
    }
}

impl core::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, other: Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

/// Number of monomials of degree `n` in three variables, `C(n+2, 2)`.
pub fn monomial_count(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// All monomials of degree `n` in index order.
pub fn monomials(n: usize) -> Vec<Monomial> {
    let n = n as u32;
    let mut out = Vec::with_capacity(monomial_count(n as usize));
    for i in (0..=n).rev() {
        for j in (0..=n - i).rev() {
            out.push(Monomial([i, j, n - i - j]));
        }
    }
    out
}

/// Homogeneous polynomial of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl Default for HomPoly {
    fn default() -> Self {
        HomPoly::zero(0)
    }
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        HomPoly {
            degree,
            coeffs: vec![Rational::zero(); monomial_count(degree)],
        }
    }

    pub fn constant(c: Rational) -> Self {
        HomPoly {
            degree: 0,
            coeffs: vec![c],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<Rational>) -> Result<Self, PolyError> {
        if coeffs.len() != monomial_count(degree) {
            return Err(PolyError::DegreeMismatch {
                left: monomial_count(degree),
                right: coeffs.len(),
            });
        }
        Ok(HomPoly { degree, coeffs })
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial(match v {
            Var::X => [1, 0, 0],
            Var::Y => [0, 1, 0],
            Var::Z => [0, 0, 1],
        }), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        p.coeffs[m.index()] = c;
        p
    }

    /// `a*x + b*y + c*z`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        HomPoly {
            degree: 1,
            coeffs: vec![a, b, c],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: Monomial) -> &Rational {
        &self.coeffs[m.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in index order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> + '_ {
        monomials(self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &HomPoly) -> Result<HomPoly, PolyError> {
        self.check_same_degree(other)?;
        Ok(HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &HomPoly) -> Result<HomPoly, PolyError> {
        self.check_same_degree(other)?;
        Ok(HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    fn check_same_degree(&self, other: &HomPoly) -> Result<(), PolyError> {
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let (lhs, den_l) = self.integer_terms();
        let (rhs, den_r) = other.integer_terms();
        let degree = self.degree + other.degree;
        let mut acc = vec![BigInt::zero(); monomial_count(degree)];
        for (ma, ca) in &lhs {
            for (mb, cb) in &rhs {
                acc[(*ma * *mb).index()] += ca * cb;
            }
        }
        let den = den_l * den_r;
        let coeffs = acc
            .into_iter()
            .map(|n| {
                if den.is_one() {
                    Rational::from_integer(n)
                } else {
                    Rational::new(n, den.clone())
                }
            })
            .collect();
        HomPoly { degree, coeffs }
    }

    /// Nonzero terms scaled to integers, and the common denominator.
    fn integer_terms(&self) -> (Vec<(Monomial, BigInt)>, BigInt) {
        let den = common_denominator(&self.coeffs);
        let terms = self
            .terms()
            .map(|(m, c)| {
                let n = if den.is_one() {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                };
                (m, n)
            })
            .collect();
        (terms, den)
    }

    pub fn product<'a, I>(factors: I) -> HomPoly
    where
        I: IntoIterator<Item = &'a HomPoly>,
    {
        factors
            .into_iter()
            .fold(HomPoly::constant(Rational::one()), |acc, p| acc.mul(p))
    }

    pub fn pow(&self, e: usize) -> HomPoly {
        (0..e).fold(HomPoly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> Result<HomPoly, PolyError> {
        if self.degree == 0 {
            return Err(PolyError::ConstantDerivative);
        }
        let mut out = HomPoly::zero(self.degree - 1);
        let vi = v.index();
        for (m, c) in self.terms() {
            let e = m.0[vi];
            if e == 0 {
                continue;
            }
            let mut lowered = m;
            lowered.0[vi] -= 1;
            out.coeffs[lowered.index()] += c * Rational::from_integer(BigInt::from(e));
        }
        Ok(out)
    }

    /// The partial derivative, or the zero polynomial of degree 0 for constants.
    pub fn partial_or_zero(&self, v: Var) -> HomPoly {
        self.partial(v).unwrap_or_else(|_| HomPoly::zero(0))
    }

    /// Exact quotient `self / divisor`, or [`PolyError::NotDivisible`].
    ///
    /// Long division against the leading term in lex order; for homogeneous
    /// polynomials of fixed degree this order is graded-lex, i.e. index order.
    pub fn divide_exact(&self, divisor: &HomPoly) -> Result<HomPoly, PolyError> {
        let lead_idx = divisor
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(PolyError::DivisionByZero)?;
        if self.degree < divisor.degree {
            return if self.is_zero() {
                Err(PolyError::DegreeMismatch {
                    left: self.degree,
                    right: divisor.degree,
                })
            } else {
                Err(PolyError::NotDivisible)
            };
        }
        let qdeg = self.degree - divisor.degree;
        let lead_mon = monomials(divisor.degree)[lead_idx];
        let lead_coeff = &divisor.coeffs[lead_idx];
        let div_terms: Vec<(Monomial, Rational)> =
            divisor.terms().map(|(m, c)| (m, c.clone())).collect();
        let rem_mons = monomials(self.degree);
        let quo_mons = monomials(qdeg);

        let mut rem = self.coeffs.clone();
        let mut quotient = HomPoly::zero(qdeg);
        for idx in 0..rem.len() {
            if rem[idx].is_zero() {
                continue;
            }
            let m = rem_mons[idx];
            if !lead_mon.divides(m) {
                return Err(PolyError::NotDivisible);
            }
            let qm = Monomial([m.0[0] - lead_mon.0[0], m.0[1] - lead_mon.0[1], m.0[2] - lead_mon.0[2]]);
            let qc = &rem[idx] / lead_coeff;
            for (dm, dc) in &div_terms {
                rem[(qm * *dm).index()] -= &qc * dc;
            }
            debug_assert!(rem[idx].is_zero());
            debug_assert_eq!(quo_mons[qm.index()], qm);
            quotient.coeffs[qm.index()] = qc;
        }
        Ok(quotient)
    }

    /// Substitutes `(x, y, z) -> A (x, y, z)^T`, i.e. returns `p(A v)`.
    pub fn change_coords(&self, a: &RatMatrix) -> Result<HomPoly, PolyError> {
        if a.rows() != 3 || a.cols() != 3 || a.determinant()?.is_zero() {
            return Err(PolyError::BadCoordinateChange);
        }
        Ok(self.substitute_linear(a))
    }

    fn substitute_linear(&self, a: &RatMatrix) -> HomPoly {
        let images: Vec<HomPoly> = (0..3)
            .map(|r| HomPoly::linear(a.get(r, 0).clone(), a.get(r, 1).clone(), a.get(r, 2).clone()))
            .collect();
        let powers: Vec<Vec<HomPoly>> = images
            .iter()
            .map(|l| {
                let mut pw = vec![HomPoly::constant(Rational::one())];
                for e in 1..=self.degree {
                    let next = pw[e - 1].mul(l);
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut out = HomPoly::zero(self.degree);
        for (m, c) in self.terms() {
            let [i, j, k] = m.0;
            let t = powers[0][i as usize]
                .mul(&powers[1][j as usize])
                .mul(&powers[2][k as usize]);
            for (o, tc) in out.coeffs.iter_mut().zip(&t.coeffs) {
                if !tc.is_zero() {
                    *o += c * tc;
                }
            }
        }
        out
    }

    /// Evaluates at a point with integer coordinates.
    pub fn eval(&self, point: &[BigInt; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in self.terms() {
            let mut v = BigInt::one();
            for (e, p) in m.0.iter().zip(point) {
                v *= num_traits::pow(p.clone(), *e as usize);
            }
            acc += c * Rational::from_integer(v);
        }
        acc
    }
}

/// Determinant of a 3x3 array of polynomials by cofactor expansion.
pub fn det3(m: &[[HomPoly; 3]; 3]) -> Result<HomPoly, PolyError> {
    const PERMS: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
        ([1, 0, 2], true),
    ];
    let degree_of = |p: &[usize; 3]| m[0][p[0]].degree + m[1][p[1]].degree + m[2][p[2]].degree;
    let deg = degree_of(&PERMS[0].0);
    if PERMS.iter().any(|(p, _)| degree_of(p) != deg) {
        return Err(PolyError::IncompatibleDegrees);
    }
    let mut out = HomPoly::zero(deg);
    for (p, odd) in PERMS {
        let term = m[0][p[0]].mul(&m[1][p[1]]).mul(&m[2][p[2]]);
        out = if odd { out.sub(&term)? } else { out.add(&term)? };
    }
    Ok(out)
}

impl fmt::Display for HomPoly {
    /// Terms `c·x^i y^j z^k` in index order; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let vars = monomial_string(m);
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&vars)?;
            } else {
                write!(f, "{magnitude}·{vars}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn monomial_string(m: Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (name, e) in ["x", "y", "z"].iter().zip(m.0) {
        match e {
            0 => {}
            1 => parts.push(String::from(*name)),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join(" ")
}

/// A nonzero linear form stored as a primitive integer vector whose first
/// nonzero coefficient is positive, so proportional forms compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinForm([BigInt; 3]);

impl LinForm {
    pub fn new(coeffs: [Rational; 3]) -> Result<Self, PolyError> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(PolyError::ZeroLinearForm);
        }
        let v = primitive_integer_vector(&coeffs);
        Ok(LinForm([v[0].clone(), v[1].clone(), v[2].clone()]))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, PolyError> {
        let mut v = [BigInt::from(a), BigInt::from(b), BigInt::from(c)];
        if v.iter().all(Zero::is_zero) {
            return Err(PolyError::ZeroLinearForm);
        }
        make_primitive(&mut v);
        Ok(LinForm(v))
    }

    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn to_poly(&self) -> HomPoly {
        let [a, b, c] = self.0.clone();
        HomPoly::linear(
            Rational::from_integer(a),
            Rational::from_integer(b),
            Rational::from_integer(c),
        )
    }

    pub fn eval(&self, p: &[BigInt; 3]) -> BigInt {
        &self.0[0] * &p[0] + &self.0[1] * &p[1] + &self.0[2] * &p[2]
    }

    /// The form `l(A v)` in the new coordinates `v`, renormalized.
    pub fn transform(&self, a: &RatMatrix) -> Result<LinForm, PolyError> {
        let p = self.to_poly().change_coords(a)?;
        let c = p.coeffs();
        LinForm::new([c[0].clone(), c[1].clone(), c[2].clone()])
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}
