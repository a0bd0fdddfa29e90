//! The graded module `AR(f)` of Jacobian relations `a f_x + b f_y + c f_z = 0`.
//!
//! Everything here reduces to the linear map
//! `(a, b, c) ∈ S_m^3 -> a f_x + b f_y + c f_z ∈ S_{m+d-1}`, whose kernel is
//! `AR(f)_m`. On top of that sit the minimal degree `mdr(f)`, the pencil
//! syzygies attached to multiple points, the quotient-class test against
//! multiples of a syzygy, and the Bourbaki map `ρ -> det(x,y,z; ρ1; ρ) / f`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::arrangement::{Arrangement, Lattice, ProjPoint};
use crate::linalg::{in_span, kernel_basis, rank, RatMatrix};
use crate::poly::{det3, monomial_count, monomials, HomPoly, LinForm, PolyError, Var};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyzygyError {
    /// The point is not a multiple point of the arrangement.
    NotALatticePoint,
    /// Components of different degrees, or all components zero.
    Malformed,
    /// `deg ρ < deg ρ1` where the reverse is required.
    DegreeOrder { lower: usize, higher: usize },
    /// The exact sequence degenerates for free curves.
    FreeCurve,
    /// The Bourbaki image would have negative degree.
    BelowRange,
    /// A constructed relation does not satisfy `a f_x + b f_y + c f_z = 0`.
    IdentityFailed,
    Poly(PolyError),
}

impl fmt::Display for SyzygyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyError::NotALatticePoint => f.write_str("NOT_A_LATTICE_POINT"),
            SyzygyError::Malformed => f.write_str("syzygy components must be nonzero and of equal degree"),
            SyzygyError::DegreeOrder { lower, higher } => {
                write!(f, "expected degree {higher} >= {lower}")
            }
            SyzygyError::FreeCurve => f.write_str("FREE_CURVE: exact sequence is degenerate"),
            SyzygyError::BelowRange => f.write_str("Bourbaki image has negative degree"),
            SyzygyError::IdentityFailed => f.write_str("constructed relation fails a f_x + b f_y + c f_z = 0"),
            SyzygyError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl From<PolyError> for SyzygyError {
    fn from(e: PolyError) -> Self {
        SyzygyError::Poly(e)
    }
}

/// A nonzero triple `(a, b, c)` of polynomials of one common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syzygy {
    components: [HomPoly; 3],
}

impl Syzygy {
    pub fn new(a: HomPoly, b: HomPoly, c: HomPoly) -> Result<Self, SyzygyError> {
        let q = a.degree();
        if b.degree() != q || c.degree() != q {
            return Err(SyzygyError::Malformed);
        }
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(SyzygyError::Malformed);
        }
        Ok(Syzygy {
            components: [a, b, c],
        })
    }

    /// Splits a coefficient vector of length `3 * C(q+2, 2)` into components.
    pub fn from_vector(q: usize, v: &[Rational]) -> Result<Self, SyzygyError> {
        let n = monomial_count(q);
        if v.len() != 3 * n {
            return Err(SyzygyError::Malformed);
        }
        let part = |i: usize| HomPoly::from_coeffs(q, v[i * n..(i + 1) * n].to_vec());
        Self::new(part(0)?, part(1)?, part(2)?)
    }

    pub fn degree(&self) -> usize {
        self.components[0].degree()
    }

    pub fn components(&self) -> &[HomPoly; 3] {
        &self.components
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        self.components
            .iter()
            .flat_map(|c| c.coeffs().iter().cloned())
            .collect()
    }

    /// `h · ρ` for a homogeneous `h`.
    pub fn times(&self, h: &HomPoly) -> Syzygy {
        Syzygy {
            components: self.components.clone().map(|c| c.mul(h)),
        }
    }
}

impl fmt::Display for Syzygy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Graded dimensions `k -> dim AR(f)_k`.
pub type GradedDims = BTreeMap<usize, usize>;

/// An arrangement together with `f` and its partial derivatives.
#[derive(Debug, Clone)]
pub struct Jacobian {
    arrangement: Arrangement,
    f: HomPoly,
    partials: [HomPoly; 3],
}

impl Jacobian {
    pub fn new(arrangement: &Arrangement) -> Self {
        let f = arrangement.polynomial();
        let partials = Var::ALL.map(|v| f.partial_or_zero(v));
        Jacobian {
            arrangement: arrangement.clone(),
            f,
            partials,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    pub fn f(&self) -> &HomPoly {
        &self.f
    }

    pub fn partials(&self) -> &[HomPoly; 3] {
        &self.partials
    }

    /// Matrix of `(a, b, c) -> a f_x + b f_y + c f_z` on `S_m^3`. Columns are
    /// ordered by component, then monomial; rows by monomials of degree `m + d - 1`.
    pub fn relation_matrix(&self, m: usize) -> RatMatrix {
        let target = m + self.degree() - 1;
        let ncols_block = monomial_count(m);
        let mut mat = RatMatrix::zeros(monomial_count(target), 3 * ncols_block);
        let sources = monomials(m);
        for (comp, partial) in self.partials.iter().enumerate() {
            let terms: Vec<_> = partial.terms().collect();
            for (j, mon) in sources.iter().enumerate() {
                let col = comp * ncols_block + j;
                for (pm, c) in &terms {
                    mat.set((*mon * *pm).index(), col, (*c).clone());
                }
            }
        }
        mat
    }

    pub fn ar_dim(&self, k: usize) -> usize {
        let m = self.relation_matrix(k);
        m.cols() - rank(&m)
    }

    /// Kernel basis of the relation matrix in degree `k`, as syzygies.
    pub fn ar_basis(&self, k: usize) -> Vec<Syzygy> {
        kernel_basis(&self.relation_matrix(k))
            .iter()
            .map(|v| Syzygy::from_vector(k, v).expect("kernel vectors are nonzero"))
            .collect()
    }

    /// Minimal degree of a nonzero relation. The Koszul relation
    /// `(f_y, -f_x, 0)` bounds it by `d - 1`.
    pub fn mdr(&self) -> usize {
        (0..self.degree())
            .find(|&m| self.ar_dim(m) > 0)
            .unwrap_or(self.degree() - 1)
    }

    /// First kernel-basis vector in degree `mdr`.
    pub fn min_syzygy(&self) -> Syzygy {
        let r = self.mdr();
        self.ar_basis(r)
            .into_iter()
            .next()
            .expect("AR(f) is nonzero in degree mdr")
    }

    pub fn verify(&self, rho: &Syzygy) -> bool {
        let [a, b, c] = rho.components();
        let [fx, fy, fz] = &self.partials;
        let sum = a.mul(fx).add(&b.mul(fy)).and_then(|s| s.add(&c.mul(fz)));
        matches!(sum, Ok(s) if s.is_zero())
    }

    /// The syzygy `ρ_p` of degree `d - n(p)` attached to a multiple point.
    ///
    /// Write `f = g h` with `g` the lines through `p` and `D_p` the derivative
    /// in direction `p`, so `D_p g = 0`. Then `ρ_p = D_p(h) (x, y, z) - d h p`
    /// satisfies `ρ_p · ∇f = d f D_p(h) - d h g D_p(h) = 0` by Euler's formula.
    /// In coordinates where `p = (1:0:0)` it is `(x h_x - d h, y h_x, z h_x)`.
    pub fn rho_point(&self, p: &ProjPoint) -> Result<Syzygy, SyzygyError> {
        let coords = p.coords();
        let (through, rest): (Vec<&LinForm>, Vec<&LinForm>) = self
            .arrangement
            .lines()
            .iter()
            .partition(|l| l.eval(coords).is_zero());
        if through.len() < 2 {
            return Err(SyzygyError::NotALatticePoint);
        }
        let h = HomPoly::product(rest.iter().map(|l| l.to_poly()).collect::<Vec<_>>().iter());
        let mut dh = HomPoly::zero(h.degree().saturating_sub(1));
        if h.degree() > 0 {
            for (v, c) in Var::ALL.iter().zip(coords) {
                if !c.is_zero() {
                    dh = dh.add(&h.partial(*v)?.scale(&Rational::from_integer(c.clone())))?;
                }
            }
        }
        let d = Rational::from_integer(self.degree().into());
        let mut comps: [HomPoly; 3] = Default::default();
        for (i, slot) in comps.iter_mut().enumerate() {
            let euler = if h.degree() > 0 {
                dh.mul(&HomPoly::var(Var::ALL[i]))
            } else {
                HomPoly::zero(0)
            };
            let centre = h.scale(&(&d * Rational::from_integer(coords[i].clone())));
            *slot = euler.sub(&centre)?;
        }
        let [a, b, c] = comps;
        let rho = Syzygy::new(a, b, c)?;
        if rho.degree() != self.degree() - through.len() || !self.verify(&rho) {
            return Err(SyzygyError::IdentityFailed);
        }
        Ok(rho)
    }

    /// `(ρ_p, ρ_q)` for two distinct multiple points.
    pub fn rho_pair(&self, p: &ProjPoint, q: &ProjPoint) -> Result<(Syzygy, Syzygy), SyzygyError> {
        if p == q {
            return Err(SyzygyError::NotALatticePoint);
        }
        Ok((self.rho_point(p)?, self.rho_point(q)?))
    }

    /// `v(ρ) = det(x, y, z; ρ1; ρ) / f`, of degree `deg ρ + deg ρ1 + 1 - d`.
    pub fn bourbaki_image(&self, rho1: &Syzygy, rho: &Syzygy) -> Result<HomPoly, SyzygyError> {
        let total = rho.degree() + rho1.degree() + 1;
        if total < self.degree() {
            return Err(SyzygyError::BelowRange);
        }
        let [a1, b1, c1] = rho1.components().clone();
        let [a, b, c] = rho.components().clone();
        let rows = [
            [HomPoly::var(Var::X), HomPoly::var(Var::Y), HomPoly::var(Var::Z)],
            [a1, b1, c1],
            [a, b, c],
        ];
        let delta = det3(&rows)?;
        Ok(delta.divide_exact(&self.f)?)
    }

    /// Dimension of the Bourbaki ideal in degree `k`: the span of `v(ρ)` over
    /// a basis of `AR(f)_q` with `q = k + d - 1 - deg ρ1`.
    pub fn bourbaki_dim(&self, rho1: &Syzygy, k: usize) -> Result<usize, SyzygyError> {
        if self.is_free(rho1.degree()) {
            return Err(SyzygyError::FreeCurve);
        }
        let Some(q) = (k + self.degree() - 1).checked_sub(rho1.degree()) else {
            return Ok(0);
        };
        self.bourbaki_dim_from_basis(rho1, &self.ar_basis(q))
    }

    /// As [`Jacobian::bourbaki_dim`], reusing a precomputed basis of `AR(f)_q`.
    pub fn bourbaki_dim_from_basis(&self, rho1: &Syzygy, basis: &[Syzygy]) -> Result<usize, SyzygyError> {
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|rho| self.bourbaki_image(rho1, rho).map(|p| p.coeffs().to_vec()))
            .collect::<Result<_, _>>()?;
        if images.is_empty() {
            return Ok(0);
        }
        Ok(rank(&RatMatrix::from_rows(images).expect("images share a degree")))
    }

    fn is_free(&self, r: usize) -> bool {
        let tau = self.arrangement.lattice().tau() as i64;
        tau == crate::invariants::tau_max(self.degree() as u64, r as u64)
    }
}

/// Whether `ρ` is NOT in `S_{deg ρ - deg ρ1} · ρ1`.
pub fn class_nonzero_mod(rho: &Syzygy, rho1: &Syzygy) -> Result<bool, SyzygyError> {
    let shift = rho
        .degree()
        .checked_sub(rho1.degree())
        .ok_or(SyzygyError::DegreeOrder {
            lower: rho1.degree(),
            higher: rho.degree(),
        })?;
    let multiples: Vec<Vec<Rational>> = monomials(shift)
        .into_iter()
        .map(|m| rho1.times(&HomPoly::monomial(m, Rational::from_integer(1.into()))).to_vector())
        .collect();
    Ok(!in_span(&rho.to_vector(), &multiples).expect("equal lengths"))
}

pub fn relation_matrix(c: &Arrangement, m: usize) -> RatMatrix {
    Jacobian::new(c).relation_matrix(m)
}

pub fn ar_dim(c: &Arrangement, k: usize) -> usize {
    Jacobian::new(c).ar_dim(k)
}

pub fn mdr(c: &Arrangement) -> usize {
    Jacobian::new(c).mdr()
}

pub fn min_syzygy(c: &Arrangement) -> Syzygy {
    Jacobian::new(c).min_syzygy()
}

pub fn verify_syzygy(c: &Arrangement, rho: &Syzygy) -> bool {
    Jacobian::new(c).verify(rho)
}

pub fn rho_point(c: &Arrangement, p: &ProjPoint) -> Result<Syzygy, SyzygyError> {
    Jacobian::new(c).rho_point(p)
}

pub fn bourbaki_image(c: &Arrangement, rho1: &Syzygy, rho: &Syzygy) -> Result<HomPoly, SyzygyError> {
    Jacobian::new(c).bourbaki_image(rho1, rho)
}

pub fn bourbaki_dim(c: &Arrangement, rho1: &Syzygy, k: usize) -> Result<usize, SyzygyError> {
    Jacobian::new(c).bourbaki_dim(rho1, k)
}

/// `dim S_j`, zero for negative `j`.
pub fn dim_s(j: i64) -> usize {
    if j < 0 {
        0
    } else {
        monomial_count(j as usize)
    }
}

/// `dim AR(f)_k` for `k = 0..=kmax`, scanning with the relation matrices.
pub fn graded_dims(jac: &Jacobian, kmax: usize) -> GradedDims {
    (0..=kmax).map(|k| (k, jac.ar_dim(k))).collect()
}

/// The lattice points used for the quotient-class check: a point `p` of
/// multiplicity `m(C)` and a different point `q` of multiplicity `n(C)`.
pub fn extremal_pair(lattice: &Lattice) -> Option<(ProjPoint, ProjPoint)> {
    match lattice.points() {
        [p, q, ..] => Some((p.point.clone(), q.point.clone())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use alloc::vec;

    fn arr(rows: &[[i64; 3]]) -> Arrangement {
        Arrangement::from_ints(rows).unwrap()
    }

    fn xyz() -> Arrangement {
        arr(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    #[test]
    fn relation_matrix_of_two_lines() {
        let a = arr(&[[1, 0, 0], [0, 1, 0]]);
        let m = relation_matrix(&a, 0);
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(kernel_basis(&m), vec![vec![rat(0), rat(0), rat(1)]]);
    }

    #[test]
    fn triangle_dims() {
        let t = xyz();
        assert_eq!(ar_dim(&t, 0), 0);
        assert_eq!(ar_dim(&t, 1), 2);
        assert_eq!(mdr(&t), 1);
    }

    #[test]
    fn verification() {
        let xy = arr(&[[1, 0, 0], [0, 1, 0]]);
        let unit = Syzygy::new(HomPoly::zero(0), HomPoly::zero(0), HomPoly::constant(rat(1))).unwrap();
        assert!(verify_syzygy(&xy, &unit));

        let t = xyz();
        let jac = Jacobian::new(&t);
        let [fx, fy, _] = jac.partials().clone();
        let koszul = Syzygy::new(fy, fx.neg(), HomPoly::zero(2)).unwrap();
        assert!(jac.verify(&koszul));
        let euler = Syzygy::new(HomPoly::var(Var::X), HomPoly::var(Var::Y), HomPoly::var(Var::Z)).unwrap();
        assert!(!jac.verify(&euler));
    }

    #[test]
    fn malformed_syzygies() {
        assert_eq!(
            Syzygy::new(HomPoly::zero(1), HomPoly::zero(1), HomPoly::zero(1)),
            Err(SyzygyError::Malformed)
        );
        assert_eq!(
            Syzygy::new(HomPoly::var(Var::X), HomPoly::zero(0), HomPoly::zero(1)),
            Err(SyzygyError::Malformed)
        );
    }

    #[test]
    fn pencil_has_constant_syzygy() {
        let p = arr(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        let jac = Jacobian::new(&p);
        assert_eq!(jac.mdr(), 0);
        let s = jac.min_syzygy();
        assert_eq!(s.to_vector(), vec![rat(0), rat(0), rat(1)]);
        let center = ProjPoint::from_ints(0, 0, 1).unwrap();
        let rho = jac.rho_point(&center).unwrap();
        assert_eq!(rho.degree(), 0);
    }

    #[test]
    fn rho_point_rejects_non_points() {
        let t = xyz();
        let p = ProjPoint::from_ints(1, 1, 1).unwrap();
        assert_eq!(rho_point(&t, &p), Err(SyzygyError::NotALatticePoint));
    }

    #[test]
    fn multiples_have_zero_class() {
        let t = xyz();
        let jac = Jacobian::new(&t);
        let rho1 = jac.min_syzygy();
        let xr = rho1.times(&HomPoly::var(Var::X));
        assert!(!class_nonzero_mod(&xr, &rho1).unwrap());
        assert!(matches!(
            class_nonzero_mod(&rho1, &xr),
            Err(SyzygyError::DegreeOrder { .. })
        ));
    }

    #[test]
    fn bourbaki_of_multiples_vanishes() {
        let a = arr(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]);
        let jac = Jacobian::new(&a);
        let rho1 = jac.min_syzygy();
        let same = jac.bourbaki_image(&rho1, &rho1.times(&HomPoly::var(Var::Y)));
        match same {
            Ok(p) => assert!(p.is_zero()),
            Err(SyzygyError::BelowRange) => {}
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn rho_point_in_axis_coordinates() {
        // p = (1:0:0) lies on y and z; h = x (x + y + z), h_x = 2x + y + z
        let a = arr(&[[0, 1, 0], [0, 0, 1], [1, 0, 0], [1, 1, 1]]);
        let jac = Jacobian::new(&a);
        let rho = jac.rho_point(&ProjPoint::from_ints(1, 0, 0).unwrap()).unwrap();
        let h = HomPoly::var(Var::X).mul(&HomPoly::linear(rat(1), rat(1), rat(1)));
        let hx = h.partial(Var::X).unwrap();
        let expected = Syzygy::new(
            hx.mul(&HomPoly::var(Var::X)).sub(&h.scale(&rat(4))).unwrap(),
            hx.mul(&HomPoly::var(Var::Y)),
            hx.mul(&HomPoly::var(Var::Z)),
        )
        .unwrap();
        assert_eq!(rho, expected);
    }
}
