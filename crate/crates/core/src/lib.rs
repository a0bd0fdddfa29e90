//! Exact invariants of complex projective line arrangements with rational
//! coefficients.
//!
//! The crate computes the intersection lattice and global Tjurina number of
//! an arrangement, the graded pieces of its module of Jacobian relations, the
//! minimal degree `mdr(f)` of such a relation, explicit pencil syzygies, the
//! Bourbaki map, and from these the freeness classification and a battery
//! of inequality checks. All arithmetic is exact over the rationals.
//!
//! ```
//! use linarr_core::{corpus, invariants};
//!
//! let report = invariants::verify_all(&corpus::c1());
//! assert_eq!((report.tau, report.r, report.m, report.n), (25, 3, 4, 3));
//! assert!(report.all_passed());
//! ```

#![no_std]

extern crate alloc;

pub mod arrangement;
pub mod corpus;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod syzygy;

pub use arrangement::{Arrangement, ArrangementError, Lattice, LatticePoint, LatticeType, ProjPoint};
pub use invariants::{Bounds, Check, CheckStatus, Classification, FreenessKind, Report, TeraoCertificate};
pub use linalg::RatMatrix;
pub use poly::{HomPoly, LinForm, Var};
pub use rational::Rational;
pub use syzygy::{Jacobian, Syzygy, SyzygyError};
