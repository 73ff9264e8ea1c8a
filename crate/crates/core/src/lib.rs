//! Exact computer algebra for the finite-type invariants of `(n,2)`-torus knots.
//!
//! Restricted to the torus knots `[n]`, `n` odd, the algebra of Vassiliev
//! invariants is the coordinate ring of the nodal cubic `Y^2 = X^3 + X^2`,
//! where `X` and `Y` are the order-2 and order-3 generators. This crate
//! provides:
//!
//! * [`exact_poly`]: rationals, dense univariate polynomials, interpolation
//!   and exact rank.
//! * [`curve_ring`]: canonical arithmetic in `Q[X,Y]/(X^3 + X^2 - Y^2)` and
//!   the evaluation map onto functions of `n`.
//! * [`restriction`]: admissibility, decomposition into the monomial basis
//!   `{X^l, X^(l-1) Y}` and the constructive filtration check.
//! * [`gauss`]: Gauss diagrams of torus knots and arrow-diagram counting
//!   formulas for the order-2 and order-3 invariants.

pub mod curve_ring;
pub mod error;
pub mod exact_poly;
pub mod gauss;
pub mod restriction;

pub use curve_ring::{CurveElement, RawBivariate};
pub use error::{AdmissibilityError, Error, Result};
pub use exact_poly::{Degree, Rational, SampleSet, UniPoly, Var};
pub use gauss::{Arrow, GaussDiagram, TorusKnotIndex};
pub use restriction::{BasisMonomial, Decomposition, MonomialKind, OrderCheck, TheoremReport};
