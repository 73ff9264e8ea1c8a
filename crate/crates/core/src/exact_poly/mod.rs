//! Exact scalars, univariate polynomials, interpolation on odd integers and
//! rank over the rationals.

mod interp;
mod poly;
mod rank;

pub use interp::{default_nodes, interpolate, SampleSet};
pub(crate) use poly::write_signed_terms;
pub use poly::{Degree, UniPoly, Var};
pub use rank::rank;

use num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
