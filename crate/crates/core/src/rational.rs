//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. It is the only coefficient type used in this crate.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to the unique primitive integer vector on the same
/// ray with first nonzero entry positive. The zero vector maps to zeros.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&den / v.denom()))
        .collect();
    make_primitive(&mut ints);
    ints
}

/// Divides out the content and fixes the sign so the first nonzero entry is positive.
pub fn make_primitive(ints: &mut [BigInt]) {
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return;
    }
    let negate = ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative());
    for v in ints.iter_mut() {
        *v = &*v / &g;
        if negate {
            *v = -&*v;
        }
    }
}

pub(crate) fn to_rationals(ints: &[BigInt]) -> Vec<Rational> {
    ints.iter().cloned().map(Rational::from_integer).collect()
}
