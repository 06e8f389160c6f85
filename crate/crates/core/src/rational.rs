//! Arbitrary precision rationals.
//!
//! `num_rational::BigRational` already normalizes to lowest terms with a
//! positive denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Bit length of numerator plus denominator, used as a cheap
/// size measure when choosing elimination pivots.
pub fn height(q: &Rational) -> u64 {
    q.numer().abs().bits() + q.denom().bits()
}

/// Convert to `i64` if the value is an integer that fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}
