//! Exact rational scalars. Everything geometric in this crate runs on
//! arbitrary-precision rationals so that ties are decided exactly.

use num::BigRational;
use num::{BigInt, One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. The denominator must be nonzero.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

/// Renders `n` or `n/d`, with the sign on the numerator.
pub fn display(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
