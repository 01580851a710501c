//! Exact coefficient fields.
//!
//! Everything above this module is written against [`Field`], so the same
//! polynomial, Gröbner and linear-algebra code runs over arbitrary-precision
//! rationals or over machine-word rationals. Only exact fields implement the
//! trait: zero tests drive every algorithm in the crate, so floating point
//! scalars are deliberately left out.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Num;

/// An exact field of characteristic zero.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

impl Field for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Field for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn inverses() {
        let a = BigRational::from_i64(-3);
        assert!((a.inv() * a).is_one());
        let b = Ratio::<i64>::new(2, 7);
        assert_eq!(b.inv(), Ratio::new(7, 2));
        assert!(BigRational::from_i64(0).is_zero());
    }

    #[test]
    #[should_panic]
    fn inverse_of_zero_panics() {
        let _ = Ratio::<i64>::from_i64(0).inv();
    }
}
