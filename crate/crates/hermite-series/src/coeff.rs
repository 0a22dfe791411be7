//! The coefficient fields used throughout the crate.
//!
//! Everything is computed in one of two fields: exact rationals with
//! arbitrary-precision integer parts (`BigRational`), used wherever an
//! identity can be decided by literal equality, and complex doubles
//! (`Complex64`), used for numeric residual checks and for non-rational
//! parameters. The [`Coeff`] trait is the small common surface the series
//! and polynomial code needs from both.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A field of coefficients for truncated power series and polynomial
/// evaluation. Implemented for `BigRational` (exact) and `Complex64`.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Exact embedding of a big integer where possible; for the floating
    /// field this rounds to the nearest double.
    fn from_bigint(n: &BigInt) -> Self;

    /// Magnitude as an `f64`, used for residuals and tail estimates.
    fn magnitude(&self) -> f64;
}

impl Coeff for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
}

impl Coeff for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Complex64::new(n.to_f64().unwrap_or(f64::INFINITY), 0.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Rational `p/q` from machine integers; q must be nonzero.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Nearest-double value of an exact rational.
pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

/// Exact rational as a complex double.
pub fn rat_to_complex(r: &BigRational) -> Complex64 {
    Complex64::new(rat_to_f64(r), 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_embedding_is_exact_for_rationals() {
        let n = BigInt::from(137_846_528_820i64); // C(40, 20)
        let r = BigRational::from_bigint(&n);
        assert_eq!(r, BigRational::from_integer(n));
    }

    #[test]
    fn magnitudes() {
        assert_eq!(ratio(-3, 2).magnitude(), 1.5);
        assert_eq!(Complex64::new(3.0, 4.0).magnitude(), 5.0);
    }
}
