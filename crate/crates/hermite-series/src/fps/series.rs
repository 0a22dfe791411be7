//! Truncated formal power series over a coefficient field.
//!
//! A series stores the dense coefficient prefix `c_0 ..= c_N` of its
//! truncation order `N`. Binary operations truncate to the minimum order
//! of their inputs and never read past it, so a result's coefficients are
//! valid exactly up to its own recorded order; there is no silent
//! zero-padding.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Finite prefix of a formal power series; index `j` holds the
/// coefficient of `t^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T: Coeff> {
    coeffs: Vec<T>,
}

/// Exact-rational series.
pub type RatSeries = Series<BigRational>;
/// Complex-floating series.
pub type CxSeries = Series<Complex64>;

impl<T: Coeff> Series<T> {
    /// Series from its coefficient prefix; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    /// Series built from a coefficient rule.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// The monomial `t^k`.
    pub fn monomial(order: usize, k: usize) -> Self {
        assert!(k <= order);
        let mut s = Self::zero(order);
        s.coeffs[k] = T::one();
        s
    }

    /// Truncation order `N`; coefficients are valid for `t^0 ..= t^N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &T {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Copy truncated to a lower order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series by truncation");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series::from_fn(order, |j| self.coeffs[j].clone() + other.coeffs[j].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Series::from_fn(order, |j| self.coeffs[j].clone() - other.coeffs[j].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    /// Cauchy product truncated at the minimum order of the inputs.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs }
    }

    /// Composition `self(inner)`; the inner series must have zero
    /// constant term for the truncated result to be well defined.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "series composition requires zero inner constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        // Horner: result = (...(c_N * inner + c_{N-1}) * inner + ...) + c_0
        let mut acc = Series::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Evaluate a polynomial (finite coefficient list, lowest degree
    /// first) at this series. Unlike [`Series::compose`] the argument may
    /// have a nonzero constant term because the sum is finite.
    pub fn apply_polynomial(&self, poly: &[T]) -> Self {
        let mut acc = Series::zero(self.order());
        for c in poly.iter().rev() {
            acc = acc.mul(self);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        acc
    }

    /// The series of `f(-t)`: flips the sign of every odd coefficient.
    pub fn alternate_signs(&self) -> Self {
        Series::from_fn(self.order(), |k| {
            if k.is_multiple_of(2) {
                self.coeffs[k].clone()
            } else {
                -self.coeffs[k].clone()
            }
        })
    }

    /// Multiply by `t^k`; the result is valid to order `order + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divide by `t^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!(
                "cannot divide by t^{k}: low-order coefficients are nonzero"
            )));
        }
        if k > self.order() {
            return Err(Error::Domain(format!("cannot divide order-{} series by t^{k}", self.order())));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }
}

/// The exponential series `sum t^k / k!` to the given order.
pub fn exp_series<T: Coeff>(order: usize) -> Series<T> {
    let mut c = T::one();
    Series::from_fn(order, |k| {
        if k > 0 {
            c = c.clone() / T::from_i64(k as i64);
        }
        c.clone()
    })
}

/// The geometric series `1/(1 - r t)` to the given order.
pub fn geometric_series<T: Coeff>(order: usize, r: &T) -> Series<T> {
    let mut c = T::one();
    Series::from_fn(order, |k| {
        if k > 0 {
            c = c.clone() * r.clone();
        }
        c.clone()
    })
}

impl<T: Coeff + fmt::Display> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;
    use num_traits::{One, Zero};

    fn rs(vals: &[(i64, i64)]) -> RatSeries {
        Series::new(vals.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    #[test]
    fn product_of_one_plus_and_one_minus() {
        let a = rs(&[(1, 1), (1, 1), (0, 1)]);
        let b = rs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b), rs(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn additive_identity() {
        let a = rs(&[(2, 3), (-1, 7), (5, 1)]);
        assert_eq!(a.add(&RatSeries::zero(2)), a);
    }

    #[test]
    fn geometric_times_one_minus_t_is_one() {
        let geo = geometric_series::<BigRational>(16, &BigRational::one());
        let one_minus_t = Series::from_fn(16, |k| match k {
            0 => ratio(1, 1),
            1 => ratio(-1, 1),
            _ => BigRational::zero(),
        });
        assert_eq!(geo.mul(&one_minus_t), RatSeries::one(16));
    }

    #[test]
    fn binary_operations_truncate_to_min_order() {
        let a = RatSeries::one(10);
        let b = RatSeries::one(4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.sub(&b).order(), 4);
    }

    #[test]
    fn compose_with_identity() {
        let outer = rs(&[(3, 1), (1, 2), (7, 5)]);
        let inner = RatSeries::monomial(2, 1);
        assert_eq!(outer.compose(&inner).unwrap(), outer);
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let outer = RatSeries::one(3);
        let inner = RatSeries::one(3);
        assert!(matches!(outer.compose(&inner), Err(Error::Domain(_))));
    }

    #[test]
    fn compose_geometric_with_mobius() {
        // 1/(1 - t/(1+t)) telescopes to 1 + t.
        let outer = geometric_series::<BigRational>(8, &BigRational::one());
        // t/(1+t) = t - t^2 + t^3 - ...
        let inner = Series::from_fn(8, |k| {
            if k == 0 {
                BigRational::zero()
            } else if k % 2 == 1 {
                ratio(1, 1)
            } else {
                ratio(-1, 1)
            }
        });
        let composed = outer.compose(&inner).unwrap();
        let mut expected = RatSeries::zero(8).into_coeffs();
        expected[0] = BigRational::one();
        expected[1] = BigRational::one();
        assert_eq!(composed, Series::new(expected));
    }

    #[test]
    fn shifts() {
        let a = rs(&[(0, 1), (0, 1), (1, 2)]);
        let down = a.shift_down(2).unwrap();
        assert_eq!(down, rs(&[(1, 2)]));
        assert_eq!(down.shift_up(2), a);
        assert!(rs(&[(1, 1), (0, 1)]).shift_down(1).is_err());
    }

    #[test]
    fn exp_series_prefix() {
        let e = exp_series::<BigRational>(4);
        assert_eq!(
            e.coeffs(),
            &[ratio(1, 1), ratio(1, 1), ratio(1, 2), ratio(1, 6), ratio(1, 24)]
        );
    }
}
