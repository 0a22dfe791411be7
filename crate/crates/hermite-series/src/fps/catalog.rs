//! Catalog of named exact generating functions.
//!
//! Every entry expands to exact rational coefficients. Entries that are
//! quotients or products of logarithmic series are computed by series
//! arithmetic from the primitive log/dilog expansions, not from the
//! closed-form coefficient sequences they are known to equal; the
//! identity suite checks those equalities as theorems rather than
//! assuming them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::ratio;
use crate::error::{Error, Result};
use crate::kernels::SequenceSpec;
use crate::value::ParamValue;

use super::series::{geometric_series, RatSeries, Series};

/// Every name accepted by [`catalog_series`].
pub const CATALOG_NAMES: &[&str] = &[
    "neg-log1m-over-t",
    "neg-log1m",
    "log1m-over-1m",
    "half-log-sq-1p-over-neg2t",
    "li2",
    "li2-neg-plus-half-logsq",
    "neg-li2-over-1m",
    "binom-p",
    "exp-z",
    "geometric",
];

/// Optional parameters for the parameterized catalog entries.
#[derive(Clone, Debug, Default)]
pub struct CatalogParams {
    /// Exponent parameter of `binom-p`, i.e. `(1-t)^(-p-1)`.
    pub p: Option<BigRational>,
    /// Rate parameter of `exp-z`, i.e. `e^(z t)`.
    pub z: Option<BigRational>,
}

/// `ln(1+t) = sum_{k>=1} (-1)^(k-1) t^k / k`.
fn log1p(order: usize) -> RatSeries {
    Series::from_fn(order, |k| {
        if k == 0 {
            BigRational::zero()
        } else if k % 2 == 1 {
            ratio(1, k as i64)
        } else {
            ratio(-1, k as i64)
        }
    })
}

/// `-ln(1-t) = sum_{k>=1} t^k / k`.
fn neg_log1m(order: usize) -> RatSeries {
    Series::from_fn(order, |k| if k == 0 { BigRational::zero() } else { ratio(1, k as i64) })
}

/// `Li2(t) = sum_{k>=1} t^k / k^2`.
fn li2(order: usize) -> RatSeries {
    Series::from_fn(order, |k| {
        if k == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::one(), BigInt::from(k) * k)
        }
    })
}

/// Expand a named generating function to exact rational coefficients of
/// degree `0 ..= order`.
pub fn catalog_series(name: &str, params: &CatalogParams, order: usize) -> Result<RatSeries> {
    match name {
        "neg-log1m-over-t" => Ok(Series::from_fn(order, |k| ratio(1, k as i64 + 1))),
        "neg-log1m" => Ok(neg_log1m(order)),
        "log1m-over-1m" => {
            let log1m = neg_log1m(order).neg();
            Ok(log1m.mul(&geometric_series(order, &BigRational::one())))
        }
        "half-log-sq-1p-over-neg2t" => {
            // -(1/(2t)) ln^2(1+t); the square has zero coefficients below t^2.
            let sq = {
                let l = log1p(order + 1);
                l.mul(&l)
            };
            Ok(sq.shift_down(1)?.scale(&ratio(-1, 2)))
        }
        "li2" => Ok(li2(order)),
        "li2-neg-plus-half-logsq" => {
            let half_sq = {
                let l = log1p(order);
                l.mul(&l).scale(&ratio(1, 2))
            };
            Ok(li2(order).alternate_signs().add(&half_sq))
        }
        "neg-li2-over-1m" => {
            Ok(li2(order).mul(&geometric_series(order, &BigRational::one())).neg())
        }
        "binom-p" => {
            let p = params
                .p
                .clone()
                .ok_or_else(|| Error::Usage("catalog entry binom-p needs parameter p".into()))?;
            let spec = SequenceSpec::BinomialP { p: ParamValue::Rational(p) };
            Ok(Series::new(spec.terms_exact(order)?))
        }
        "exp-z" => {
            let z = params
                .z
                .clone()
                .ok_or_else(|| Error::Usage("catalog entry exp-z needs parameter z".into()))?;
            let spec = SequenceSpec::ExpCoeff { z: ParamValue::Rational(z) };
            Ok(Series::new(spec.terms_exact(order)?))
        }
        "geometric" => Ok(geometric_series(order, &BigRational::one())),
        _ => Err(Error::Usage(format!(
            "unknown catalog entry {name:?}; known entries: {}",
            CATALOG_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::transform::euler_transform;

    #[test]
    fn reciprocal_catalog_head() {
        let s = catalog_series("neg-log1m-over-t", &CatalogParams::default(), 3).unwrap();
        assert_eq!(s.coeffs(), &[ratio(1, 1), ratio(1, 2), ratio(1, 3), ratio(1, 4)]);
    }

    #[test]
    fn log_over_one_minus_head() {
        let s = catalog_series("log1m-over-1m", &CatalogParams::default(), 3).unwrap();
        assert_eq!(s.coeffs(), &[ratio(0, 1), ratio(-1, 1), ratio(-3, 2), ratio(-11, 6)]);
    }

    #[test]
    fn half_log_square_head_matches_naive_squaring() {
        // Independent oracle: square ln(1+t) by naive convolution of its
        // coefficient list, then divide by -2t.
        let order = 6usize;
        let log_coeffs: Vec<BigRational> = (0..=order + 1)
            .map(|k| if k == 0 { BigRational::zero() } else { ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64) })
            .collect();
        let mut sq = vec![BigRational::zero(); order + 2];
        for i in 0..=order + 1 {
            for j in 0..=order + 1 - i {
                sq[i + j] += &log_coeffs[i] * &log_coeffs[j];
            }
        }
        let expected: Vec<BigRational> =
            (0..=order).map(|k| ratio(-1, 2) * &sq[k + 1]).collect();

        let s = catalog_series("half-log-sq-1p-over-neg2t", &CatalogParams::default(), order).unwrap();
        assert_eq!(s.coeffs(), &expected[..]);
        // Frozen head: 0, -1/2, 1/2 (and ln^2(1+t) = t^2 - t^3 + 11/12 t^4 - ...).
        assert_eq!(&s.coeffs()[..3], &[ratio(0, 1), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(sq[2], ratio(1, 1));
        assert_eq!(sq[3], ratio(-1, 1));
        assert_eq!(sq[4], ratio(11, 12));
    }

    #[test]
    fn unknown_name_is_a_usage_error() {
        let err = catalog_series("nope", &CatalogParams::default(), 4).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        assert!(err.to_string().contains("geometric"));
    }

    #[test]
    fn parameterized_entries_require_their_parameter() {
        assert!(catalog_series("binom-p", &CatalogParams::default(), 4).is_err());
        assert!(catalog_series("exp-z", &CatalogParams::default(), 4).is_err());
    }

    #[test]
    fn first_catalog_entry_is_invariant_under_alternating_euler_transform() {
        let f = catalog_series("neg-log1m-over-t", &CatalogParams::default(), 32).unwrap();
        let one = BigRational::one();
        assert_eq!(euler_transform(&f, &one, &-one.clone()), f);
    }

    #[test]
    fn half_log_square_reflection() {
        // -f(-t) = (1/(1-t)) f(t/(1-t)) for f = -(1/(2t)) ln^2(1+t).
        let f = catalog_series("half-log-sq-1p-over-neg2t", &CatalogParams::default(), 32).unwrap();
        let one = BigRational::one();
        assert_eq!(f.alternate_signs().neg(), euler_transform(&f, &one, &one));
    }
}
