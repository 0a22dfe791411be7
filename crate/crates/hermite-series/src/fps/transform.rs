//! Binomial and Euler sequence transforms.
//!
//! The binomial transform `b_n = sum_k C(n,k) (-1)^k a_k` is an
//! involution: applying the same kernel to `b` restores `a`. The Euler
//! series transformation is its generating-function form: the transformed
//! series `(1/(1-lambda t)) f(mu t/(1-lambda t))` carries the weighted
//! sums `sum_k C(n,k) mu^k lambda^(n-k) a_k` as coefficients. Both a
//! substitution route and a direct-sum route are provided and must agree;
//! tests and the identity suite rely on that redundancy.

use crate::coeff::Coeff;
use crate::error::Result;
use crate::kernels::{binom_int, SequenceSpec};

use super::series::{geometric_series, Series};

/// Which way a transformed sequence was produced. Both directions use
/// the same alternating kernel; the distinction is bookkeeping for
/// round-trip tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A binomially transformed sequence together with its provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformedSequence<T: Coeff> {
    pub values: Vec<T>,
    pub source: Option<SequenceSpec>,
    pub direction: Direction,
}

/// Alternating binomial transform of a finite sequence. The same kernel
/// serves both directions.
pub fn binomial_transform<T: Coeff>(a: &[T], direction: Direction) -> TransformedSequence<T> {
    let values = (0..a.len())
        .map(|n| {
            let mut sum = T::zero();
            for (k, ak) in a.iter().take(n + 1).enumerate() {
                if ak.is_zero() {
                    continue;
                }
                let term = T::from_bigint(&binom_int(n, k)) * ak.clone();
                sum = if k.is_multiple_of(2) { sum + term } else { sum - term };
            }
            sum
        })
        .collect();
    TransformedSequence { values, source: None, direction }
}

/// Binomial transform of the first `n + 1` exact terms of a named
/// sequence, tagged with its source.
pub fn binomial_transform_spec(
    spec: &SequenceSpec,
    n: usize,
    direction: Direction,
) -> Result<TransformedSequence<num_rational::BigRational>> {
    let terms = spec.terms_exact(n)?;
    let mut out = binomial_transform(&terms, direction);
    out.source = Some(spec.clone());
    Ok(out)
}

/// Euler series transformation by substitution: the coefficients of
/// `(1/(1 - lambda t)) * f(mu t / (1 - lambda t))` to the order of `f`.
pub fn euler_transform<T: Coeff>(f: &Series<T>, lambda: &T, mu: &T) -> Series<T> {
    let order = f.order();
    // mu t / (1 - lambda t) = sum_{k>=1} mu lambda^(k-1) t^k
    let inner = geometric_series(order, lambda).scale(mu).shift_up(1).truncated(order);
    let composed = f.compose(&inner).expect("inner constant term is zero");
    geometric_series(order, lambda).mul(&composed)
}

/// The same transformation by the direct weighted sums
/// `b_n = sum_k C(n,k) mu^k lambda^(n-k) a_k`; the independent route to
/// [`euler_transform`].
pub fn euler_transform_direct<T: Coeff>(f: &Series<T>, lambda: &T, mu: &T) -> Series<T> {
    Series::from_fn(f.order(), |n| {
        let mut sum = T::zero();
        let mut mu_pow = T::one();
        for k in 0..=n {
            if k > 0 {
                mu_pow = mu_pow.clone() * mu.clone();
            }
            if f.coeff(k).is_zero() {
                continue;
            }
            let mut lambda_pow = T::one();
            for _ in 0..(n - k) {
                lambda_pow = lambda_pow * lambda.clone();
            }
            sum = sum + T::from_bigint(&binom_int(n, k)) * mu_pow.clone() * lambda_pow * f.coeff(k).clone();
        }
        sum
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;
    use crate::fps::series::RatSeries;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    #[test]
    fn constant_sequence_collapses() {
        let a = vec![BigRational::one(); 6];
        let b = binomial_transform(&a, Direction::Forward);
        assert_eq!(b.values[0], BigRational::one());
        assert!(b.values[1..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn reciprocal_shifted_sequence_is_a_fixed_point() {
        // a_k = 1/(k+1) transforms to b_n = 1/(n+1).
        let a: Vec<BigRational> = (0..12).map(|k| ratio(1, k + 1)).collect();
        let b = binomial_transform(&a, Direction::Forward);
        assert_eq!(b.values, a);
    }

    #[test]
    fn reciprocals_transform_to_negated_harmonic_numbers() {
        let spec = SequenceSpec::InvK;
        let b = binomial_transform_spec(&spec, 3, Direction::Forward).unwrap();
        assert_eq!(
            b.values,
            vec![ratio(0, 1), ratio(-1, 1), ratio(-3, 2), ratio(-11, 6)]
        );
        assert_eq!(b.source, Some(spec));
    }

    #[test]
    fn euler_transform_of_constant_sequence_collapses() {
        // a_k = 1: the alternating sums telescope to (1, 0, 0, ...).
        let f = RatSeries::new(vec![BigRational::one(); 9]);
        let one = BigRational::one();
        let g = euler_transform(&f, &one, &-one.clone());
        assert_eq!(g, RatSeries::one(8));
    }

    #[test]
    fn euler_transform_turns_binomial_tail_into_finite_polynomial() {
        // a_k = C(p+k, k) with p = 2 maps to the coefficients of (1-t)^2.
        let spec = SequenceSpec::BinomialP { p: crate::value::ParamValue::integer(2) };
        let f = RatSeries::new(spec.terms_exact(8).unwrap());
        let one = BigRational::one();
        let g = euler_transform(&f, &one, &-one.clone());
        let mut expected = vec![BigRational::zero(); 9];
        expected[0] = ratio(1, 1);
        expected[1] = ratio(-2, 1);
        expected[2] = ratio(1, 1);
        assert_eq!(g.into_coeffs(), expected);
    }

    #[test]
    fn euler_transform_of_exponential_yields_laguerre_values() {
        let spec = SequenceSpec::ExpCoeff { z: crate::value::ParamValue::integer(1) };
        let f = RatSeries::new(spec.terms_exact(8).unwrap());
        let one = BigRational::one();
        let g = euler_transform(&f, &one, &-one.clone());
        for (n, c) in g.coeffs().iter().enumerate() {
            let ln = crate::kernels::laguerre_eval(n, &BigRational::one()).unwrap();
            assert_eq!(c, &ln, "coefficient {n}");
        }
        assert_eq!(g.coeff(0), &ratio(1, 1));
        assert_eq!(g.coeff(1), &ratio(0, 1));
        assert_eq!(g.coeff(2), &ratio(-1, 2));
    }

    #[test]
    fn harmonic_over_k_transforms_to_negated_square_harmonics() {
        // sum C(n,k)(-1)^k H_k/k = -H_n^(2), checked to n = 30.
        let spec = SequenceSpec::HarmonicOverK;
        let b = binomial_transform_spec(&spec, 30, Direction::Forward).unwrap();
        let expected: Vec<BigRational> = crate::kernels::harmonic_all(30, 2)
            .unwrap()
            .into_iter()
            .map(|h| -h)
            .collect();
        assert_eq!(b.values, expected);
    }

    #[test]
    fn reciprocals_to_thirty() {
        // sum C(n,k)(-1)^k / k = -H_n, checked to n = 30.
        let b = binomial_transform_spec(&SequenceSpec::InvK, 30, Direction::Forward).unwrap();
        let expected: Vec<BigRational> = crate::kernels::harmonic_all(30, 1)
            .unwrap()
            .into_iter()
            .map(|h| -h)
            .collect();
        assert_eq!(b.values, expected);
    }

    #[test]
    fn harmonic_numbers_transform_to_negated_reciprocals() {
        // The inversion pair: sum C(n,k)(-1)^k H_k = -1/n for n >= 1.
        let b = binomial_transform_spec(&SequenceSpec::Harmonic, 32, Direction::Forward).unwrap();
        assert!(b.values[0].is_zero());
        for (n, v) in b.values.iter().enumerate().skip(1) {
            assert_eq!(v, &ratio(-1, n as i64), "index {n}");
        }
    }

    #[test]
    fn harmonic_over_k_plus_one_is_an_eigvector_up_to_sign() {
        // sum C(n,k)(-1)^k H_k/(k+1) = -H_n/(n+1), checked to n = 32.
        let spec = SequenceSpec::HarmonicOverKPlusOne;
        let a = spec.terms_exact(32).unwrap();
        let b = binomial_transform(&a, Direction::Forward);
        let expected: Vec<BigRational> = a.iter().map(|v| -v.clone()).collect();
        assert_eq!(b.values, expected);
    }

    #[test]
    fn laguerre_values_transform_to_exponential_coefficients() {
        // sum C(n,k)(-1)^k L_k(z) = z^n/n! for rational z, n <= 24.
        let z = crate::value::ParamValue::rational(2, 3);
        let lag = SequenceSpec::Laguerre { z: z.clone() };
        let b = binomial_transform_spec(&lag, 24, Direction::Forward).unwrap();
        let expected = SequenceSpec::ExpCoeff { z }.terms_exact(24).unwrap();
        assert_eq!(b.values, expected);
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-40i64..=40, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn involution_restores_the_sequence(a in prop::collection::vec(small_rational(), 1..=64)) {
            let forward = binomial_transform(&a, Direction::Forward);
            let back = binomial_transform(&forward.values, Direction::Inverse);
            prop_assert_eq!(back.values, a);
        }

        #[test]
        fn substitution_and_direct_sums_agree(
            a in prop::collection::vec(small_rational(), 1..=16),
            lam in -3i64..=3,
            mu in -3i64..=3,
        ) {
            let f = RatSeries::new(a);
            let lambda = BigRational::from_integer(lam.into());
            let mu = BigRational::from_integer(mu.into());
            prop_assert_eq!(
                euler_transform(&f, &lambda, &mu),
                euler_transform_direct(&f, &lambda, &mu)
            );
        }

        #[test]
        fn alternating_euler_matches_binomial_transform(
            a in prop::collection::vec(small_rational(), 1..=32),
        ) {
            let f = RatSeries::new(a.clone());
            let one = BigRational::one();
            let g = euler_transform(&f, &one, &-one.clone());
            let b = binomial_transform(&a, Direction::Forward);
            prop_assert_eq!(g.into_coeffs(), b.values);
        }
    }
}
