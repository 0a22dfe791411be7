//! Harmonic numbers, Laguerre polynomials, generalized binomial
//! coefficients, Stirling numbers of the second kind (including the
//! complex-order Stirling functions) and real powers `k^alpha`.
//!
//! Everything that can be exact is exact: harmonic numbers are summed in
//! rational arithmetic, Laguerre values at rational arguments come out as
//! literal fractions, and integer-order Stirling numbers are rationals
//! (with integer value). Only genuinely non-rational data, `k^alpha` for
//! non-integer `alpha`, lives in floating point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Largest index accepted by [`harmonic`].
pub const HARMONIC_CAP: usize = 100_000;

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Exact integer binomial coefficient `C(n, k)`.
pub fn binom_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1); // divides exactly at each step
    }
    acc
}

/// Generalized harmonic number: the partial sum of `1/j^order` for
/// `j = 1..=n`, with the empty sum at `n = 0`. Only orders 1 and 2 occur
/// in the identities.
pub fn harmonic(n: usize, order: u32) -> Result<BigRational> {
    Ok(harmonic_all(n, order)?.pop().expect("n+1 values"))
}

/// All harmonic numbers `H_0 ..= H_n` of the given order.
pub fn harmonic_all(n: usize, order: u32) -> Result<Vec<BigRational>> {
    if !(order == 1 || order == 2) {
        return Err(Error::Usage(format!("harmonic order must be 1 or 2, got {order}")));
    }
    if n > HARMONIC_CAP {
        return Err(Error::Capacity(format!("harmonic index {n} exceeds cap {HARMONIC_CAP}")));
    }
    let mut values = Vec::with_capacity(n + 1);
    let mut acc = BigRational::zero();
    values.push(acc.clone());
    for j in 1..=n {
        let denom = if order == 1 { BigInt::from(j) } else { BigInt::from(j) * j };
        acc += BigRational::new(BigInt::one(), denom);
        values.push(acc.clone());
    }
    Ok(values)
}

/// Laguerre polynomial value from the explicit sum
/// `L_n(z) = sum_k C(n,k) (-1)^k z^k / k!`. Exact at rational `z`.
pub fn laguerre_eval<T: Coeff>(n: usize, z: &T) -> Result<T> {
    if n > super::hermite::DEGREE_CAP {
        return Err(Error::Capacity(format!(
            "laguerre degree {n} exceeds cap {}",
            super::hermite::DEGREE_CAP
        )));
    }
    let mut sum = T::zero();
    let mut zk_over_fact = T::one(); // z^k / k!
    for k in 0..=n {
        if k > 0 {
            zk_over_fact = zk_over_fact * z.clone() / T::from_i64(k as i64);
        }
        let term = T::from_bigint(&binom_int(n, k)) * zk_over_fact.clone();
        sum = if k.is_multiple_of(2) { sum + term } else { sum - term };
    }
    Ok(sum)
}

/// All values `L_0(z) ..= L_n(z)` by the stable three-term recurrence
/// `(n+1) L_{n+1} = (2n+1-z) L_n - n L_{n-1}`; the independent route to
/// [`laguerre_eval`].
pub fn laguerre_all<T: Coeff>(n: usize, z: &T) -> Result<Vec<T>> {
    if n > super::hermite::DEGREE_CAP {
        return Err(Error::Capacity(format!(
            "laguerre degree {n} exceeds cap {}",
            super::hermite::DEGREE_CAP
        )));
    }
    let mut values = Vec::with_capacity(n + 1);
    values.push(T::one());
    if n == 0 {
        return Ok(values);
    }
    values.push(T::one() - z.clone());
    for m in 1..n {
        let a = T::from_i64(2 * m as i64 + 1) - z.clone();
        let next = (a * values[m].clone() - T::from_i64(m as i64) * values[m - 1].clone())
            / T::from_i64(m as i64 + 1);
        values.push(next);
    }
    Ok(values)
}

/// Falling-factorial binomial coefficient `C(p, n) = p(p-1)...(p-n+1)/n!`
/// for `p` in any coefficient field.
pub fn binom_general<T: Coeff>(p: &T, n: usize) -> T {
    let mut acc = T::one();
    for i in 0..n {
        acc = acc * (p.clone() - T::from_i64(i as i64)) / T::from_i64(i as i64 + 1);
    }
    acc
}

/// Real power `k^alpha = exp(alpha ln k)` on the principal branch;
/// `k >= 1` so the logarithm is always real.
pub fn power_alpha(k: u64, alpha: Complex64) -> Result<Complex64> {
    if k == 0 {
        return Err(Error::Domain("power_alpha requires k >= 1".into()));
    }
    Ok((alpha * (k as f64).ln()).exp())
}

/// Stirling number of the second kind for integer order `m >= 1`, from
/// the finite binomial sum `(1/n!) sum_{k=1..n} C(n,k) (-1)^(n-k) k^m`.
pub fn stirling_exact(m: u32, n: usize) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::Domain("stirling order must be nonzero".into()));
    }
    let mut sum = BigInt::zero();
    for k in 1..=n {
        let term = binom_int(n, k) * BigInt::from(k).pow(m);
        if (n - k).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if n == 0 {
        // Empty sum: S(m, 0) = 0 for m >= 1.
        return Ok(BigRational::zero());
    }
    Ok(BigRational::new(sum, factorial(n)))
}

/// Stirling function of the second kind at complex order `alpha != 0`,
/// with the `k = 0` summand defined as zero.
pub fn stirling_complex(alpha: Complex64, n: usize) -> Result<Complex64> {
    if alpha == Complex64::zero() {
        return Err(Error::Domain("stirling order alpha must be nonzero".into()));
    }
    let mut sum = Complex64::zero();
    for k in 1..=n {
        let binom = Complex64::from_bigint(&binom_int(n, k));
        let term = binom * power_alpha(k as u64, alpha)?;
        sum += if (n - k).is_multiple_of(2) { term } else { -term };
    }
    let n_fact = Complex64::from_bigint(&factorial(n));
    Ok(sum / n_fact)
}

/// True when a rational is a nonnegative integer that fits in `u32`.
pub fn as_small_nonneg_int(r: &BigRational) -> Option<u32> {
    use num_traits::ToPrimitive;
    if r.is_integer() && !r.is_negative() {
        r.numer().to_u32()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat_to_f64, ratio};

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0, 1).unwrap(), BigRational::zero());
        assert_eq!(harmonic(3, 1).unwrap(), ratio(11, 6));
        assert_eq!(harmonic(2, 2).unwrap(), ratio(5, 4));
        assert!(harmonic(1, 3).is_err());
        assert!(harmonic(HARMONIC_CAP + 1, 1).is_err());
    }

    #[test]
    fn laguerre_values() {
        assert_eq!(laguerre_eval(0, &ratio(9, 2)).unwrap(), BigRational::one());
        // L_1(z) = 1 - z
        assert_eq!(laguerre_eval(1, &ratio(1, 3)).unwrap(), ratio(2, 3));
        // Direct sum 1 - 2 + 1/2 at z = 1.
        assert_eq!(laguerre_eval(2, &BigRational::one()).unwrap(), ratio(-1, 2));
    }

    #[test]
    fn laguerre_at_zero_is_one() {
        for n in 0..=50 {
            assert_eq!(laguerre_eval(n, &BigRational::zero()).unwrap(), BigRational::one());
        }
    }

    #[test]
    fn laguerre_sum_matches_recurrence() {
        let z = ratio(5, 7);
        let by_recurrence = laguerre_all(24, &z).unwrap();
        for (n, v) in by_recurrence.iter().enumerate() {
            assert_eq!(&laguerre_eval(n, &z).unwrap(), v, "mismatch at degree {n}");
        }
    }

    #[test]
    fn binom_general_values() {
        assert_eq!(binom_general(&ratio(22, 7), 0), BigRational::one());
        assert_eq!(binom_general(&ratio(3, 1), 2), ratio(3, 1));
        // (1/2)(-1/2)/2
        assert_eq!(binom_general(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn binom_int_matches_general() {
        for n in 0..=12usize {
            for k in 0..=n {
                let p = BigRational::from_integer(BigInt::from(n));
                assert_eq!(BigRational::from_integer(binom_int(n, k)), binom_general(&p, k));
            }
        }
    }

    #[test]
    fn stirling_values() {
        // Single term 1^alpha.
        assert_eq!(stirling_exact(7, 1).unwrap(), BigRational::one());
        // (0 - 2 + 8) / 2
        assert_eq!(stirling_exact(3, 2).unwrap(), ratio(3, 1));
        // Vanishes above the diagonal.
        assert_eq!(stirling_exact(2, 3).unwrap(), BigRational::zero());
        assert!(stirling_exact(0, 2).is_err());
        assert!(stirling_complex(Complex64::zero(), 2).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // 2-D triangle recurrence reads clearest indexed
    fn stirling_matches_classical_recurrence() {
        // S(m, n) = S(m-1, n-1) + n S(m-1, n), S(1, 1) = 1.
        let cap = 12usize;
        let mut table = vec![vec![BigRational::zero(); cap + 1]; cap + 1];
        table[0][0] = BigRational::one();
        for m in 1..=cap {
            for n in 1..=m {
                table[m][n] =
                    &table[m - 1][n - 1] + BigRational::from_integer(BigInt::from(n)) * &table[m - 1][n];
            }
        }
        for m in 1..=cap {
            for n in 1..=m {
                assert_eq!(
                    stirling_exact(m as u32, n).unwrap(),
                    table[m][n],
                    "S({m},{n}) disagrees with the recurrence"
                );
            }
        }
    }

    #[test]
    fn stirling_complex_agrees_with_exact_at_integer_order() {
        for m in 1..=6u32 {
            for n in 0..=8usize {
                let exact = rat_to_f64(&stirling_exact(m, n).unwrap());
                let numeric = stirling_complex(Complex64::new(m as f64, 0.0), n).unwrap();
                assert!(
                    (numeric.re - exact).abs() <= 1e-10 * exact.abs().max(1.0),
                    "S({m},{n}): {numeric} vs {exact}"
                );
                assert!(numeric.im.abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn power_alpha_values() {
        let one = power_alpha(1, Complex64::new(2.5, -1.0)).unwrap();
        assert_eq!(one, Complex64::one());
        let sqrt = power_alpha(4, Complex64::new(0.5, 0.0)).unwrap();
        assert!((sqrt.re - 2.0).abs() < 1e-13);
        let cube = power_alpha(2, Complex64::new(3.0, 0.0)).unwrap();
        assert!((cube.re - 8.0).abs() <= 8.0 * 1e-13);
        assert!(power_alpha(0, Complex64::one()).is_err());
    }
}
