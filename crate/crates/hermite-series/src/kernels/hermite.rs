//! Physicists' Hermite polynomials.
//!
//! Two independent construction routes are kept on purpose. Values and
//! coefficients used by the identity checks come from the three-term
//! recurrence `H_0 = 1`, `H_1 = 2x`, `H_{n+1} = 2x H_n - 2n H_{n-1}`.
//! The cross-validation oracle iterates the symbolic step
//! `P_{k+1} = 2x P_k - P_k'` over integer polynomials, which is the
//! derivative form of the family with the Gaussian factored out. Tests
//! assert the two routes produce identical integer coefficients.

use num_bigint::BigInt;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Largest admitted polynomial degree for the evaluation routes.
pub const DEGREE_CAP: usize = 512;

/// Largest degree the symbolic oracle accepts; it exists for
/// cross-validation, not production evaluation.
pub const ORACLE_CAP: usize = 64;

fn check_cap(n: usize, cap: usize, what: &str) -> Result<()> {
    if n > cap {
        Err(Error::Capacity(format!("{what} degree {n} exceeds cap {cap}")))
    } else {
        Ok(())
    }
}

/// Evaluate `H_n(x)` by the three-term recurrence. Exact when `x` is
/// rational.
pub fn hermite_eval<T: Coeff>(n: usize, x: &T) -> Result<T> {
    check_cap(n, DEGREE_CAP, "hermite")?;
    Ok(hermite_all(n, x)?.pop().expect("n+1 values"))
}

/// All values `H_0(x) ..= H_n(x)` in one recurrence sweep.
pub fn hermite_all<T: Coeff>(n: usize, x: &T) -> Result<Vec<T>> {
    check_cap(n, DEGREE_CAP, "hermite")?;
    let two_x = T::from_i64(2) * x.clone();
    let mut values = Vec::with_capacity(n + 1);
    values.push(T::one());
    if n == 0 {
        return Ok(values);
    }
    values.push(two_x.clone());
    for m in 1..n {
        let next = two_x.clone() * values[m].clone()
            - T::from_i64(2 * m as i64) * values[m - 1].clone();
        values.push(next);
    }
    Ok(values)
}

/// A Hermite polynomial with exact integer coefficients; index `j` holds
/// the coefficient of `x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitePoly {
    degree: usize,
    coeffs: Vec<BigInt>,
}

impl HermitePoly {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Horner evaluation at any coefficient field element.
    pub fn eval<T: Coeff>(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + T::from_bigint(c);
        }
        acc
    }

    /// Integer coefficients of `H_n` via the three-term recurrence on
    /// coefficient vectors.
    pub fn recurrence(n: usize) -> Result<HermitePoly> {
        check_cap(n, DEGREE_CAP, "hermite")?;
        let mut prev = vec![BigInt::from(1)]; // H_0
        if n == 0 {
            return Ok(HermitePoly { degree: 0, coeffs: prev });
        }
        let mut cur = vec![BigInt::from(0), BigInt::from(2)]; // H_1
        for m in 1..n {
            let mut next = vec![BigInt::from(0); m + 2];
            // 2x * H_m
            for (j, c) in cur.iter().enumerate() {
                next[j + 1] += 2 * c;
            }
            // - 2m * H_{m-1}
            for (j, c) in prev.iter().enumerate() {
                next[j] -= 2 * m * c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        Ok(HermitePoly { degree: n, coeffs: cur })
    }
}

/// Independent coefficient oracle: iterate `P_{k+1} = 2x P_k - P_k'`
/// starting from `P_0 = 1` over integer polynomials.
pub fn hermite_rodrigues_oracle(n: usize) -> Result<HermitePoly> {
    check_cap(n, ORACLE_CAP, "hermite oracle")?;
    let mut p = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(0); p.len() + 1];
        for (j, c) in p.iter().enumerate() {
            next[j + 1] += 2 * c; // 2x * P
            if j >= 1 {
                next[j - 1] -= j * c; // - P'
            }
        }
        p = next;
    }
    Ok(HermitePoly { degree: n, coeffs: p })
}
