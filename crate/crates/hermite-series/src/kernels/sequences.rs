//! Named coefficient sequences.
//!
//! A [`SequenceSpec`] generates the terms `a_k` that a series
//! transformation check plugs into the master identity. Each kind is
//! evaluable numerically, and exactly whenever its parameters are
//! rational; the two routes must agree and a property test holds them to
//! that.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::{rat_to_complex, Coeff};
use crate::error::{Error, Result};
use crate::value::ParamValue;

use super::hermite::hermite_all;
use super::special::{harmonic_all, laguerre_all, power_alpha};

/// A named, parameterized coefficient sequence `a_0, a_1, ...`.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSpec {
    /// `a_k = 1`
    One,
    /// `a_k = 1/(k+1)`
    InvKPlusOne,
    /// `a_0 = 0`, `a_k = 1/k`
    InvK,
    /// `a_k = H_k` (harmonic numbers)
    Harmonic,
    /// `a_k = H_k/(k+1)`
    HarmonicOverKPlusOne,
    /// `a_0 = 0`, `a_k = H_k/k`
    HarmonicOverK,
    /// `a_k = z^k/k!`
    ExpCoeff { z: ParamValue },
    /// `a_k = L_k(z)` (Laguerre values)
    Laguerre { z: ParamValue },
    /// `a_k = H_k(z)/(2y)^k` (Hermite values scaled by a power)
    HermiteRatio { z: ParamValue, y: ParamValue },
    /// `a_k = C(p+k, k)`
    BinomialP { p: ParamValue },
    /// `a_0 = 0`, `a_k = k^alpha`
    PowerAlpha { alpha: ParamValue },
}

impl SequenceSpec {
    /// Registry name with parameters, e.g. `laguerre(1/2)`.
    pub fn name(&self) -> String {
        match self {
            SequenceSpec::One => "one".into(),
            SequenceSpec::InvKPlusOne => "one-over-k-plus-1".into(),
            SequenceSpec::InvK => "one-over-k".into(),
            SequenceSpec::Harmonic => "harmonic".into(),
            SequenceSpec::HarmonicOverKPlusOne => "harmonic-over-k-plus-1".into(),
            SequenceSpec::HarmonicOverK => "harmonic-over-k".into(),
            SequenceSpec::ExpCoeff { z } => format!("exp-coeff({z})"),
            SequenceSpec::Laguerre { z } => format!("laguerre({z})"),
            SequenceSpec::HermiteRatio { z, y } => format!("hermite-ratio({z},{y})"),
            SequenceSpec::BinomialP { p } => format!("binom({p})"),
            SequenceSpec::PowerAlpha { alpha } => format!("power({alpha})"),
        }
    }

    /// Whether exact rational evaluation is available.
    pub fn is_exact(&self) -> bool {
        match self {
            SequenceSpec::One
            | SequenceSpec::InvKPlusOne
            | SequenceSpec::InvK
            | SequenceSpec::Harmonic
            | SequenceSpec::HarmonicOverKPlusOne
            | SequenceSpec::HarmonicOverK => true,
            SequenceSpec::ExpCoeff { z } | SequenceSpec::Laguerre { z } => z.is_rational(),
            SequenceSpec::HermiteRatio { z, y } => z.is_rational() && y.is_rational(),
            SequenceSpec::BinomialP { p } => p.is_rational(),
            // k^alpha is rational only for nonnegative integer exponents.
            SequenceSpec::PowerAlpha { alpha } => matches!(alpha.as_integer(), Some(m) if m >= 0),
        }
    }

    /// Exact terms `a_0 ..= a_n`; fails with a mode error when a parameter
    /// is not rational.
    pub fn terms_exact(&self, n: usize) -> Result<Vec<BigRational>> {
        let need_exact = |v: &ParamValue, what: &str| -> Result<BigRational> {
            v.as_rational().cloned().ok_or_else(|| {
                Error::ModeUnavailable(format!("{what} of {} is not rational", self.name()))
            })
        };
        match self {
            SequenceSpec::One => Ok(vec![BigRational::one(); n + 1]),
            SequenceSpec::InvKPlusOne => Ok((0..=n)
                .map(|k| BigRational::new(BigInt::one(), BigInt::from(k + 1)))
                .collect()),
            SequenceSpec::InvK => Ok((0..=n)
                .map(|k| {
                    if k == 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::one(), BigInt::from(k))
                    }
                })
                .collect()),
            SequenceSpec::Harmonic => harmonic_all(n, 1),
            SequenceSpec::HarmonicOverKPlusOne => Ok(harmonic_all(n, 1)?
                .into_iter()
                .enumerate()
                .map(|(k, h)| h / BigRational::from_integer(BigInt::from(k + 1)))
                .collect()),
            SequenceSpec::HarmonicOverK => Ok(harmonic_all(n, 1)?
                .into_iter()
                .enumerate()
                .map(|(k, h)| {
                    if k == 0 {
                        BigRational::zero()
                    } else {
                        h / BigRational::from_integer(BigInt::from(k))
                    }
                })
                .collect()),
            SequenceSpec::ExpCoeff { z } => {
                let z = need_exact(z, "z")?;
                let mut terms = Vec::with_capacity(n + 1);
                let mut acc = BigRational::one();
                terms.push(acc.clone());
                for k in 1..=n {
                    acc = acc * &z / BigRational::from_integer(BigInt::from(k));
                    terms.push(acc.clone());
                }
                Ok(terms)
            }
            SequenceSpec::Laguerre { z } => laguerre_all(n, &need_exact(z, "z")?),
            SequenceSpec::HermiteRatio { z, y } => {
                let z = need_exact(z, "z")?;
                let y = need_exact(y, "y")?;
                if y.is_zero() {
                    return Err(Error::Domain("hermite-ratio requires y != 0".into()));
                }
                let hermites = hermite_all(n, &z)?;
                let scale = BigRational::from_integer(BigInt::from(2)) * y;
                let mut power = BigRational::one();
                Ok(hermites
                    .into_iter()
                    .enumerate()
                    .map(|(k, h)| {
                        if k > 0 {
                            power *= &scale;
                        }
                        h / power.clone()
                    })
                    .collect())
            }
            SequenceSpec::BinomialP { p } => {
                let p = need_exact(p, "p")?;
                let mut terms = Vec::with_capacity(n + 1);
                let mut acc = BigRational::one();
                terms.push(acc.clone());
                for k in 1..=n {
                    // C(p+k, k) = C(p+k-1, k-1) * (p+k)/k
                    let num = &p + BigRational::from_integer(BigInt::from(k));
                    acc = acc * num / BigRational::from_integer(BigInt::from(k));
                    terms.push(acc.clone());
                }
                Ok(terms)
            }
            SequenceSpec::PowerAlpha { alpha } => {
                let m = alpha.as_integer().filter(|m| *m >= 0).ok_or_else(|| {
                    Error::ModeUnavailable(format!(
                        "power({alpha}) is exact only for nonnegative integer exponents"
                    ))
                })?;
                Ok((0..=n)
                    .map(|k| {
                        if k == 0 {
                            BigRational::zero()
                        } else {
                            BigRational::from_integer(BigInt::from(k).pow(m as u32))
                        }
                    })
                    .collect())
            }
        }
    }

    /// Numeric terms `a_0 ..= a_n`. Exact kinds are evaluated exactly and
    /// rounded once at the end.
    pub fn terms_complex(&self, n: usize) -> Result<Vec<Complex64>> {
        if self.is_exact() {
            return Ok(self.terms_exact(n)?.iter().map(rat_to_complex).collect());
        }
        match self {
            SequenceSpec::ExpCoeff { z } => {
                let z = z.to_complex();
                let mut terms = Vec::with_capacity(n + 1);
                let mut acc = Complex64::one();
                terms.push(acc);
                for k in 1..=n {
                    acc = acc * z / (k as f64);
                    terms.push(acc);
                }
                Ok(terms)
            }
            SequenceSpec::Laguerre { z } => laguerre_all(n, &z.to_complex()),
            SequenceSpec::HermiteRatio { z, y } => {
                let y = y.to_complex();
                if y == Complex64::zero() {
                    return Err(Error::Domain("hermite-ratio requires y != 0".into()));
                }
                let hermites = hermite_all(n, &z.to_complex())?;
                let scale = 2.0 * y;
                let mut power = Complex64::one();
                Ok(hermites
                    .into_iter()
                    .enumerate()
                    .map(|(k, h)| {
                        if k > 0 {
                            power *= scale;
                        }
                        h / power
                    })
                    .collect())
            }
            SequenceSpec::BinomialP { p } => {
                let p = p.to_complex();
                let mut terms = Vec::with_capacity(n + 1);
                let mut acc = Complex64::one();
                terms.push(acc);
                for k in 1..=n {
                    acc = acc * (p + k as f64) / (k as f64);
                    terms.push(acc);
                }
                Ok(terms)
            }
            SequenceSpec::PowerAlpha { alpha } => {
                let alpha = alpha.to_complex();
                let mut terms = Vec::with_capacity(n + 1);
                terms.push(Complex64::zero());
                for k in 1..=n {
                    terms.push(power_alpha(k as u64, alpha)?);
                }
                Ok(terms)
            }
            _ => unreachable!("parameter-free kinds are always exact"),
        }
    }

    /// Single exact term.
    pub fn term_exact(&self, k: usize) -> Result<BigRational> {
        Ok(self.terms_exact(k)?.pop().expect("k+1 terms"))
    }

    /// Single numeric term.
    pub fn term_complex(&self, k: usize) -> Result<Complex64> {
        Ok(self.terms_complex(k)?.pop().expect("k+1 terms"))
    }
}

/// Evaluate a sequence generically in either coefficient field.
pub fn terms_in<T: Coeff>(spec: &SequenceSpec, n: usize) -> Result<Vec<T>> {
    // Exact kinds route through rationals so that BigRational output stays
    // literal; the complex field reuses the same values.
    if spec.is_exact() {
        Ok(spec
            .terms_exact(n)?
            .iter()
            .map(|r| T::from_bigint(r.numer()) / T::from_bigint(r.denom()))
            .collect())
    } else {
        Err(Error::ModeUnavailable(format!(
            "{} has no exact evaluation; use terms_complex",
            spec.name()
        )))
    }
}
