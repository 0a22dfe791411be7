//! Parameter values: exact rationals, reals, and complex numbers.
//!
//! Identity checks take named parameters whose kind decides which modes are
//! reachable: rational parameters keep exact-coefficient mode available,
//! anything else forces numeric mode. The CLI parses `p/q` strings into
//! rationals, plain decimals into reals and `a+bi` strings into complex
//! values.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeff::{rat_to_f64, ratio};
use crate::error::{Error, Result};

/// One named parameter value of a check.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    /// Exact rational; keeps exact-coefficient mode reachable.
    Rational(BigRational),
    /// Real double; numeric mode only.
    Real(f64),
    /// Complex double; numeric mode only.
    Complex(Complex64),
}

/// Named parameters of a check, ordered by name for stable output.
pub type Params = BTreeMap<String, ParamValue>;

impl ParamValue {
    pub fn rational(p: i64, q: i64) -> Self {
        ParamValue::Rational(ratio(p, q))
    }

    pub fn integer(n: i64) -> Self {
        ParamValue::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ParamValue::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ParamValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Integer content if the value is an exact integer.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            ParamValue::Rational(r) if r.is_integer() => r.numer().to_i64(),
            _ => None,
        }
    }

    /// Real content; `None` when the value has a nonzero imaginary part.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            ParamValue::Rational(r) => Some(rat_to_f64(r)),
            ParamValue::Real(x) => Some(*x),
            ParamValue::Complex(z) if z.im == 0.0 => Some(z.re),
            ParamValue::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            ParamValue::Rational(r) => Complex64::new(rat_to_f64(r), 0.0),
            ParamValue::Real(x) => Complex64::new(*x, 0.0),
            ParamValue::Complex(z) => *z,
        }
    }

    /// Parse a CLI parameter: `p/q` or a bare integer is rational, a decimal
    /// is real, and `a+bi` (also `bi`, `i`, `-i`) is complex.
    pub fn parse(s: &str) -> Result<ParamValue> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Usage("empty parameter value".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let p = BigInt::from_str(num.trim())
                .map_err(|_| Error::Usage(format!("bad rational numerator in {s:?}")))?;
            let q = BigInt::from_str(den.trim())
                .map_err(|_| Error::Usage(format!("bad rational denominator in {s:?}")))?;
            if q == BigInt::from(0) {
                return Err(Error::Usage(format!("zero denominator in {s:?}")));
            }
            return Ok(ParamValue::Rational(BigRational::new(p, q)));
        }
        if let Ok(n) = BigInt::from_str(s) {
            return Ok(ParamValue::Rational(BigRational::from_integer(n)));
        }
        if s.ends_with('i') || s.ends_with('I') {
            return parse_complex(s);
        }
        if let Ok(x) = f64::from_str(s) {
            if !x.is_finite() {
                return Err(Error::Usage(format!("non-finite parameter {s:?}")));
            }
            return Ok(ParamValue::Real(x));
        }
        Err(Error::Usage(format!(
            "cannot parse parameter {s:?}; expected p/q, a decimal, or a+bi"
        )))
    }
}

fn parse_complex(s: &str) -> Result<ParamValue> {
    let body = &s[..s.len() - 1]; // strip trailing 'i'
    // Split the imaginary coefficient from an optional real part at the last
    // sign that is not an exponent sign.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(idx, c)| {
            (c == '+' || c == '-') && !matches!(&body[idx - 1..idx], "e" | "E")
        })
        .map(|(idx, _)| idx)
        .last();
    let (re_str, im_str) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let re = f64::from_str(re_str.trim())
        .map_err(|_| Error::Usage(format!("bad real part in {s:?}")))?;
    let im = match im_str.trim() {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => f64::from_str(t).map_err(|_| Error::Usage(format!("bad imaginary part in {s:?}")))?,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(Error::Usage(format!("non-finite parameter {s:?}")));
    }
    Ok(ParamValue::Complex(Complex64::new(re, im)))
}

/// Render a complex double the way parameters and report values print:
/// `re` when purely real, otherwise `re+imi`.
pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Rational(r) => write!(f, "{r}"),
            ParamValue::Real(x) => write!(f, "{x}"),
            ParamValue::Complex(z) => write!(f, "{}", format_complex(*z)),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValueRepr {
    Num(f64),
    Cx { re: f64, im: f64 },
    Str(String),
}

impl Serialize for ParamValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Rational(r) => ValueRepr::Str(r.to_string()).serialize(ser),
            ParamValue::Real(x) => ValueRepr::Num(*x).serialize(ser),
            ParamValue::Complex(z) => ValueRepr::Cx { re: z.re, im: z.im }.serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for ParamValue {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        match ValueRepr::deserialize(de)? {
            ValueRepr::Num(x) => Ok(ParamValue::Real(x)),
            ValueRepr::Cx { re, im } => Ok(ParamValue::Complex(Complex64::new(re, im))),
            ValueRepr::Str(s) => {
                let r = BigRational::from_str(&s)
                    .map_err(|e| serde::de::Error::custom(format!("bad rational {s:?}: {e}")))?;
                Ok(ParamValue::Rational(r))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_kinds() {
        assert_eq!(ParamValue::parse("1/3").unwrap(), ParamValue::rational(1, 3));
        assert_eq!(ParamValue::parse("-7").unwrap(), ParamValue::integer(-7));
        assert_eq!(ParamValue::parse("0.3").unwrap(), ParamValue::Real(0.3));
        assert_eq!(
            ParamValue::parse("1+i").unwrap(),
            ParamValue::Complex(Complex64::new(1.0, 1.0))
        );
        assert_eq!(
            ParamValue::parse("-2.5-0.5i").unwrap(),
            ParamValue::Complex(Complex64::new(-2.5, -0.5))
        );
        assert_eq!(
            ParamValue::parse("2i").unwrap(),
            ParamValue::Complex(Complex64::new(0.0, 2.0))
        );
        assert!(ParamValue::parse("1/0").is_err());
        assert!(ParamValue::parse("abc").is_err());
    }

    #[test]
    fn exponent_signs_do_not_split_complex_parts() {
        assert_eq!(
            ParamValue::parse("1e-2+3e-1i").unwrap(),
            ParamValue::Complex(Complex64::new(0.01, 0.3))
        );
    }

    #[test]
    fn json_round_trip() {
        for v in [
            ParamValue::rational(-11, 6),
            ParamValue::Real(0.25),
            ParamValue::Complex(Complex64::new(1.0, -2.0)),
        ] {
            let text = serde_json::to_string(&v).unwrap();
            let back: ParamValue = serde_json::from_str(&text).unwrap();
            assert_eq!(back, v);
        }
    }
}
