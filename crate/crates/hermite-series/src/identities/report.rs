//! Check reports and the tolerance policy.
//!
//! Numeric checks pass when the absolute residual stays within
//! `max(abs_floor, tail_factor * tail)` and, for values of meaningful
//! size, the relative residual stays within `rel_tol`. The truncation
//! tail is estimated by the magnitude of the last retained term of each
//! side. Exact checks ignore all of that: they pass only on literal
//! rational equality.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::coeff::rat_to_f64;
use crate::error::{Error, Result};
use crate::value::Params;

/// Radius of the default evaluation disk in `t`.
pub const EVAL_DISK: f64 = 0.25;

/// How a check decided its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Both sides summed numerically; tolerance-based verdict.
    #[serde(rename = "numeric")]
    Numeric,
    /// Both sides expanded as exact rational coefficient vectors;
    /// verdict is literal equality.
    #[serde(rename = "exact")]
    Exact,
    /// Numeric, but the right side is a finite sum evaluated in full.
    #[serde(rename = "closed-form")]
    ClosedForm,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
            Mode::ClosedForm => "closed-form",
        }
    }
}

/// One side of a comparison: a numeric scalar or an exact coefficient
/// vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SideValue {
    Scalar { re: f64, im: f64 },
    Coeffs(Vec<String>),
}

impl SideValue {
    pub fn scalar(z: Complex64) -> Self {
        SideValue::Scalar { re: z.re, im: z.im }
    }

    pub fn coeffs(values: &[BigRational]) -> Self {
        SideValue::Coeffs(values.iter().map(|v| v.to_string()).collect())
    }
}

/// Outcome of one verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub mode: Mode,
    pub params: Params,
    pub order: usize,
    pub lhs: SideValue,
    pub rhs: SideValue,
    pub residual_abs: f64,
    pub residual_rel: f64,
    pub tail_estimate: Option<f64>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

/// Pass/fail thresholds for numeric mode.
#[derive(Clone, Copy, Debug)]
pub struct TolerancePolicy {
    /// Absolute residual floor that always passes.
    pub abs_floor: f64,
    /// Multiple of the tail estimate the residual may reach.
    pub tail_factor: f64,
    /// Relative residual bound.
    pub rel_tol: f64,
    /// Relative bound applies only when `max(|lhs|, |rhs|)` exceeds this.
    pub rel_guard: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy { abs_floor: 1e-12, tail_factor: 10.0, rel_tol: 1e-8, rel_guard: 1e-6 }
    }
}

impl TolerancePolicy {
    pub fn numeric_pass(&self, residual_abs: f64, residual_rel: f64, scale: f64, tail: f64) -> bool {
        let abs_ok = residual_abs <= self.abs_floor.max(self.tail_factor * tail);
        let rel_ok = scale <= self.rel_guard || residual_rel <= self.rel_tol;
        abs_ok && rel_ok
    }
}

/// Options shared by every check.
#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub policy: TolerancePolicy,
    /// Permit evaluation outside the default disk.
    pub allow_outside_disk: bool,
    /// Record wall-clock time in reports. Off by default so that
    /// identical configurations produce byte-identical output.
    pub measure_time: bool,
}

impl CheckOptions {
    pub(crate) fn elapsed_ms(&self, started: Instant) -> u64 {
        if self.measure_time {
            started.elapsed().as_millis() as u64
        } else {
            0
        }
    }
}

pub(crate) fn require_disk(t: f64, opts: &CheckOptions) -> Result<()> {
    if t.abs() <= EVAL_DISK || opts.allow_outside_disk {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "|t| = {} lies outside the evaluation disk |t| <= {EVAL_DISK}; \
             pass the override flag to evaluate anyway",
            t.abs()
        )))
    }
}

/// Assemble a numeric report; rejects non-finite values so NaN/Inf never
/// reach serialized output.
#[allow(clippy::too_many_arguments)]
pub(crate) fn numeric_report(
    id: &str,
    mode: Mode,
    params: Params,
    order: usize,
    lhs: Complex64,
    rhs: Complex64,
    tail_lhs: f64,
    tail_rhs: f64,
    opts: &CheckOptions,
    started: Instant,
) -> Result<CheckReport> {
    if !(lhs.is_finite() && rhs.is_finite() && tail_lhs.is_finite() && tail_rhs.is_finite()) {
        return Err(Error::Domain(format!(
            "check {id} produced a non-finite value; parameters are outside the usable domain"
        )));
    }
    let residual_abs = (lhs - rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    let residual_rel = if scale == 0.0 { 0.0 } else { residual_abs / scale };
    let tail = tail_lhs.max(tail_rhs);
    let passed = opts.policy.numeric_pass(residual_abs, residual_rel, scale, tail);
    Ok(CheckReport {
        id: id.to_string(),
        mode,
        params,
        order,
        lhs: SideValue::scalar(lhs),
        rhs: SideValue::scalar(rhs),
        residual_abs,
        residual_rel,
        tail_estimate: Some(tail),
        passed,
        elapsed_ms: opts.elapsed_ms(started),
    })
}

/// Assemble an exact-coefficient report; `passed` is literal equality.
pub(crate) fn exact_report(
    id: &str,
    params: Params,
    order: usize,
    lhs: &[BigRational],
    rhs: &[BigRational],
    opts: &CheckOptions,
    started: Instant,
) -> CheckReport {
    let passed = lhs == rhs;
    let mut residual_abs: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for (a, b) in lhs.iter().zip(rhs.iter()) {
        residual_abs = residual_abs.max(rat_to_f64(&(a - b)).abs());
        scale = scale.max(rat_to_f64(a).abs()).max(rat_to_f64(b).abs());
    }
    let residual_rel = if scale == 0.0 { 0.0 } else { residual_abs / scale };
    CheckReport {
        id: id.to_string(),
        mode: Mode::Exact,
        params,
        order,
        lhs: SideValue::coeffs(lhs),
        rhs: SideValue::coeffs(rhs),
        residual_abs,
        residual_rel,
        tail_estimate: None,
        passed,
        elapsed_ms: opts.elapsed_ms(started),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ratio;

    #[test]
    fn tolerance_policy_gates() {
        let p = TolerancePolicy::default();
        assert!(p.numeric_pass(1e-13, 1e-13, 1.0, 0.0));
        assert!(p.numeric_pass(5e-10, 1e-10, 5.0, 1e-10)); // inside 10x tail
        assert!(!p.numeric_pass(5e-10, 1e-10, 5.0, 1e-12)); // outside 10x tail
        assert!(!p.numeric_pass(1e-13, 1e-7, 1.0, 1e-13)); // relative failure
        assert!(p.numeric_pass(1e-13, 1.0, 1e-7, 1e-13)); // tiny values skip relative
    }

    #[test]
    fn json_shape_and_round_trip() {
        let report = CheckReport {
            id: "cor1".into(),
            mode: Mode::Numeric,
            params: Params::new(),
            order: 40,
            lhs: SideValue::scalar(Complex64::new(1.25, 0.0)),
            rhs: SideValue::scalar(Complex64::new(1.25, 0.0)),
            residual_abs: 0.0,
            residual_rel: 0.0,
            tail_estimate: Some(1e-30),
            passed: true,
            elapsed_ms: 0,
        };
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.starts_with("{\"id\":\"cor1\",\"mode\":\"numeric\""));
        assert!(text.contains("\"lhs\":{\"re\":1.25,\"im\":0.0}"));
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn exact_round_trip_keeps_coefficients() {
        let lhs = vec![ratio(1, 1), ratio(-11, 6)];
        let report = exact_report(
            "landen",
            Params::new(),
            1,
            &lhs,
            &lhs.clone(),
            &CheckOptions::default(),
            Instant::now(),
        );
        assert!(report.passed);
        assert_eq!(report.tail_estimate, None);
        let text = serde_json::to_string(&report).unwrap();
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
