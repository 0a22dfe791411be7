//! The identity registry and suite runner.
//!
//! Every identity the crate can verify is registered here with its
//! available modes, canonical parameter points and an admissible range
//! for pseudo-random draws. Suite runs are deterministic: the per-identity
//! generator is seeded from the suite seed and the identity id, so a
//! filtered run reproduces exactly the reports the full run would have
//! produced for the same ids.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::ratio;
use crate::error::{Error, Result};
use crate::kernels::SequenceSpec;
use crate::value::{ParamValue, Params};

use super::checks::{
    closed_form_check, coefficient_check, corollary_check, derivative_identity_check,
    lemma1_check, mehler_check, mehler_shifted_check, ClosedFormKind,
};
use super::report::{CheckOptions, CheckReport, Mode, SideValue};

/// A registered identity: its id, what it states, the modes it can run
/// in and the parameters it understands.
#[derive(Clone, Copy, Debug)]
pub struct IdentityInstance {
    pub id: &'static str,
    pub description: &'static str,
    pub modes: &'static [Mode],
    pub params: &'static [&'static str],
}

const NUMERIC_EXACT: &[Mode] = &[Mode::Numeric, Mode::Exact];
const EXACT_ONLY: &[Mode] = &[Mode::Exact];
const NUMERIC_ONLY: &[Mode] = &[Mode::Numeric];
const CLOSED_ONLY: &[Mode] = &[Mode::ClosedForm];

/// Registry in report order.
pub const REGISTRY: &[IdentityInstance] = &[
    IdentityInstance {
        id: "cor1",
        description: "shifted-reciprocal weights on both sides",
        modes: NUMERIC_EXACT,
        params: &["x", "t"],
    },
    IdentityInstance {
        id: "cor2",
        description: "reciprocal weights against harmonic numbers",
        modes: NUMERIC_EXACT,
        params: &["x", "t"],
    },
    IdentityInstance {
        id: "cor3",
        description: "harmonic-number weights against reciprocals",
        modes: NUMERIC_EXACT,
        params: &["x", "t"],
    },
    IdentityInstance {
        id: "cor4",
        description: "harmonic numbers over k+1 on both sides",
        modes: NUMERIC_EXACT,
        params: &["x", "t"],
    },
    IdentityInstance {
        id: "cor5",
        description: "harmonic over k against square harmonic numbers",
        modes: NUMERIC_EXACT,
        params: &["x", "t"],
    },
    IdentityInstance {
        id: "cor6",
        description: "exponential coefficients against Laguerre values",
        modes: NUMERIC_EXACT,
        params: &["x", "t", "z"],
    },
    IdentityInstance {
        id: "cor7",
        description: "Laguerre values against exponential coefficients",
        modes: NUMERIC_EXACT,
        params: &["x", "t", "z"],
    },
    IdentityInstance {
        id: "cor8",
        description: "bilinear Hermite series; y is absent from the left side",
        modes: NUMERIC_EXACT,
        params: &["x", "t", "z", "y"],
    },
    IdentityInstance {
        id: "cor9",
        description: "rising binomials against falling binomials",
        modes: NUMERIC_EXACT,
        params: &["x", "t", "p"],
    },
    IdentityInstance {
        id: "cor10",
        description: "powers k^alpha against Stirling numbers of the second kind",
        modes: NUMERIC_EXACT,
        params: &["x", "t", "alpha"],
    },
    IdentityInstance {
        id: "eq2.37",
        description: "binomial closed form; the right side has exactly p+1 terms",
        modes: CLOSED_ONLY,
        params: &["x", "t", "p"],
    },
    IdentityInstance {
        id: "eq2.41",
        description: "power-sum closed form; the right side has exactly m+1 terms",
        modes: CLOSED_ONLY,
        params: &["x", "t", "m"],
    },
    IdentityInstance {
        id: "mehler",
        description: "bilinear generating series against its closed form",
        modes: NUMERIC_ONLY,
        params: &["x", "z", "t"],
    },
    IdentityInstance {
        id: "mehler-shifted",
        description: "shifted bilinear expansion against the same closed form",
        modes: NUMERIC_ONLY,
        params: &["x", "z", "y", "t"],
    },
    IdentityInstance {
        id: "deriv-identity",
        description: "n-fold derivative of the Hermite generating series",
        modes: EXACT_ONLY,
        params: &["n", "x"],
    },
    IdentityInstance {
        id: "lemma1",
        description: "scalar transform lemma with exponential g and a_k = 1/(k+1)",
        modes: NUMERIC_ONLY,
        params: &["c", "t"],
    },
    IdentityInstance {
        id: "landen",
        description: "dilogarithm Landen identity at the coefficient level",
        modes: EXACT_ONLY,
        params: &[],
    },
    IdentityInstance {
        id: "genfunc-2.8",
        description: "log over 1-t expands to negated harmonic numbers",
        modes: EXACT_ONLY,
        params: &[],
    },
    IdentityInstance {
        id: "genfunc-2.13",
        description: "scaled squared log expands to alternating harmonic weights",
        modes: EXACT_ONLY,
        params: &[],
    },
    IdentityInstance {
        id: "genfunc-2.20",
        description: "dilog over 1-t expands to negated square harmonic numbers",
        modes: EXACT_ONLY,
        params: &[],
    },
    IdentityInstance {
        id: "addition-2.27",
        description: "Hermite addition formula as a binomial sum",
        modes: EXACT_ONLY,
        params: &["z", "y"],
    },
    IdentityInstance {
        id: "vandermonde-2.33",
        description: "alternating Vandermonde convolution",
        modes: EXACT_ONLY,
        params: &["p"],
    },
    IdentityInstance {
        id: "inversion-involution",
        description: "binomial transform round-trip and its Euler form",
        modes: EXACT_ONLY,
        params: &["seed", "count"],
    },
];

pub fn registry() -> &'static [IdentityInstance] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static IdentityInstance> {
    REGISTRY.iter().find(|inst| inst.id == id).ok_or_else(|| {
        let ids: Vec<&str> = REGISTRY.iter().map(|inst| inst.id).collect();
        Error::Usage(format!("unknown identity {id:?}; known ids: {}", ids.join(", ")))
    })
}

/// Glob-style matching with `*` as the only wildcard.
pub fn wildcard_match(pattern: &str, text: &str) -> bool {
    if !pattern.contains('*') {
        return pattern == text;
    }
    let parts: Vec<&str> = pattern.split('*').collect();
    let mut pos = 0usize;
    if !text.starts_with(parts[0]) {
        return false;
    }
    pos += parts[0].len();
    let last = parts.len() - 1;
    for (i, part) in parts.iter().enumerate().skip(1) {
        if part.is_empty() {
            continue;
        }
        if i == last {
            return text.len() >= pos + part.len() && text.ends_with(part);
        }
        match text[pos..].find(part) {
            Some(found) => pos += found + part.len(),
            None => return false,
        }
    }
    true
}

fn p_real(v: f64) -> ParamValue {
    ParamValue::Real(v)
}

fn params_of(entries: &[(&str, ParamValue)]) -> Params {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Canonical (reproducible) parameter points per identity and mode,
/// with the order each should run at.
pub fn canonical_points(id: &str, mode: Mode) -> Vec<(Params, usize)> {
    let xt = [("x", p_real(0.3)), ("t", p_real(0.1))];
    match (id, mode) {
        ("cor1" | "cor2" | "cor3" | "cor4" | "cor5", Mode::Numeric) => {
            vec![(params_of(&xt), 40)]
        }
        ("cor6" | "cor7", Mode::Numeric) => {
            vec![(params_of(&[("x", p_real(0.3)), ("t", p_real(0.1)), ("z", p_real(0.5))]), 40)]
        }
        ("cor8", Mode::Numeric) => vec![(
            params_of(&[
                ("x", p_real(0.3)),
                ("t", p_real(0.1)),
                ("z", p_real(0.5)),
                ("y", p_real(0.3)),
            ]),
            40,
        )],
        ("cor9", Mode::Numeric) => vec![(
            params_of(&[("x", p_real(0.3)), ("t", p_real(0.1)), ("p", ParamValue::integer(3))]),
            40,
        )],
        ("cor10", Mode::Numeric) => {
            let base = [("x", p_real(0.3)), ("t", p_real(0.1))];
            [
                ParamValue::integer(3),
                ParamValue::rational(1, 2),
                ParamValue::Complex(Complex64::new(1.0, 1.0)),
            ]
            .into_iter()
            .map(|alpha| {
                let mut p = params_of(&base);
                p.insert("alpha".into(), alpha);
                (p, 40)
            })
            .collect()
        }
        ("cor1" | "cor2" | "cor3" | "cor4" | "cor5", Mode::Exact) => {
            vec![(params_of(&[("x", ParamValue::rational(1, 2))]), 32)]
        }
        ("cor6" | "cor7", Mode::Exact) => vec![(
            params_of(&[("x", ParamValue::rational(1, 2)), ("z", ParamValue::integer(1))]),
            32,
        )],
        ("cor8", Mode::Exact) => vec![(
            params_of(&[
                ("x", ParamValue::rational(1, 2)),
                ("z", ParamValue::rational(1, 2)),
                ("y", ParamValue::rational(3, 10)),
            ]),
            32,
        )],
        ("cor9", Mode::Exact) => vec![(
            params_of(&[("x", ParamValue::rational(1, 2)), ("p", ParamValue::integer(2))]),
            32,
        )],
        ("cor10", Mode::Exact) => vec![(
            params_of(&[("x", ParamValue::rational(1, 2)), ("alpha", ParamValue::integer(3))]),
            32,
        )],
        ("eq2.37", Mode::ClosedForm) => (1..=3)
            .map(|p| {
                let mut m = params_of(&xt);
                m.insert("p".into(), ParamValue::integer(p));
                (m, 40)
            })
            .collect(),
        ("eq2.41", Mode::ClosedForm) => (1..=3)
            .map(|mm| {
                let mut m = params_of(&xt);
                m.insert("m".into(), ParamValue::integer(mm));
                (m, 40)
            })
            .collect(),
        ("mehler", Mode::Numeric) => vec![(
            params_of(&[("x", p_real(0.2)), ("z", p_real(0.4)), ("t", p_real(0.1))]),
            40,
        )],
        ("mehler-shifted", Mode::Numeric) => [0.1, 0.3]
            .into_iter()
            .map(|y| {
                (
                    params_of(&[
                        ("x", p_real(0.2)),
                        ("z", p_real(0.4)),
                        ("y", p_real(y)),
                        ("t", p_real(0.1)),
                    ]),
                    40,
                )
            })
            .collect(),
        ("deriv-identity", Mode::Exact) => vec![
            (params_of(&[("n", ParamValue::integer(1)), ("x", ParamValue::rational(1, 2))]), 16),
            (params_of(&[("n", ParamValue::integer(3)), ("x", ParamValue::rational(1, 3))]), 16),
        ],
        ("lemma1", Mode::Numeric) => vec![
            (params_of(&[("c", ParamValue::rational(3, 5)), ("t", p_real(0.1))]), 40),
            (params_of(&[("c", ParamValue::integer(1)), ("t", p_real(0.15))]), 48),
        ],
        ("landen" | "genfunc-2.8" | "genfunc-2.13" | "genfunc-2.20", Mode::Exact) => {
            vec![(Params::new(), 32)]
        }
        ("addition-2.27", Mode::Exact) => vec![(
            params_of(&[("z", ParamValue::rational(1, 2)), ("y", ParamValue::rational(1, 3))]),
            20,
        )],
        ("vandermonde-2.33", Mode::Exact) => {
            vec![(params_of(&[("p", ParamValue::rational(5, 2))]), 30)]
        }
        ("inversion-involution", Mode::Exact) => vec![(
            params_of(&[("seed", ParamValue::integer(1)), ("count", ParamValue::integer(200))]),
            32,
        )],
        _ => vec![],
    }
}

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn draw_real(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> ParamValue {
    ParamValue::Real(lo + unit_f64(rng) * (hi - lo))
}

/// Small rational with numerator in `[-num_span, num_span]` and
/// denominator in `[1, max_den]`; zero excluded when `nonzero` is set.
fn draw_rational(rng: &mut ChaCha8Rng, num_span: u64, max_den: u64, nonzero: bool) -> ParamValue {
    loop {
        let num = (rng.next_u64() % (2 * num_span + 1)) as i64 - num_span as i64;
        let den = (1 + rng.next_u64() % max_den) as i64;
        if nonzero && num == 0 {
            continue;
        }
        return ParamValue::rational(num, den);
    }
}

fn draw_int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> ParamValue {
    ParamValue::integer(lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64)
}

/// One pseudo-random admissible parameter point for an identity/mode.
fn draw_point(id: &str, mode: Mode, rng: &mut ChaCha8Rng) -> (Params, usize) {
    let mut params = Params::new();
    match mode {
        Mode::Numeric | Mode::ClosedForm => {
            let order = 40;
            match id {
                "mehler" | "mehler-shifted" => {
                    params.insert("x".into(), draw_real(rng, -0.6, 0.6));
                    params.insert("z".into(), draw_real(rng, -0.6, 0.6));
                    params.insert("t".into(), draw_real(rng, 0.02, 0.2));
                    if id == "mehler-shifted" {
                        params.insert("y".into(), draw_real(rng, 0.05, 0.5));
                    }
                }
                "lemma1" => {
                    params.insert("c".into(), draw_rational(rng, 10, 5, false));
                    params.insert("t".into(), draw_real(rng, 0.02, 0.2));
                }
                _ => {
                    params.insert("x".into(), draw_real(rng, -0.5, 0.5));
                    params.insert("t".into(), draw_real(rng, 0.02, 0.2));
                    match id {
                        "cor6" | "cor7" => {
                            params.insert("z".into(), draw_real(rng, -1.0, 1.0));
                        }
                        "cor8" => {
                            params.insert("z".into(), draw_real(rng, -1.0, 1.0));
                            params.insert("y".into(), draw_real(rng, 0.05, 0.5));
                        }
                        "cor9" => {
                            params.insert("p".into(), draw_rational(rng, 6, 3, false));
                        }
                        "cor10" => {
                            let alpha = match rng.next_u64() % 3 {
                                0 => draw_int(rng, 1, 5),
                                1 => {
                                    let num = 1 + (rng.next_u64() % 5) as i64;
                                    ParamValue::rational(num, 2)
                                }
                                _ => {
                                    let re = 0.3 + unit_f64(rng) * 1.2;
                                    let im = 0.1 + unit_f64(rng) * 0.9;
                                    let im = if rng.next_u64().is_multiple_of(2) { im } else { -im };
                                    ParamValue::Complex(Complex64::new(re, im))
                                }
                            };
                            params.insert("alpha".into(), alpha);
                        }
                        "eq2.37" => {
                            params.insert("p".into(), draw_int(rng, 1, 5));
                        }
                        "eq2.41" => {
                            params.insert("m".into(), draw_int(rng, 1, 5));
                        }
                        _ => {}
                    }
                }
            }
            (params, order)
        }
        Mode::Exact => {
            let order = 20;
            match id {
                "deriv-identity" => {
                    params.insert("n".into(), draw_int(rng, 0, 6));
                    params.insert("x".into(), draw_rational(rng, 3, 6, false));
                    (params, 12)
                }
                "addition-2.27" => {
                    params.insert("z".into(), draw_rational(rng, 3, 5, false));
                    params.insert("y".into(), draw_rational(rng, 3, 5, true));
                    (params, 12)
                }
                "vandermonde-2.33" => {
                    params.insert("p".into(), draw_rational(rng, 6, 3, false));
                    (params, 16)
                }
                "inversion-involution" => {
                    params.insert("seed".into(), draw_int(rng, 0, i64::MAX / 2));
                    params.insert("count".into(), ParamValue::integer(25));
                    (params, 24)
                }
                "landen" | "genfunc-2.8" | "genfunc-2.13" | "genfunc-2.20" => {
                    (params, 16 + (rng.next_u64() % 17) as usize)
                }
                _ => {
                    params.insert("x".into(), draw_rational(rng, 3, 6, false));
                    match id {
                        "cor6" | "cor7" => {
                            params.insert("z".into(), draw_rational(rng, 3, 4, false));
                        }
                        "cor8" => {
                            params.insert("z".into(), draw_rational(rng, 3, 4, false));
                            params.insert("y".into(), draw_rational(rng, 3, 4, true));
                        }
                        "cor9" => {
                            params.insert("p".into(), draw_rational(rng, 5, 3, false));
                        }
                        "cor10" => {
                            params.insert("alpha".into(), draw_int(rng, 1, 4));
                        }
                        _ => {}
                    }
                    (params, order)
                }
            }
        }
    }
}

/// Run one identity in one mode at explicit parameters. Unknown ids,
/// unsupported modes and malformed parameters come back as usage errors.
pub fn run_check(
    id: &str,
    mode: Mode,
    params: &Params,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let inst = find(id)?;
    if !inst.modes.contains(&mode) {
        let available: Vec<&str> = inst.modes.iter().map(|m| m.as_str()).collect();
        return Err(Error::Usage(format!(
            "identity {id} does not support mode {}; available: {}",
            mode.as_str(),
            available.join(", ")
        )));
    }
    let f64_param = |name: &str| -> Result<f64> {
        params
            .get(name)
            .ok_or_else(|| Error::Usage(format!("identity {id} needs parameter {name}")))?
            .to_f64()
            .ok_or_else(|| Error::Usage(format!("parameter {name} of {id} must be real")))
    };
    match mode {
        Mode::Numeric => match id {
            "mehler" => mehler_check(f64_param("x")?, f64_param("z")?, f64_param("t")?, order, opts),
            "mehler-shifted" => mehler_shifted_check(
                f64_param("x")?,
                f64_param("z")?,
                f64_param("y")?,
                f64_param("t")?,
                order,
                opts,
            ),
            "lemma1" => {
                let c = params
                    .get("c")
                    .ok_or_else(|| Error::Usage("lemma1 needs parameter c".into()))?;
                lemma1_check(c, &SequenceSpec::InvKPlusOne, f64_param("t")?, order, opts)
            }
            _ => {
                let x = f64_param("x")?;
                let t = f64_param("t")?;
                let mut rest = params.clone();
                rest.remove("x");
                rest.remove("t");
                corollary_check(id, &rest, x, t, order, opts)
            }
        },
        Mode::ClosedForm => {
            let (kind, name) = match id {
                "eq2.37" => (ClosedFormKind::BinomP, "p"),
                "eq2.41" => (ClosedFormKind::StirlingM, "m"),
                _ => return Err(Error::Usage(format!("{id} has no closed-form mode"))),
            };
            let bound = params
                .get(name)
                .and_then(|v| v.as_integer())
                .filter(|v| *v >= 1)
                .ok_or_else(|| {
                    Error::Usage(format!("{id} needs positive integer parameter {name}"))
                })?;
            closed_form_check(kind, bound as u32, f64_param("x")?, f64_param("t")?, order, opts)
        }
        Mode::Exact => match id {
            "deriv-identity" => {
                let n = params
                    .get("n")
                    .and_then(|v| v.as_integer())
                    .filter(|v| *v >= 0)
                    .ok_or_else(|| {
                        Error::Usage("deriv-identity needs nonnegative integer n".into())
                    })?;
                let x = match params.get("x") {
                    Some(ParamValue::Rational(r)) => r.clone(),
                    Some(other) => {
                        return Err(Error::ModeUnavailable(format!(
                            "x = {other} is not rational"
                        )))
                    }
                    None => ratio(1, 2),
                };
                derivative_identity_check(n as usize, &x, order, opts)
            }
            _ => coefficient_check(id, params, order, opts),
        },
    }
}

/// Which modes a suite run includes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeSelect {
    All,
    /// Numeric and closed-form checks.
    Numeric,
    /// Exact-coefficient checks only.
    Exact,
}

impl ModeSelect {
    fn admits(self, mode: Mode) -> bool {
        match self {
            ModeSelect::All => true,
            ModeSelect::Numeric => matches!(mode, Mode::Numeric | Mode::ClosedForm),
            ModeSelect::Exact => mode == Mode::Exact,
        }
    }
}

fn fnv1a(text: &str) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Execute every registered identity in every admitted mode: canonical
/// points first, then `trials` seeded random draws. Failures are
/// reported, not thrown; reports come back in registry order.
pub fn run_suite(
    filter: Option<&str>,
    seed: u64,
    trials: u32,
    select: ModeSelect,
    opts: &CheckOptions,
) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for inst in REGISTRY {
        if let Some(pattern) = filter {
            if !wildcard_match(pattern, inst.id) {
                continue;
            }
        }
        for &mode in inst.modes {
            if !select.admits(mode) {
                continue;
            }
            let mut points = canonical_points(inst.id, mode);
            let salt = fnv1a(inst.id) ^ fnv1a(mode.as_str());
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
            for _ in 0..trials {
                points.push(draw_point(inst.id, mode, &mut rng));
            }
            for (params, order) in points {
                match run_check(inst.id, mode, &params, order, opts) {
                    Ok(report) => reports.push(report),
                    Err(err) => reports.push(error_report(inst.id, mode, params, order, err)),
                }
            }
        }
    }
    reports
}

/// A check that could not run at all still yields a (failed) report so
/// suite output stays complete.
fn error_report(id: &str, mode: Mode, params: Params, order: usize, err: Error) -> CheckReport {
    // The error text is carried in place of coefficient vectors.
    CheckReport {
        id: id.to_string(),
        mode,
        params,
        order,
        lhs: SideValue::Coeffs(vec![format!("error: {err}")]),
        rhs: SideValue::Coeffs(vec![]),
        residual_abs: 0.0,
        residual_rel: 0.0,
        tail_estimate: None,
        passed: false,
        elapsed_ms: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|i| i.id).collect();
        let expected = [
            "cor1", "cor2", "cor3", "cor4", "cor5", "cor6", "cor7", "cor8", "cor9", "cor10",
            "eq2.37", "eq2.41", "mehler", "mehler-shifted", "deriv-identity", "lemma1", "landen",
            "genfunc-2.8", "genfunc-2.13", "genfunc-2.20", "addition-2.27", "vandermonde-2.33",
            "inversion-involution",
        ];
        for id in expected {
            assert!(ids.contains(&id), "missing {id}");
        }
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn every_identity_has_canonical_points_and_a_mode() {
        for inst in REGISTRY {
            assert!(!inst.modes.is_empty(), "{} has no mode", inst.id);
            for &mode in inst.modes {
                assert!(
                    !canonical_points(inst.id, mode).is_empty(),
                    "{} lacks canonical points for {:?}",
                    inst.id,
                    mode
                );
            }
        }
    }

    #[test]
    fn wildcard_semantics() {
        assert!(wildcard_match("cor*", "cor10"));
        assert!(wildcard_match("*2.8", "genfunc-2.8"));
        assert!(wildcard_match("genfunc-*", "genfunc-2.13"));
        assert!(wildcard_match("*", "anything"));
        assert!(wildcard_match("cor1", "cor1"));
        assert!(!wildcard_match("cor1", "cor10"));
        assert!(!wildcard_match("cor*8", "cor10"));
        assert!(wildcard_match("c*r*8", "cor8"));
    }

    #[test]
    fn unknown_id_lists_known_ids() {
        let err = find("nosuch").unwrap_err();
        assert!(err.to_string().contains("cor1"));
        assert!(err.to_string().contains("inversion-involution"));
    }

    #[test]
    fn unsupported_mode_is_a_usage_error() {
        let err =
            run_check("mehler", Mode::Exact, &Params::new(), 16, &CheckOptions::default());
        assert!(matches!(err, Err(Error::Usage(_))));
    }

    #[test]
    fn filtered_suite_only_contains_matches() {
        let reports = run_suite(
            Some("genfunc-*"),
            1,
            1,
            ModeSelect::All,
            &CheckOptions::default(),
        );
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.id.starts_with("genfunc-")));
        let empty = run_suite(
            Some("nonexistent"),
            1,
            1,
            ModeSelect::All,
            &CheckOptions::default(),
        );
        assert!(empty.is_empty());
    }

    #[test]
    fn suite_is_deterministic_for_fixed_seed() {
        let opts = CheckOptions::default();
        let a = run_suite(Some("cor2"), 7, 3, ModeSelect::All, &opts);
        let b = run_suite(Some("cor2"), 7, 3, ModeSelect::All, &opts);
        assert_eq!(a, b);
        let c = run_suite(Some("cor2"), 8, 3, ModeSelect::All, &opts);
        assert_ne!(a, c, "different seeds should draw different points");
    }
}
