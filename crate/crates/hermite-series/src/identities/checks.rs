//! The check operations: numeric two-sided evaluation, exact coefficient
//! expansion, and finite closed forms.
//!
//! Numeric checks sum both sides of an identity independently in complex
//! doubles and compare; exact checks expand both sides as rational series
//! in `t` and demand literal coefficient equality. The two sides of a
//! check never share the machinery whose correctness the check is
//! supposed to establish: the generic transformation path computes
//! binomial transforms, while the direct corollary evaluators use the
//! special values (harmonic numbers, Laguerre values, Stirling numbers)
//! the identities are stated with.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{rat_to_complex, rat_to_f64, ratio};
use crate::error::{Error, Result};
use crate::fps::{
    binomial_transform, catalog_series, euler_transform, exp_series, CatalogParams, Direction,
    RatSeries, Series,
};
use crate::kernels::{
    as_small_nonneg_int, binom_general, binom_int, harmonic_all, hermite_all,
    laguerre_all, power_alpha, stirling_complex, stirling_exact, SequenceSpec, DEGREE_CAP,
};
use crate::value::{ParamValue, Params};

use super::report::{
    exact_report, numeric_report, require_disk, CheckOptions, CheckReport, Mode, EVAL_DISK,
};

fn cx(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn get(params: &Params, name: &str) -> Result<ParamValue> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| Error::Usage(format!("missing parameter {name}")))
}

fn get_f64(params: &Params, name: &str) -> Result<f64> {
    get(params, name)?
        .to_f64()
        .ok_or_else(|| Error::Usage(format!("parameter {name} must be real")))
}

fn get_rational(params: &Params, name: &str) -> Result<BigRational> {
    match get(params, name)? {
        ParamValue::Rational(r) => Ok(r),
        other => Err(Error::ModeUnavailable(format!(
            "parameter {name} = {other} is not rational; exact mode needs p/q values"
        ))),
    }
}

fn get_small_int(params: &Params, name: &str) -> Result<i64> {
    get(params, name)?
        .as_integer()
        .ok_or_else(|| Error::Usage(format!("parameter {name} must be an integer")))
}

/// Partial sum with exponential weights: `sum_{n=n0..=order} f(n) t^n/n!`
/// together with the magnitude of the last retained term.
fn sum_egf(
    n0: usize,
    order: usize,
    t: f64,
    mut f: impl FnMut(usize) -> Complex64,
) -> (Complex64, f64) {
    let mut weight = 1.0f64;
    let mut sum = Complex64::zero();
    let mut tail = 0.0;
    for n in 0..=order {
        if n > 0 {
            weight *= t / n as f64;
        }
        if n < n0 {
            continue;
        }
        let term = f(n) * weight;
        sum += term;
        if n == order {
            tail = term.norm();
        }
    }
    (sum, tail)
}

/// Partial sum with plain power weights: `sum_{n=n0..=order} f(n) t^n`.
fn sum_powers(
    n0: usize,
    order: usize,
    t: f64,
    mut f: impl FnMut(usize) -> Complex64,
) -> (Complex64, f64) {
    let mut weight = 1.0f64;
    let mut sum = Complex64::zero();
    let mut tail = 0.0;
    for n in 0..=order {
        if n > 0 {
            weight *= t;
        }
        if n < n0 {
            continue;
        }
        let term = f(n) * weight;
        sum += term;
        if n == order {
            tail = term.norm();
        }
    }
    (sum, tail)
}

/// `exp(2xt - t^2)` and friends.
fn exp_lin_quad(lin: f64, quad: f64, t: f64) -> f64 {
    (lin * t + quad * t * t).exp()
}

/// Exact expansion of `exp(lin t + quad t^2)` to the given order.
fn exp_poly_series(lin: &BigRational, quad: &BigRational, order: usize) -> RatSeries {
    let inner = Series::from_fn(order, |k| match k {
        1 => lin.clone(),
        2 if order >= 2 => quad.clone(),
        _ => BigRational::zero(),
    });
    exp_series::<BigRational>(order)
        .compose(&inner)
        .expect("inner constant term is zero")
}

/// Exact series `G_n(t) = H_n(u0 + u1 t)` for `n = 0..=n_max`, each
/// truncated at `order`, built by the three-term recurrence on
/// coefficient vectors.
fn hermite_at_linear(
    n_max: usize,
    u0: &BigRational,
    u1: &BigRational,
    order: usize,
) -> Result<Vec<RatSeries>> {
    if n_max > DEGREE_CAP {
        return Err(Error::Capacity(format!("hermite degree {n_max} exceeds cap {DEGREE_CAP}")));
    }
    let two_u0 = ratio(2, 1) * u0;
    let two_u1 = ratio(2, 1) * u1;
    let mut out: Vec<Vec<BigRational>> = Vec::with_capacity(n_max + 1);
    let mut g0 = vec![BigRational::zero(); order + 1];
    g0[0] = BigRational::one();
    out.push(g0);
    if n_max >= 1 {
        let mut g1 = vec![BigRational::zero(); order + 1];
        g1[0] = two_u0.clone();
        if order >= 1 {
            g1[1] = two_u1.clone();
        }
        out.push(g1);
    }
    for m in 1..n_max {
        let mut next = vec![BigRational::zero(); order + 1];
        let two_m = ratio(2 * m as i64, 1);
        for j in 0..=order {
            let mut c = &two_u0 * &out[m][j];
            if j >= 1 {
                c += &two_u1 * &out[m][j - 1];
            }
            c -= &two_m * &out[m - 1][j];
            next[j] = c;
        }
        out.push(next);
    }
    Ok(out.into_iter().map(Series::new).collect())
}

/// The sequence a named transformation instance feeds into the master
/// identity.
pub fn corollary_sequence(id: &str, params: &Params) -> Result<SequenceSpec> {
    Ok(match id {
        "cor1" => SequenceSpec::InvKPlusOne,
        "cor2" => SequenceSpec::InvK,
        "cor3" => SequenceSpec::Harmonic,
        "cor4" => SequenceSpec::HarmonicOverKPlusOne,
        "cor5" => SequenceSpec::HarmonicOverK,
        "cor6" => SequenceSpec::ExpCoeff { z: get(params, "z")? },
        "cor7" => SequenceSpec::Laguerre { z: get(params, "z")? },
        "cor8" => SequenceSpec::HermiteRatio { z: get(params, "z")?, y: get(params, "y")? },
        "cor9" => SequenceSpec::BinomialP { p: get(params, "p")? },
        "cor10" => {
            let alpha = get(params, "alpha")?;
            if alpha.to_complex() == Complex64::zero() {
                return Err(Error::Domain("cor10 requires alpha != 0".into()));
            }
            SequenceSpec::PowerAlpha { alpha }
        }
        _ => return Err(Error::Usage(format!("{id} has no associated sequence"))),
    })
}

/// Generic numeric check of the master transformation: the weighted
/// Hermite series of `a` against the exponential-prefactor series over
/// the binomial transform of `a`.
pub fn theorem1_check(
    seq: &SequenceSpec,
    x: f64,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    require_disk(t, opts)?;
    if order < 8 {
        return Err(Error::Usage(format!("theorem check needs order >= 8, got {order}")));
    }
    let a = seq.terms_complex(order)?;
    // The transform is computed exactly whenever the sequence allows it;
    // the alternating sums cancel catastrophically in floating point.
    let b: Vec<Complex64> = if seq.is_exact() {
        binomial_transform(&seq.terms_exact(order)?, Direction::Forward)
            .values
            .iter()
            .map(rat_to_complex)
            .collect()
    } else {
        binomial_transform(&a, Direction::Forward).values
    };
    let hx = hermite_all(order, &cx(x))?;
    let hxt = hermite_all(order, &cx(x - t))?;
    let (lhs, tail_lhs) = sum_egf(0, order, t, |n| a[n] * hx[n]);
    let prefactor = exp_lin_quad(2.0 * x, -1.0, t);
    let (rhs_sum, rhs_tail_raw) = sum_egf(0, order, t, |n| {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * hxt[n] * b[n]
    });
    let rhs = prefactor * rhs_sum;
    let mut params = Params::new();
    params.insert("x".into(), ParamValue::Real(x));
    params.insert("t".into(), ParamValue::Real(t));
    numeric_report(
        &format!("theorem1({})", seq.name()),
        Mode::Numeric,
        params,
        order,
        lhs,
        rhs,
        tail_lhs,
        prefactor.abs() * rhs_tail_raw,
        opts,
        started,
    )
}

/// Numeric Laguerre values with the exact route when `z` is rational.
fn laguerre_values(order: usize, z: &ParamValue) -> Result<Vec<Complex64>> {
    match z.as_rational() {
        Some(r) => Ok(laguerre_all(order, r)?.iter().map(rat_to_complex).collect()),
        None => laguerre_all(order, &z.to_complex()),
    }
}

fn harmonic_f64(order: usize, degree: u32) -> Result<Vec<f64>> {
    Ok(harmonic_all(order, degree)?.iter().map(rat_to_f64).collect())
}

/// Direct numeric evaluation of one named identity instance, both sides
/// in their stated forms.
pub fn corollary_check(
    id: &str,
    params: &Params,
    x: f64,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    if order < 8 {
        return Err(Error::Usage(format!("corollary check needs order >= 8, got {order}")));
    }
    let mut all_params = params.clone();
    all_params.insert("x".into(), ParamValue::Real(x));
    all_params.insert("t".into(), ParamValue::Real(t));

    let hx = hermite_all(order, &cx(x))?;
    let hxt = hermite_all(order, &cx(x - t))?;
    let prefactor = exp_lin_quad(2.0 * x, -1.0, t);
    let sign = |n: usize| if n.is_multiple_of(2) { 1.0 } else { -1.0 };

    let (lhs, rhs, tail_lhs, tail_rhs) = match id {
        "cor1" => {
            require_disk(t, opts)?;
            let (lhs, tl) = sum_egf(0, order, t, |n| hx[n] / (n as f64 + 1.0));
            let (r, tr) = sum_egf(0, order, t, |n| sign(n) * hxt[n] / (n as f64 + 1.0));
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor2" => {
            require_disk(t, opts)?;
            let harm = harmonic_f64(order, 1)?;
            let (lhs, tl) = sum_egf(1, order, t, |n| hx[n] / n as f64);
            let (r, tr) = sum_egf(1, order, t, |n| -sign(n) * hxt[n] * harm[n]);
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor3" => {
            require_disk(t, opts)?;
            let harm = harmonic_f64(order, 1)?;
            let (lhs, tl) = sum_egf(1, order, t, |n| hx[n] * harm[n]);
            let (r, tr) = sum_egf(1, order, t, |n| -sign(n) * hxt[n] / n as f64);
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor4" => {
            require_disk(t, opts)?;
            let harm = harmonic_f64(order, 1)?;
            let (lhs, tl) = sum_egf(1, order, t, |n| hx[n] * harm[n] / (n as f64 + 1.0));
            // The transform of H_k/(k+1) is -H_n/(n+1); the minus joins the
            // master identity's alternation, and H_0 = 0 starts the sum at 1.
            let (r, tr) = sum_egf(1, order, t, |n| -sign(n) * hxt[n] * harm[n] / (n as f64 + 1.0));
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor5" => {
            require_disk(t, opts)?;
            let harm = harmonic_f64(order, 1)?;
            let harm2 = harmonic_f64(order, 2)?;
            let (lhs, tl) = sum_egf(1, order, t, |n| hx[n] * harm[n] / n as f64);
            let (r, tr) = sum_egf(1, order, t, |n| -sign(n) * hxt[n] * harm2[n]);
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor6" => {
            require_disk(t, opts)?;
            let z = get(params, "z")?;
            let lag = laguerre_values(order, &z)?;
            let zc = z.to_complex();
            // (zt)^n/(n!)^2 = (z^n/n!) * t^n/n!
            let mut zpow = Complex64::one();
            let (lhs, tl) = sum_egf(0, order, t, |n| {
                if n > 0 {
                    zpow *= zc / n as f64;
                }
                hx[n] * zpow
            });
            let (r, tr) = sum_egf(0, order, t, |n| sign(n) * hxt[n] * lag[n]);
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor7" => {
            require_disk(t, opts)?;
            let z = get(params, "z")?;
            let lag = laguerre_values(order, &z)?;
            let zc = z.to_complex();
            let (lhs, tl) = sum_egf(0, order, t, |n| hx[n] * lag[n]);
            let mut zpow = Complex64::one();
            let (r, tr) = sum_egf(0, order, t, |n| {
                if n > 0 {
                    zpow *= zc / n as f64;
                }
                sign(n) * hxt[n] * zpow
            });
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor8" => {
            let z = get_f64(params, "z")?;
            let y = get_f64(params, "y")?;
            // The underlying instance runs at 2yt, so the disk applies there.
            require_disk(2.0 * y * t, opts)?;
            require_disk(t, opts)?;
            let hz = hermite_all(order, &cx(z))?;
            let hx2yt = hermite_all(order, &cx(x - 2.0 * y * t))?;
            let hzy = hermite_all(order, &cx(z - y))?;
            let shifted_prefactor = exp_lin_quad(4.0 * x * y, -4.0 * y * y, t);
            let (lhs, tl) = sum_egf(0, order, t, |n| hx[n] * hz[n]);
            let (r, tr) = sum_egf(0, order, t, |n| hx2yt[n] * hzy[n]);
            (lhs, shifted_prefactor * r, tl, shifted_prefactor * tr)
        }
        "cor9" => {
            require_disk(t, opts)?;
            let p = get(params, "p")?.to_complex();
            // a_n = C(p+n, n), built incrementally.
            let mut a = Complex64::one();
            let (lhs, tl) = sum_egf(0, order, t, |n| {
                if n > 0 {
                    a *= (p + n as f64) / n as f64;
                }
                hx[n] * a
            });
            // C(p, n), likewise.
            let mut c = Complex64::one();
            let (r, tr) = sum_egf(0, order, t, |n| {
                if n > 0 {
                    c *= (p - (n as f64 - 1.0)) / n as f64;
                }
                hxt[n] * c
            });
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        "cor10" => {
            require_disk(t, opts)?;
            let alpha = get(params, "alpha")?.to_complex();
            if alpha == Complex64::zero() {
                return Err(Error::Domain("cor10 requires alpha != 0".into()));
            }
            let (lhs, tl) = sum_egf(1, order, t, |k| {
                hx[k] * power_alpha(k as u64, alpha).expect("k >= 1")
            });
            let stirlings: Vec<Complex64> = (0..=order)
                .map(|n| stirling_complex(alpha, n))
                .collect::<Result<_>>()?;
            let (r, tr) = sum_powers(0, order, t, |n| stirlings[n] * hxt[n]);
            (lhs, prefactor * r, tl, prefactor * tr)
        }
        _ => {
            return Err(Error::Usage(format!("unknown corollary id {id:?}")));
        }
    };
    numeric_report(id, Mode::Numeric, all_params, order, lhs, rhs, tail_lhs, tail_rhs, opts, started)
}

/// Exact inverse factorials `1/n!` as rationals.
fn inv_factorials(order: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut f = BigRational::one();
    out.push(f.clone());
    for n in 1..=order {
        f /= BigRational::from_integer(BigInt::from(n));
        out.push(f.clone());
    }
    out
}

/// Exact expansion of a transformation right side:
/// `exp(lin t + quad t^2) * sum_n w_n H_n(u0 + u1 t) t^n`.
fn exact_rhs_series(
    weights: &[BigRational],
    u0: &BigRational,
    u1: &BigRational,
    lin: &BigRational,
    quad: &BigRational,
    order: usize,
) -> Result<RatSeries> {
    let n_max = (weights.len() - 1).min(order);
    let g = hermite_at_linear(n_max, u0, u1, order)?;
    let mut sum = vec![BigRational::zero(); order + 1];
    for (n, w) in weights.iter().enumerate().take(n_max + 1) {
        if w.is_zero() {
            continue;
        }
        // w * G_n(t) * t^n contributes to coefficients n..=order.
        for (j, c) in sum.iter_mut().enumerate().skip(n) {
            *c += w * g[n].coeff(j - n);
        }
    }
    Ok(exp_poly_series(lin, quad, order).mul(&Series::new(sum)))
}

fn signed(n: usize, v: BigRational) -> BigRational {
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Exact-coefficient check of a registered identity. Both sides are
/// expanded as rational series in `t` (or finite value vectors for the
/// identities stated per index) and compared literally.
pub fn coefficient_check(
    id: &str,
    params: &Params,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    match id {
        "cor1" | "cor2" | "cor3" | "cor4" | "cor5" | "cor6" | "cor7" | "cor8" | "cor9"
        | "cor10" => {
            let x = get_rational(params, "x")?;
            let (lhs, rhs) = corollary_series(id, params, &x, order)?;
            Ok(exact_report(id, params.clone(), order, lhs.coeffs(), rhs.coeffs(), opts, started))
        }
        "landen" => {
            let lhs = catalog_series("li2-neg-plus-half-logsq", &CatalogParams::default(), order)?;
            // -Li2 composed with t/(1+t), expanded independently.
            let li2 = catalog_series("li2", &CatalogParams::default(), order)?;
            let inner = Series::from_fn(order, |k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    signed(k + 1, BigRational::one())
                }
            });
            let rhs = li2.compose(&inner)?.neg();
            Ok(exact_report(id, params.clone(), order, lhs.coeffs(), rhs.coeffs(), opts, started))
        }
        "genfunc-2.8" => {
            let lhs = catalog_series("log1m-over-1m", &CatalogParams::default(), order)?;
            let rhs: Vec<BigRational> =
                harmonic_all(order, 1)?.into_iter().map(|h| -h).collect();
            Ok(exact_report(id, params.clone(), order, lhs.coeffs(), &rhs, opts, started))
        }
        "genfunc-2.13" => {
            let lhs =
                catalog_series("half-log-sq-1p-over-neg2t", &CatalogParams::default(), order)?;
            let rhs: Vec<BigRational> = harmonic_all(order, 1)?
                .into_iter()
                .enumerate()
                .map(|(k, h)| signed(k, h / BigRational::from_integer(BigInt::from(k + 1))))
                .collect();
            Ok(exact_report(id, params.clone(), order, lhs.coeffs(), &rhs, opts, started))
        }
        "genfunc-2.20" => {
            let lhs = catalog_series("neg-li2-over-1m", &CatalogParams::default(), order)?;
            let rhs: Vec<BigRational> =
                harmonic_all(order, 2)?.into_iter().map(|h| -h).collect();
            Ok(exact_report(id, params.clone(), order, lhs.coeffs(), &rhs, opts, started))
        }
        "addition-2.27" => {
            let z = get_rational(params, "z")?;
            let y = get_rational(params, "y")?;
            let cap = order.min(DEGREE_CAP);
            let lhs = hermite_all(cap, &(&z + &y))?;
            let hz = hermite_all(cap, &z)?;
            let two_y = ratio(2, 1) * &y;
            let rhs: Vec<BigRational> = (0..=cap)
                .map(|n| {
                    let mut sum = BigRational::zero();
                    let mut pow = BigRational::one(); // (2y)^(n-k) built from k = n down
                    for k in (0..=n).rev() {
                        sum += BigRational::from_integer(binom_int(n, k)) * &pow * &hz[k];
                        pow *= &two_y;
                    }
                    sum
                })
                .collect();
            Ok(exact_report(id, params.clone(), order, &lhs, &rhs, opts, started))
        }
        "vandermonde-2.33" => {
            let p = get_rational(params, "p")?;
            let cap = order;
            let spec = SequenceSpec::BinomialP { p: ParamValue::Rational(p.clone()) };
            let a = spec.terms_exact(cap)?;
            let lhs: Vec<BigRational> = (0..=cap)
                .map(|n| {
                    let mut sum = BigRational::zero();
                    for (k, ak) in a.iter().take(n + 1).enumerate() {
                        sum += signed(k, BigRational::from_integer(binom_int(n, k)) * ak);
                    }
                    sum
                })
                .collect();
            let rhs: Vec<BigRational> =
                (0..=cap).map(|n| signed(n, binom_general(&p, n))).collect();
            Ok(exact_report(id, params.clone(), order, &lhs, &rhs, opts, started))
        }
        "inversion-involution" => {
            let seed = get_small_int(params, "seed")? as u64;
            let count = get_small_int(params, "count")?.max(1) as usize;
            let max_len = order.clamp(1, 64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut passed = true;
            let mut shown: Option<(Vec<BigRational>, Vec<BigRational>)> = None;
            for _ in 0..count {
                let len = 1 + (rng.next_u64() as usize) % max_len;
                let a: Vec<BigRational> = (0..len)
                    .map(|_| {
                        let num = (rng.next_u64() % 101) as i64 - 50;
                        let den = 1 + (rng.next_u64() % 12) as i64;
                        ratio(num, den)
                    })
                    .collect();
                let forward = binomial_transform(&a, Direction::Forward);
                let back = binomial_transform(&forward.values, Direction::Inverse);
                let alt_euler =
                    euler_transform(&Series::new(a.clone()), &BigRational::one(), &-BigRational::one());
                let round_trip_ok = back.values == a;
                let euler_ok = alt_euler.coeffs() == &forward.values[..];
                if !(round_trip_ok && euler_ok) && shown.is_none() {
                    passed = false;
                    shown = Some(if round_trip_ok {
                        (forward.values.clone(), alt_euler.into_coeffs())
                    } else {
                        (a.clone(), back.values.clone())
                    });
                }
                if shown.is_none() {
                    shown = Some((a, back.values));
                }
            }
            let (lhs, rhs) = shown.expect("count >= 1");
            let mut report =
                exact_report(id, params.clone(), order, &lhs, &rhs, opts, started);
            report.passed = passed && report.passed;
            Ok(report)
        }
        _ => Err(Error::Usage(format!("identity {id:?} has no exact-coefficient mode"))),
    }
}

/// Exact series for both sides of one transformation corollary.
fn corollary_series(
    id: &str,
    params: &Params,
    x: &BigRational,
    order: usize,
) -> Result<(RatSeries, RatSeries)> {
    let hx = hermite_all(order, x)?;
    let invf = inv_factorials(order);
    let two_x = ratio(2, 1) * x;
    let minus_one = -BigRational::one();
    let harm = harmonic_all(order, 1)?;

    // Diagonal left side: coefficient n is weight(n) * H_n(x) / n!.
    let lhs_from = |f: &dyn Fn(usize) -> BigRational| -> RatSeries {
        Series::from_fn(order, |n| f(n) * &hx[n] * &invf[n])
    };

    match id {
        "cor1" => {
            let lhs = lhs_from(&|n| ratio(1, n as i64 + 1));
            let w: Vec<BigRational> =
                (0..=order).map(|n| signed(n, ratio(1, n as i64 + 1) * &invf[n])).collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor2" => {
            let lhs = lhs_from(&|n| if n == 0 { BigRational::zero() } else { ratio(1, n as i64) });
            let w: Vec<BigRational> =
                (0..=order).map(|n| signed(n + 1, &harm[n] * &invf[n])).collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor3" => {
            let lhs = lhs_from(&|n| harm[n].clone());
            let w: Vec<BigRational> = (0..=order)
                .map(|n| {
                    if n == 0 {
                        BigRational::zero()
                    } else {
                        signed(n + 1, ratio(1, n as i64) * &invf[n])
                    }
                })
                .collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor4" => {
            let lhs = lhs_from(&|n| &harm[n] * ratio(1, n as i64 + 1));
            let w: Vec<BigRational> = (0..=order)
                .map(|n| signed(n + 1, &harm[n] * ratio(1, n as i64 + 1) * &invf[n]))
                .collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor5" => {
            let harm2 = harmonic_all(order, 2)?;
            let lhs = lhs_from(&|n| {
                if n == 0 {
                    BigRational::zero()
                } else {
                    &harm[n] * ratio(1, n as i64)
                }
            });
            let w: Vec<BigRational> =
                (0..=order).map(|n| signed(n + 1, &harm2[n] * &invf[n])).collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor6" => {
            let z = get_rational(params, "z")?;
            let lag = laguerre_all(order, &z)?;
            let mut zpow = BigRational::one();
            let lhs = Series::from_fn(order, |n| {
                if n > 0 {
                    zpow *= &z;
                }
                &zpow * &hx[n] * &invf[n] * &invf[n]
            });
            let w: Vec<BigRational> =
                (0..=order).map(|n| signed(n, &lag[n] * &invf[n])).collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor7" => {
            let z = get_rational(params, "z")?;
            let lag = laguerre_all(order, &z)?;
            let lhs = lhs_from(&|n| lag[n].clone());
            let mut zpow = BigRational::one();
            let w: Vec<BigRational> = (0..=order)
                .map(|n| {
                    if n > 0 {
                        zpow *= &z;
                    }
                    signed(n, &zpow * &invf[n] * &invf[n])
                })
                .collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor8" => {
            let z = get_rational(params, "z")?;
            let y = get_rational(params, "y")?;
            if y.is_zero() {
                return Err(Error::Domain("cor8 requires y != 0".into()));
            }
            let hz = hermite_all(order, &z)?;
            let hzy = hermite_all(order, &(&z - &y))?;
            let lhs = lhs_from(&|n| hz[n].clone());
            let w: Vec<BigRational> =
                (0..=order).map(|n| &hzy[n] * &invf[n]).collect();
            let lin = ratio(4, 1) * x * &y;
            let quad = ratio(-4, 1) * &y * &y;
            let neg_two_y = ratio(-2, 1) * &y;
            let rhs = exact_rhs_series(&w, x, &neg_two_y, &lin, &quad, order)?;
            Ok((lhs, rhs))
        }
        "cor9" => {
            let p = get_rational(params, "p")?;
            let spec = SequenceSpec::BinomialP { p: ParamValue::Rational(p.clone()) };
            let a = spec.terms_exact(order)?;
            let lhs = lhs_from(&|n| a[n].clone());
            // The transform of C(p+k,k) telescopes to C(p,n) with the
            // master identity's own alternation; the prefactor sum loses
            // its sign entirely.
            let w: Vec<BigRational> =
                (0..=order).map(|n| binom_general(&p, n) * &invf[n]).collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        "cor10" => {
            let alpha = get_rational(params, "alpha")?;
            let m = as_small_nonneg_int(&alpha).filter(|m| *m >= 1).ok_or_else(|| {
                Error::ModeUnavailable(
                    "cor10 exact mode needs a positive integer alpha".into(),
                )
            })?;
            let spec = SequenceSpec::PowerAlpha { alpha: ParamValue::integer(m as i64) };
            let a = spec.terms_exact(order)?;
            let lhs = lhs_from(&|n| a[n].clone());
            // Finite right side: n! S(m, n) with the plain t^n weight,
            // zero above the diagonal.
            let w: Vec<BigRational> = (0..=order)
                .map(|n| {
                    if n > m as usize {
                        BigRational::zero()
                    } else {
                        stirling_exact(m, n).expect("m >= 1")
                    }
                })
                .collect();
            let rhs = exact_rhs_series(&w, x, &minus_one, &two_x, &minus_one, order)?;
            Ok((lhs, rhs))
        }
        _ => Err(Error::Usage(format!("unknown corollary id {id:?}"))),
    }
}

/// Exact check of the derivative identity behind the master theorem:
/// the `n`-fold termwise derivative of the Hermite generating series
/// equals the exponential series times `H_n(x - t)`.
pub fn derivative_identity_check(
    n: usize,
    x: &BigRational,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    if n + order > DEGREE_CAP {
        return Err(Error::Capacity(format!(
            "derivative identity needs degree {} > cap {DEGREE_CAP}",
            n + order
        )));
    }
    let hx = hermite_all(n + order, x)?;
    let invf = inv_factorials(order);
    let lhs = Series::from_fn(order, |m| &hx[n + m] * &invf[m]);

    let two_x = ratio(2, 1) * x;
    let minus_one = -BigRational::one();
    let g = hermite_at_linear(n, x, &minus_one, order)?;
    let rhs = exp_poly_series(&two_x, &minus_one, order).mul(&g[n]);

    let mut params = Params::new();
    params.insert("n".into(), ParamValue::integer(n as i64));
    params.insert("x".into(), ParamValue::Rational(x.clone()));
    Ok(exact_report("deriv-identity", params, order, lhs.coeffs(), rhs.coeffs(), opts, started))
}

/// Numeric check of the scalar transform lemma with `g(t) = e^(ct)`,
/// whose derivatives are available in closed form.
pub fn lemma1_check(
    c: &ParamValue,
    seq: &SequenceSpec,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    require_disk(t, opts)?;
    if order < 8 {
        return Err(Error::Usage(format!("lemma check needs order >= 8, got {order}")));
    }
    let a = seq.terms_complex(order)?;
    let b: Vec<Complex64> = if seq.is_exact() {
        binomial_transform(&seq.terms_exact(order)?, Direction::Forward)
            .values
            .iter()
            .map(rat_to_complex)
            .collect()
    } else {
        binomial_transform(&a, Direction::Forward).values
    };
    let cc = c.to_complex();
    // LHS: sum a_n (c t)^n / n!; the coefficients of g are c^n/n!.
    let mut cpow = Complex64::one();
    let (lhs, tail_lhs) = sum_egf(0, order, t, |n| {
        if n > 0 {
            cpow *= cc;
        }
        a[n] * cpow
    });
    // RHS: sum (-1)^n g^(n)(t) t^n / n! b_n with g^(n)(t) = c^n e^(ct).
    let e_ct = (cc * t).exp();
    let mut cpow2 = Complex64::one();
    let (rhs, tail_rhs) = sum_egf(0, order, t, |n| {
        if n > 0 {
            cpow2 *= cc;
        }
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * cpow2 * e_ct * b[n]
    });
    let mut params = Params::new();
    params.insert("c".into(), c.clone());
    params.insert("t".into(), ParamValue::Real(t));
    numeric_report("lemma1", Mode::Numeric, params, order, lhs, rhs, tail_lhs, tail_rhs, opts, started)
}

/// The bilinear closed form
/// `(1/sqrt(1-4t^2)) exp(x^2 - (x-2zt)^2/(1-4t^2))`.
fn mehler_closed_form(x: f64, z: f64, t: f64) -> f64 {
    let d = 1.0 - 4.0 * t * t;
    (x * x - (x - 2.0 * z * t) * (x - 2.0 * z * t) / d).exp() / d.sqrt()
}

/// Bilinear generating series against its closed form.
pub fn mehler_check(
    x: f64,
    z: f64,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    if t.abs() >= EVAL_DISK && !opts.allow_outside_disk {
        return Err(Error::Domain(format!(
            "|t| = {} must stay strictly inside {EVAL_DISK} for the bilinear series",
            t.abs()
        )));
    }
    let hx = hermite_all(order, &cx(x))?;
    let hz = hermite_all(order, &cx(z))?;
    let (series, tail) = sum_egf(0, order, t, |n| hx[n] * hz[n]);
    let closed = cx(mehler_closed_form(x, z, t));
    let mut params = Params::new();
    params.insert("x".into(), ParamValue::Real(x));
    params.insert("z".into(), ParamValue::Real(z));
    params.insert("t".into(), ParamValue::Real(t));
    numeric_report("mehler", Mode::Numeric, params, order, series, closed, tail, 0.0, opts, started)
}

/// The shifted bilinear expansion at a caller-supplied `y` against the
/// same closed form; `y = 0` degenerates to the plain bilinear series.
pub fn mehler_shifted_check(
    x: f64,
    z: f64,
    y: f64,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    if t.abs() >= EVAL_DISK && !opts.allow_outside_disk {
        return Err(Error::Domain(format!(
            "|t| = {} must stay strictly inside {EVAL_DISK} for the bilinear series",
            t.abs()
        )));
    }
    require_disk(2.0 * y * t, opts)?;
    let closed = cx(mehler_closed_form(x, z, t));
    let hx2yt = hermite_all(order, &cx(x - 2.0 * y * t))?;
    let hzy = hermite_all(order, &cx(z - y))?;
    let prefactor = exp_lin_quad(4.0 * x * y, -4.0 * y * y, t);
    let (series, tail) = sum_egf(0, order, t, |n| hx2yt[n] * hzy[n]);
    let mut params = Params::new();
    params.insert("x".into(), ParamValue::Real(x));
    params.insert("y".into(), ParamValue::Real(y));
    params.insert("z".into(), ParamValue::Real(z));
    params.insert("t".into(), ParamValue::Real(t));
    numeric_report(
        "mehler-shifted",
        Mode::Numeric,
        params,
        order,
        closed,
        prefactor * series,
        0.0,
        prefactor * tail,
        opts,
        started,
    )
}

/// Which finite closed form [`closed_form_check`] verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormKind {
    /// Binomial-coefficient series: right side has `p + 1` terms.
    BinomP,
    /// Power series with integer exponent: right side has `m + 1` terms.
    StirlingM,
}

/// Truncated infinite left side against the exactly-summed finite right
/// side. The residual must sit at the truncation-tail level of the left
/// side alone.
pub fn closed_form_check(
    kind: ClosedFormKind,
    m_or_p: u32,
    x: f64,
    t: f64,
    order: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    require_disk(t, opts)?;
    if m_or_p == 0 {
        return Err(Error::Domain("closed forms are defined for positive integer order".into()));
    }
    if order < 8 {
        return Err(Error::Usage(format!("closed-form check needs order >= 8, got {order}")));
    }
    let hx = hermite_all(order, &cx(x))?;
    let bound = m_or_p as usize;
    let hxt = hermite_all(bound, &cx(x - t))?;
    let prefactor = exp_lin_quad(2.0 * x, -1.0, t);

    let (id, lhs, tail_lhs, rhs) = match kind {
        ClosedFormKind::BinomP => {
            let p = m_or_p as usize;
            let mut a = BigRational::one();
            let (lhs, tail) = sum_egf(0, order, t, |n| {
                if n > 0 {
                    a = &a * ratio((p + n) as i64, n as i64);
                }
                hx[n] * rat_to_f64(&a)
            });
            // Exactly p + 1 terms on the right.
            let mut rhs_sum = Complex64::zero();
            let mut weight = 1.0f64;
            for (n, h) in hxt.iter().enumerate().take(p + 1) {
                if n > 0 {
                    weight *= t / n as f64;
                }
                let c = rat_to_f64(&BigRational::from_integer(binom_int(p, n)));
                rhs_sum += h * c * weight;
            }
            ("eq2.37", lhs, tail, prefactor * rhs_sum)
        }
        ClosedFormKind::StirlingM => {
            let m = m_or_p;
            let (lhs, tail) = sum_egf(1, order, t, |k| {
                hx[k] * rat_to_f64(&BigRational::from_integer(BigInt::from(k).pow(m)))
            });
            // Exactly m + 1 terms on the right, with plain t^n weights.
            let mut rhs_sum = Complex64::zero();
            let mut weight = 1.0f64;
            for (n, h) in hxt.iter().enumerate().take(m as usize + 1) {
                if n > 0 {
                    weight *= t;
                }
                rhs_sum += h * rat_to_f64(&stirling_exact(m, n)?) * weight;
            }
            ("eq2.41", lhs, tail, prefactor * rhs_sum)
        }
    };
    let mut params = Params::new();
    params.insert(
        if kind == ClosedFormKind::BinomP { "p" } else { "m" }.into(),
        ParamValue::integer(m_or_p as i64),
    );
    params.insert("x".into(), ParamValue::Real(x));
    params.insert("t".into(), ParamValue::Real(t));
    numeric_report(id, Mode::ClosedForm, params, order, lhs, rhs, tail_lhs, 0.0, opts, started)
}
