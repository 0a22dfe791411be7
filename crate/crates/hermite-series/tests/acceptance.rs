//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines for passing criteria too.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hermite_series::coeff::ratio;
use hermite_series::fps::{binomial_transform, euler_transform, Direction, Series};
use hermite_series::identities::{
    canonical_points, coefficient_check, corollary_check, corollary_sequence, run_check,
    theorem1_check, CheckOptions, CheckReport, Mode, SideValue,
};
use hermite_series::kernels::{hermite_rodrigues_oracle, stirling_exact, HermitePoly};
use hermite_series::{ParamValue, Params};
use num_traits::One;

fn criterion(name: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("{name}: PASS"),
        Err(cause) => {
            println!("{name}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn params_of(entries: &[(&str, ParamValue)]) -> Params {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn assert_exact_pass(report: &CheckReport) {
    assert_eq!(report.mode, Mode::Exact, "{} must run exactly", report.id);
    assert!(report.passed, "{} failed: residual {:e}", report.id, report.residual_abs);
    assert_eq!(report.lhs, report.rhs, "{} sides differ", report.id);
}

#[test]
fn criterion_1_exact_coefficient_suite() {
    criterion("criterion 1 (exact coefficient suite, order 32, < 30 s)", || {
        let started = Instant::now();
        let o = opts();
        let no_params = Params::new();
        for id in ["landen", "genfunc-2.8", "genfunc-2.13", "genfunc-2.20"] {
            assert_exact_pass(&coefficient_check(id, &no_params, 32, &o).unwrap());
        }
        let addition = params_of(&[
            ("z", ParamValue::rational(1, 2)),
            ("y", ParamValue::rational(1, 3)),
        ]);
        assert_exact_pass(&coefficient_check("addition-2.27", &addition, 32, &o).unwrap());
        let vandermonde = params_of(&[("p", ParamValue::rational(5, 2))]);
        assert_exact_pass(&coefficient_check("vandermonde-2.33", &vandermonde, 32, &o).unwrap());
        let involution = params_of(&[
            ("seed", ParamValue::integer(1)),
            ("count", ParamValue::integer(200)),
        ]);
        assert_exact_pass(&coefficient_check("inversion-involution", &involution, 32, &o).unwrap());

        let x_half = || ("x", ParamValue::rational(1, 2));
        assert_exact_pass(&coefficient_check("cor1", &params_of(&[x_half()]), 32, &o).unwrap());
        assert_exact_pass(
            &coefficient_check(
                "cor6",
                &params_of(&[x_half(), ("z", ParamValue::integer(1))]),
                32,
                &o,
            )
            .unwrap(),
        );
        assert_exact_pass(
            &coefficient_check(
                "cor9",
                &params_of(&[x_half(), ("p", ParamValue::integer(2))]),
                32,
                &o,
            )
            .unwrap(),
        );
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}, budget 30 s");
    });
}

#[test]
fn criterion_2_numeric_corollary_suite() {
    criterion("criterion 2 (numeric corollaries at canonical points, < 10 s)", || {
        let started = Instant::now();
        let o = opts();
        for id in
            ["cor1", "cor2", "cor3", "cor4", "cor5", "cor6", "cor7", "cor8", "cor9", "cor10"]
        {
            let points = canonical_points(id, Mode::Numeric);
            assert!(!points.is_empty(), "{id} lacks canonical numeric points");
            if id == "cor10" {
                assert_eq!(points.len(), 3, "cor10 runs alpha in {{3, 1/2, 1+i}}");
            }
            for (params, order) in points {
                assert_eq!(order, 40);
                let report = run_check(id, Mode::Numeric, &params, order, &o).unwrap();
                let tail = report.tail_estimate.expect("numeric reports carry a tail");
                assert!(
                    report.residual_abs <= 1e-12f64.max(10.0 * tail),
                    "{id}: absolute residual {:e} above max(1e-12, 10 * {tail:e})",
                    report.residual_abs
                );
                assert!(
                    report.residual_rel <= 1e-8,
                    "{id}: relative residual {:e}",
                    report.residual_rel
                );
                assert!(report.passed, "{id} did not pass");
            }
        }
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10 s");
    });
}

#[test]
fn criterion_3_closed_forms() {
    criterion("criterion 3 (finite closed forms at 1e-12 absolute)", || {
        let o = opts();
        let base = [("x", ParamValue::Real(0.3)), ("t", ParamValue::Real(0.1))];
        for bound in 1..=3i64 {
            let mut params = params_of(&base);
            params.insert("p".into(), ParamValue::integer(bound));
            let report = run_check("eq2.37", Mode::ClosedForm, &params, 40, &o).unwrap();
            assert!(
                report.passed && report.residual_abs <= 1e-12,
                "eq2.37 p={bound}: residual {:e}",
                report.residual_abs
            );

            let mut params = params_of(&base);
            params.insert("m".into(), ParamValue::integer(bound));
            let report = run_check("eq2.41", Mode::ClosedForm, &params, 40, &o).unwrap();
            assert!(
                report.passed && report.residual_abs <= 1e-12,
                "eq2.41 m={bound}: residual {:e}",
                report.residual_abs
            );
        }
        // The right side is summed over exactly bound+1 terms: the check
        // only ever evaluates the shifted polynomials up to that degree,
        // so a cap violation would be a capacity error here.
        let mut params = params_of(&base);
        params.insert("m".into(), ParamValue::integer(0));
        assert!(run_check("eq2.41", Mode::ClosedForm, &params, 40, &opts()).is_err());
    });
}

#[test]
fn criterion_4_mehler_cross_validation() {
    criterion("criterion 4 (bilinear closed form and shifted expansion)", || {
        let o = opts();
        let base = params_of(&[
            ("x", ParamValue::Real(0.2)),
            ("z", ParamValue::Real(0.4)),
            ("t", ParamValue::Real(0.1)),
        ]);
        let plain = run_check("mehler", Mode::Numeric, &base, 40, &o).unwrap();
        assert!(plain.passed);
        assert!(
            plain.residual_rel <= 1e-10,
            "relative residual {:e}",
            plain.residual_rel
        );

        for y in [0.1, 0.3] {
            let mut params = base.clone();
            params.insert("y".into(), ParamValue::Real(y));
            let shifted = run_check("mehler-shifted", Mode::Numeric, &params, 40, &o).unwrap();
            assert!(shifted.passed, "y = {y}");
            let tail = shifted.tail_estimate.unwrap();
            assert!(
                shifted.residual_abs <= 1e-12f64.max(10.0 * tail),
                "y = {y}: residual {:e} vs tail {tail:e}",
                shifted.residual_abs
            );
        }

        // y = 0 degenerates to the unshifted series: identical sum, and
        // both compare against the identical closed form.
        let mut params = base.clone();
        params.insert("y".into(), ParamValue::Real(0.0));
        let degenerate = run_check("mehler-shifted", Mode::Numeric, &params, 40, &o).unwrap();
        let series_of = |side: &SideValue| match side {
            SideValue::Scalar { re, im } => (*re, *im),
            SideValue::Coeffs(_) => panic!("numeric check"),
        };
        // The shifted report keeps the closed form on the left.
        assert_eq!(series_of(&degenerate.rhs), series_of(&plain.lhs));
        assert_eq!(series_of(&degenerate.lhs), series_of(&plain.rhs));
        assert_eq!(degenerate.residual_abs, plain.residual_abs);
    });
}

#[test]
#[allow(clippy::needless_range_loop)] // 2-D triangle recurrence reads clearest indexed
fn criterion_5_oracle_equivalence() {
    criterion("criterion 5 (recurrence vs symbolic oracle; Stirling vs classical)", || {
        for n in 0..=25 {
            assert_eq!(
                HermitePoly::recurrence(n).unwrap(),
                hermite_rodrigues_oracle(n).unwrap(),
                "coefficients differ at degree {n}"
            );
        }
        // Classical triangle recurrence S(m,n) = S(m-1,n-1) + n S(m-1,n).
        let cap = 12usize;
        let mut classical = vec![vec![BigRational::from_integer(0.into()); cap + 1]; cap + 1];
        classical[0][0] = BigRational::one();
        for m in 1..=cap {
            for n in 1..=m {
                classical[m][n] = &classical[m - 1][n - 1]
                    + BigRational::from_integer((n as i64).into()) * &classical[m - 1][n];
            }
        }
        for m in 1..=cap {
            for n in 1..=m {
                assert_eq!(
                    stirling_exact(m as u32, n).unwrap(),
                    classical[m][n],
                    "S({m},{n})"
                );
            }
        }
    });
}

#[test]
fn criterion_6_transform_involution() {
    criterion("criterion 6 (involution and alternating Euler agreement, 200 draws)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x48_53_4c); // fixed corpus seed
        let one = BigRational::one();
        for trial in 0..200 {
            let len = 1 + (rng.next_u64() as usize) % 32;
            let a: Vec<BigRational> = (0..len)
                .map(|_| {
                    let num = (rng.next_u64() % 201) as i64 - 100;
                    let den = 1 + (rng.next_u64() % 20) as i64;
                    ratio(num, den)
                })
                .collect();
            let forward = binomial_transform(&a, Direction::Forward);
            let back = binomial_transform(&forward.values, Direction::Inverse);
            assert_eq!(back.values, a, "round trip failed on trial {trial}");
            let euler = euler_transform(&Series::new(a.clone()), &one, &-one.clone());
            assert_eq!(
                euler.coeffs(),
                &forward.values[..],
                "alternating Euler transform disagreed on trial {trial}"
            );
        }
    });
}

#[test]
fn criterion_7_dual_path_consistency() {
    criterion("criterion 7 (direct and generic paths agree to 1e-12)", || {
        let o = opts();
        let cases: [(&str, Params); 4] = [
            ("cor2", Params::new()),
            ("cor4", Params::new()),
            ("cor5", Params::new()),
            ("cor9", params_of(&[("p", ParamValue::integer(3))])),
        ];
        for (id, extra) in cases {
            let direct = corollary_check(id, &extra, 0.3, 0.1, 40, &o).unwrap();
            let seq = corollary_sequence(id, &extra).unwrap();
            let generic = theorem1_check(&seq, 0.3, 0.1, 40, &o).unwrap();
            assert!(direct.passed && generic.passed, "{id} paths must both pass");
            let gap = (direct.residual_abs - generic.residual_abs).abs();
            assert!(gap <= 1e-12, "{id}: residual gap {gap:e}");
        }
    });
}

#[test]
fn criterion_8_suite_determinism() {
    criterion("criterion 8 (suite --seed 1 --trials 5 is byte-identical)", || {
        let run = || {
            let output = std::process::Command::new(env!("CARGO_BIN_EXE_hermite-series"))
                .args(["suite", "--seed", "1", "--trials", "5", "--format", "json"])
                .output()
                .expect("suite invocation");
            assert!(output.status.success(), "suite should pass: {output:?}");
            output.stdout
        };
        let first = run();
        let second = run();
        assert!(!first.is_empty());
        assert_eq!(first, second, "suite output must be byte-identical");
        // Every line is a report that parses back losslessly.
        let text = String::from_utf8(first).unwrap();
        let mut count = 0;
        for line in text.lines() {
            let report: CheckReport = serde_json::from_str(line).expect("report line");
            assert_eq!(serde_json::to_string(&report).unwrap(), line);
            count += 1;
        }
        let expected: usize = hermite_series::identities::REGISTRY
            .iter()
            .map(|inst| {
                inst.modes
                    .iter()
                    .map(|&m| canonical_points(inst.id, m).len() + 5)
                    .sum::<usize>()
            })
            .sum::<usize>();
        assert_eq!(count, expected, "one JSON object per executed check");
    });
}
