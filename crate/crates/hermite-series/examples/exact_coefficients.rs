//! Exact-coefficient mode: both sides of an identity expanded as
//! rational series in `t` and compared literally, no tolerances.
//!
//! ```bash
//! cargo run --example exact_coefficients
//! ```

use hermite_series::identities::{coefficient_check, CheckOptions, SideValue};
use hermite_series::{ParamValue, Params};

fn main() {
    let opts = CheckOptions::default();

    let mut params = Params::new();
    params.insert("x".into(), ParamValue::rational(1, 2));
    let report = coefficient_check("cor1", &params, 12, &opts).unwrap();
    println!("cor1 at x = 1/2, both sides to order 12:");
    if let (SideValue::Coeffs(lhs), SideValue::Coeffs(rhs)) = (&report.lhs, &report.rhs) {
        for (k, (a, b)) in lhs.iter().zip(rhs).enumerate() {
            println!("  t^{k:<2} {a:<28} {b}");
        }
    }
    assert!(report.passed);

    // A few more, at higher order, reported compactly.
    let checks: Vec<(&str, Params)> = vec![
        ("cor6", [("x", "1/2"), ("z", "1")].into_iter().collect_params(),),
        ("cor9", [("x", "1/3"), ("p", "2")].into_iter().collect_params()),
        ("cor10", [("x", "1/2"), ("alpha", "3")].into_iter().collect_params()),
        ("landen", Params::new()),
        ("vandermonde-2.33", [("p", "5/2")].into_iter().collect_params()),
    ];
    println!("\nliteral equality at order 24:");
    for (id, params) in checks {
        let report = coefficient_check(id, &params, 24, &opts).unwrap();
        println!("  {id:<20} passed = {}", report.passed);
        assert!(report.passed);
    }
}

trait CollectParams {
    fn collect_params(self) -> Params;
}

impl<'a, I: Iterator<Item = (&'a str, &'a str)>> CollectParams for I {
    fn collect_params(self) -> Params {
        self.map(|(k, v)| (k.to_string(), ParamValue::parse(v).unwrap())).collect()
    }
}
