//! Finite closed forms: for integer parameters the transformed side
//! collapses to finitely many terms, evaluated here in full against the
//! truncated infinite side.
//!
//! ```bash
//! cargo run --example closed_forms
//! ```

use hermite_series::identities::{closed_form_check, CheckOptions, ClosedFormKind, SideValue};

fn scalar(side: &SideValue) -> f64 {
    match side {
        SideValue::Scalar { re, .. } => *re,
        SideValue::Coeffs(_) => unreachable!("numeric checks carry scalars"),
    }
}

fn main() {
    let opts = CheckOptions::default();
    println!("binomial closed form (right side has p+1 terms):");
    for p in 1..=4 {
        let report = closed_form_check(ClosedFormKind::BinomP, p, 0.3, 0.1, 40, &opts).unwrap();
        println!(
            "  p={p}: series={:.15} finite={:.15} |diff|={:.2e} {}",
            scalar(&report.lhs),
            scalar(&report.rhs),
            report.residual_abs,
            if report.passed { "PASS" } else { "FAIL" }
        );
        assert!(report.passed);
    }

    println!("\npower-sum closed form (right side has m+1 terms):");
    for m in 1..=4 {
        let report =
            closed_form_check(ClosedFormKind::StirlingM, m, 0.3, 0.1, 50, &opts).unwrap();
        println!(
            "  m={m}: series={:.15} finite={:.15} |diff|={:.2e} {}",
            scalar(&report.lhs),
            scalar(&report.rhs),
            report.residual_abs,
            if report.passed { "PASS" } else { "FAIL" }
        );
        assert!(report.passed);
    }
}
