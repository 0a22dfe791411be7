//! The bilinear generating series, its closed form, and the shifted
//! expansion whose extra parameter y provably drops out.
//!
//! ```bash
//! cargo run --example mehler
//! ```

use hermite_series::identities::{mehler_check, mehler_shifted_check, CheckOptions, SideValue};

fn scalar(side: &SideValue) -> f64 {
    match side {
        SideValue::Scalar { re, .. } => *re,
        SideValue::Coeffs(_) => unreachable!(),
    }
}

fn main() {
    let opts = CheckOptions::default();
    let (x, z, t) = (0.2, 0.4, 0.1);

    let plain = mehler_check(x, z, t, 40, &opts).unwrap();
    println!(
        "series  = {:.15}\nclosed  = {:.15}\nrel. residual = {:.2e} ({})",
        scalar(&plain.lhs),
        scalar(&plain.rhs),
        plain.residual_rel,
        if plain.passed { "PASS" } else { "FAIL" }
    );
    assert!(plain.passed);

    println!("\nshifted expansion at several y (same closed form):");
    for y in [0.0, 0.1, 0.3, 0.5] {
        let shifted = mehler_shifted_check(x, z, y, t, 40, &opts).unwrap();
        println!(
            "  y={y:<4} expansion={:.15} |diff|={:.2e} {}",
            scalar(&shifted.rhs),
            shifted.residual_abs,
            if shifted.passed { "PASS" } else { "FAIL" }
        );
        assert!(shifted.passed);
    }
}
