//! The master series transformation, checked numerically for several
//! coefficient sequences at one evaluation point.
//!
//! For each sequence `a`, the weighted Hermite series of `a` is summed
//! directly and compared against the exponential-prefactor series over
//! the binomial transform of `a`.
//!
//! ```bash
//! cargo run --example theorem_check
//! ```

use hermite_series::identities::{theorem1_check, CheckOptions};
use hermite_series::kernels::SequenceSpec;
use hermite_series::ParamValue;

fn main() {
    let opts = CheckOptions::default();
    let sequences = vec![
        SequenceSpec::One,
        SequenceSpec::InvKPlusOne,
        SequenceSpec::InvK,
        SequenceSpec::Harmonic,
        SequenceSpec::Laguerre { z: ParamValue::rational(1, 2) },
        SequenceSpec::BinomialP { p: ParamValue::integer(3) },
        SequenceSpec::PowerAlpha { alpha: ParamValue::rational(1, 2) },
        SequenceSpec::PowerAlpha { alpha: ParamValue::parse("1+1i").unwrap() },
    ];
    println!("{:<24} {:>12} {:>12} verdict", "sequence", "abs resid", "tail");
    for seq in sequences {
        let report = theorem1_check(&seq, 0.3, 0.1, 40, &opts).unwrap();
        println!(
            "{:<24} {:>12.3e} {:>12.3e} {}",
            seq.name(),
            report.residual_abs,
            report.tail_estimate.unwrap(),
            if report.passed { "PASS" } else { "FAIL" }
        );
        assert!(report.passed);
    }
}
