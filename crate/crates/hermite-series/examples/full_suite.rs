//! Run the whole identity registry: canonical points plus seeded random
//! draws, every available mode. Equivalent to the `suite` subcommand.
//!
//! ```bash
//! cargo run --example full_suite
//! ```

use std::collections::BTreeMap;

use hermite_series::identities::{run_suite, CheckOptions, ModeSelect};

fn main() {
    let reports = run_suite(None, 1, 3, ModeSelect::All, &CheckOptions::default());

    let mut by_id: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for report in &reports {
        let entry = by_id.entry(report.id.as_str()).or_default();
        entry.1 += 1;
        if report.passed {
            entry.0 += 1;
        }
    }
    println!("{:<24} passed/run", "identity");
    for (id, (passed, run)) in &by_id {
        println!("{id:<24} {passed}/{run}");
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("\ntotal: {passed}/{} passed", reports.len());
    assert_eq!(passed, reports.len(), "a correct build passes the full suite");
}
