//! The catalog of named generating functions, all with exact rational
//! coefficients, and two identities that fall out of it at the
//! coefficient level.
//!
//! ```bash
//! cargo run --example series_catalog
//! ```

use hermite_series::coeff::ratio;
use hermite_series::fps::{catalog_series, CatalogParams, CATALOG_NAMES};
use num_rational::BigRational;

fn main() {
    let params = CatalogParams { p: Some(ratio(2, 1)), z: Some(ratio(1, 1)) };

    println!("first coefficients of every catalog entry:");
    for name in CATALOG_NAMES {
        let series = catalog_series(name, &params, 5).unwrap();
        let cells: Vec<String> = series.coeffs().iter().map(BigRational::to_string).collect();
        println!("  {name:<28} {}", cells.join(", "));
    }

    // ln(1-t)/(1-t) carries the negated harmonic numbers.
    let series = catalog_series("log1m-over-1m", &CatalogParams::default(), 6).unwrap();
    let harmonics = hermite_series::kernels::harmonic_all(6, 1).unwrap();
    for (n, (c, h)) in series.coeffs().iter().zip(&harmonics).enumerate() {
        assert_eq!(c, &-h.clone(), "coefficient {n}");
    }
    println!("\nlog1m-over-1m coefficients equal -H_n (checked to order 6)");

    // The scaled squared logarithm carries (-1)^k H_k/(k+1).
    let series =
        catalog_series("half-log-sq-1p-over-neg2t", &CatalogParams::default(), 6).unwrap();
    for (k, (c, h)) in series.coeffs().iter().zip(&harmonics).enumerate() {
        let expected = h / ratio(k as i64 + 1, 1);
        let expected = if k % 2 == 0 { expected } else { -expected };
        assert_eq!(c, &expected, "coefficient {k}");
    }
    println!("half-log-sq-1p-over-neg2t coefficients equal (-1)^k H_k/(k+1)");
}
