//! Hermite polynomials from two independent routes.
//!
//! The three-term recurrence builds the coefficient table; the symbolic
//! oracle re-derives it by iterating `P_{k+1} = 2x P_k - P_k'`. The two
//! must agree exactly.
//!
//! ```bash
//! cargo run --example hermite_table
//! ```

use hermite_series::coeff::ratio;
use hermite_series::kernels::{hermite_eval, hermite_rodrigues_oracle, HermitePoly};

fn main() {
    println!("degree | coefficients (x^0 ..) | matches oracle");
    for n in 0..=8 {
        let poly = HermitePoly::recurrence(n).unwrap();
        let oracle = hermite_rodrigues_oracle(n).unwrap();
        let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        println!("H_{n:<4} | {:<40} | {}", coeffs.join(" "), poly == oracle);
    }

    // Values follow from the same recurrence, exactly over rationals.
    let x = ratio(1, 2);
    println!("\nvalues at x = {x}:");
    for n in 0..=6 {
        let value = hermite_eval(n, &x).unwrap();
        let via_coeffs = HermitePoly::recurrence(n).unwrap().eval(&x);
        assert_eq!(value, via_coeffs);
        println!("H_{n}({x}) = {value}");
    }
}
