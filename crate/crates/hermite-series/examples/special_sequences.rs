//! The special sequences behind the identity suite: harmonic numbers,
//! Laguerre values, generalized binomials, Stirling numbers (integer and
//! complex order) and real powers.
//!
//! ```bash
//! cargo run --example special_sequences
//! ```

use hermite_series::coeff::ratio;
use hermite_series::kernels::{
    binom_general, harmonic, laguerre_eval, power_alpha, stirling_complex, stirling_exact,
};
use num_complex::Complex64;

fn main() {
    println!("harmonic numbers H_n and H_n^(2):");
    for n in 0..=6 {
        println!(
            "  n={n}: {} | {}",
            harmonic(n, 1).unwrap(),
            harmonic(n, 2).unwrap()
        );
    }

    let z = ratio(1, 2);
    println!("\nLaguerre values L_n({z}) (exact rationals):");
    for n in 0..=5 {
        println!("  L_{n} = {}", laguerre_eval(n, &z).unwrap());
    }

    let p = ratio(5, 2);
    println!("\nfalling-factorial binomials C({p}, n):");
    for n in 0..=5 {
        println!("  C({p},{n}) = {}", binom_general(&p, n));
    }

    println!("\nStirling numbers of the second kind, row m = 5:");
    let row: Vec<String> =
        (1..=5).map(|n| stirling_exact(5, n).unwrap().to_string()).collect();
    println!("  S(5, 1..5) = {}", row.join(" "));

    // The same finite sum extends to complex order.
    let alpha = Complex64::new(1.0, 1.0);
    println!("\nStirling function at alpha = 1+1i:");
    for n in 1..=4 {
        let s = stirling_complex(alpha, n).unwrap();
        let sign = if s.im < 0.0 { '-' } else { '+' };
        println!("  S(1+1i, {n}) = {:.12} {sign} {:.12}i", s.re, s.im.abs());
    }

    println!("\npowers k^alpha on the principal branch:");
    println!("  4^(1/2) = {}", power_alpha(4, Complex64::new(0.5, 0.0)).unwrap().re);
    println!("  2^3     = {}", power_alpha(2, Complex64::new(3.0, 0.0)).unwrap().re);
}
