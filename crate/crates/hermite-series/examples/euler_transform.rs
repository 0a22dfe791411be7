//! The Euler series transformation
//! `f(t) -> (1/(1-lambda t)) f(mu t/(1-lambda t))` computed two ways:
//! by actual series substitution and by the direct weighted binomial
//! sums its coefficients are known to equal.
//!
//! ```bash
//! cargo run --example euler_transform
//! ```

use hermite_series::fps::{euler_transform, euler_transform_direct, RatSeries};
use hermite_series::kernels::SequenceSpec;
use hermite_series::ParamValue;
use num_rational::BigRational;
use num_traits::One;

fn main() {
    let one = BigRational::one();
    let neg = -BigRational::one();

    // a_k = C(p+k, k) with p = 2: the alternating transform cuts the
    // series down to the polynomial (1-t)^2.
    let spec = SequenceSpec::BinomialP { p: ParamValue::integer(2) };
    let f = RatSeries::new(spec.terms_exact(8).unwrap());
    let g = euler_transform(&f, &one, &neg);
    let direct = euler_transform_direct(&f, &one, &neg);
    assert_eq!(g, direct);
    println!("binomial tail with p=2  -> {g}");

    // The exponential series maps to Laguerre values at z = 1.
    let spec = SequenceSpec::ExpCoeff { z: ParamValue::integer(1) };
    let f = RatSeries::new(spec.terms_exact(8).unwrap());
    let g = euler_transform(&f, &one, &neg);
    println!("exp coefficients (z=1)  -> {g}");
    println!("            (these are the Laguerre values L_n(1))");

    // General lambda/mu: substitution and weighted sums always agree.
    let f = RatSeries::new(SequenceSpec::Harmonic.terms_exact(8).unwrap());
    let lambda = hermite_series::coeff::ratio(1, 2);
    let mu = hermite_series::coeff::ratio(-2, 3);
    let g = euler_transform(&f, &lambda, &mu);
    let direct = euler_transform_direct(&f, &lambda, &mu);
    assert_eq!(g, direct);
    println!("harmonic, lambda=1/2, mu=-2/3 -> {g}");
}
