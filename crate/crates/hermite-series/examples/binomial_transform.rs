//! The alternating binomial transform and its involution property.
//!
//! Transforming reciprocals produces negated harmonic numbers;
//! transforming harmonic numbers produces negated reciprocals; applying
//! the transform twice restores any sequence exactly.
//!
//! ```bash
//! cargo run --example binomial_transform
//! ```

use hermite_series::fps::{binomial_transform, binomial_transform_spec, Direction};
use hermite_series::kernels::SequenceSpec;

fn main() {
    let show = |label: &str, values: &[num_rational::BigRational]| {
        let cells: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        println!("{label:<28} {}", cells.join(", "));
    };

    let spec = SequenceSpec::InvK;
    let a = spec.terms_exact(6).unwrap();
    show("a_k = 1/k:", &a);
    let b = binomial_transform_spec(&spec, 6, Direction::Forward).unwrap();
    show("transform (= -H_n):", &b.values);

    let back = binomial_transform(&b.values, Direction::Inverse);
    show("transform again (= a):", &back.values);
    assert_eq!(back.values, a);

    // The shifted reciprocals are a fixed point.
    let fixed = SequenceSpec::InvKPlusOne;
    let a = fixed.terms_exact(6).unwrap();
    let b = binomial_transform(&a, Direction::Forward);
    show("\na_k = 1/(k+1):", &a);
    show("transform (same values):", &b.values);
    assert_eq!(b.values, a);

    // Laguerre values and exponential coefficients swap under it.
    let z = hermite_series::ParamValue::rational(1, 2);
    let lag = SequenceSpec::Laguerre { z: z.clone() }.terms_exact(5).unwrap();
    let exp = SequenceSpec::ExpCoeff { z }.terms_exact(5).unwrap();
    show("\nL_k(1/2):", &lag);
    show("transform (= z^n/n!):", &binomial_transform(&lag, Direction::Forward).values);
    show("z^k/k!:", &exp);
    show("transform (= L_n(z)):", &binomial_transform(&exp, Direction::Forward).values);
}
