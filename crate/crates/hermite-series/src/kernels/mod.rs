//! Special sequences and polynomial families, each with an independent
//! cross-check route.

mod hermite;
mod sequences;
mod special;

pub use hermite::{
    hermite_all, hermite_eval, hermite_rodrigues_oracle, HermitePoly, DEGREE_CAP, ORACLE_CAP,
};
pub use sequences::{terms_in, SequenceSpec};
pub use special::{
    as_small_nonneg_int, binom_general, binom_int, factorial, harmonic, harmonic_all,
    laguerre_all, laguerre_eval, power_alpha, stirling_complex, stirling_exact, HARMONIC_CAP,
};
