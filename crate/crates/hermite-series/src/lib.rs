//! Series transformations built on Hermite polynomials, with exact and
//! numeric verification of the resulting identities.
//!
//! The crate has four layers:
//!
//! - [`kernels`]: Hermite and Laguerre polynomials, harmonic numbers,
//!   generalized binomial coefficients and Stirling numbers, each with an
//!   independent cross-check route, plus the named coefficient sequences
//!   that feed the transformation.
//! - [`fps`]: truncated formal power series over exact rationals or
//!   complex doubles, the binomial/Euler transforms, and a catalog of
//!   named generating functions.
//! - [`identities`]: a registry of the transformation identities with
//!   numeric, exact-coefficient and finite-closed-form checks producing
//!   machine-readable reports.
//! - [`cli`]: the `check` / `suite` / `series` / `table` command-line
//!   front end.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example hermite_table`.

pub mod cli;
pub mod coeff;
pub mod error;
pub mod fps;
pub mod identities;
pub mod kernels;
pub mod value;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use value::{ParamValue, Params};
