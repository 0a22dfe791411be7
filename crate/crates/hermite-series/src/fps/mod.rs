//! Truncated formal power series, sequence transforms and the catalog of
//! named generating functions.

mod catalog;
mod series;
mod transform;

pub use catalog::{catalog_series, CatalogParams, CATALOG_NAMES};
pub use series::{exp_series, geometric_series, CxSeries, RatSeries, Series};
pub use transform::{
    binomial_transform, binomial_transform_spec, euler_transform, euler_transform_direct,
    Direction, TransformedSequence,
};
