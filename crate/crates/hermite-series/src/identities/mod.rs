//! Identity registry, check operations and reports.

mod checks;
mod registry;
mod report;

pub use checks::{
    closed_form_check, coefficient_check, corollary_check, corollary_sequence,
    derivative_identity_check, lemma1_check, mehler_check, mehler_shifted_check, theorem1_check,
    ClosedFormKind,
};
pub use registry::{
    canonical_points, find, registry, run_check, run_suite, wildcard_match, IdentityInstance,
    ModeSelect, REGISTRY,
};
pub use report::{
    CheckOptions, CheckReport, Mode, SideValue, TolerancePolicy, EVAL_DISK,
};
