//! Explicit braid-group representations in ordered triangular form and
//! their structural identities.

mod build;
mod json;
mod spec;
mod structure;

pub use build::{build_binomial_rep, build_rep, flip, Rep};
pub use json::{parse_modulus, rep_from_json, rep_to_json, RepJson};
pub use spec::{Family, RepSpec};
pub use structure::{
    binomial_identity_check, binomial_identity_check_corrected, binomial_identity_failures, binomial_s, normalize_gauge, rescale_basis,
    structure_report, verify_braid, verify_ordered_triangular, verify_prop14, Prop14Outcome, StructureReport,
};
