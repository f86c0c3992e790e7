//! Rooted isomorphism of balls, canonical forms, weak transitivity, weak
//! isomorphism of matched families, and the component analysis that shows
//! the word graph is not transitive.

mod hcomp;
mod iso;
mod refine;
mod weak;

pub use hcomp::{h_component_analysis, rule_one_cut_check, HComponent};
pub use iso::{canonical_form, rooted_iso, RootedIso, SEARCH_BUDGET};
pub use weak::{
    weak_iso_specs, weak_iso_upto, weak_transitive_check, WeakIsoReport, WeakTransReport,
};
