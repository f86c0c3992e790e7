//! Geodesic structure: arrow labels, the erasure process that defines the
//! generalised radius, zigzag-free paths, folding, and the path set 𝔓.

mod erasure;
mod fold;
mod labels;
pub mod pset;
mod zigzag;

pub use erasure::{erasure_rank, Erasure};
pub use fold::fold_geodesic;
pub use labels::{generalized_diameter, generalized_radius, label_all, label_ball, LabelMap};
pub use pset::{pset_member, pset_member_path, pset_progression};
pub use zigzag::{is_zigzag_free, length_two_paths, max_zigzag_geodesic};
