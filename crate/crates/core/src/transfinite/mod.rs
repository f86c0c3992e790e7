//! The groups `G_η` for `η < ω^ω`: exact distances and labels by recursion
//! on `η`, and small truncations as explicit Cayley graphs for checking the
//! recursions by brute force.

mod element;
mod instantiate;
mod recursion;

pub use element::EtaElement;
pub use instantiate::{truncation_elements, EtaGraph};
pub use recursion::{dist_eta, kept, kept_below, label_eta, label_eta_truncated, radius_eta};
