//! Geodesic structure of non-locally-finite transitive graphs, studied
//! through finite truncations.
//!
//! The crate is organised bottom-up:
//!
//! * [`ordinal`]: ordinals below ω^ω in Cantor normal form, plus a top value.
//! * [`graph`]: the [`graph::ImplicitGraph`] interface, BFS, balls, paths.
//! * [`gallery`]: the concrete graph families and their truncations.
//! * [`geodesy`]: arrow labels, the erasure process, zigzag-free paths.
//! * [`transfinite`]: exact labels for the groups `G_η` and small
//!   instantiations of them.
//! * [`isometry`]: rooted isomorphism, canonical forms, weak transitivity
//!   and weak isomorphism.
//! * [`harness`]: run reports and the reproduction bundles driven by the CLI.

pub mod error;
pub mod gallery;
pub mod geodesy;
pub mod graph;
pub mod harness;
pub mod isometry;
pub mod ordinal;
pub mod transfinite;

pub use error::{Error, Result};
pub use graph::{ImplicitGraph, RootedBall};
pub use ordinal::{ExtOrdinal, Ordinal};
