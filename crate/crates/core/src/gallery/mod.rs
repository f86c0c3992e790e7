//! The graph families: Cayley graphs of finite-rank abelian groups with
//! hypercube, basis and factorial generators, the fan, and the word graph.
//!
//! Each infinite construction is exposed through a truncation parameter
//! (`N`, `M`, `depth`). Families that are compared with each other are
//! truncated in matched pairs; see [`spec::matched_pair`].

mod cayley;
mod fan;
mod group;
mod integer;
mod labels;
pub mod spec;
mod word;

pub use cayley::{
    basis_graph, basis_graph_z, hypercube_graph, quotient_hn_graph, CayleyGraph, GeneratorSpec,
};
pub use fan::{FanGraph, FanVertex, Spoke};
pub use group::{AbelianSpec, Coordinate, GroupElement};
pub use integer::{
    factorial, factorial_graph, factorial_quotient_graph, factorial_sums, IntegerCayley,
};
pub use labels::{edge_label_direct, edge_label_intrinsic};
pub use spec::{matched_pair, GraphSpec, GraphTask};
pub use word::{
    matched_hn_param, word_graph_h, word_graph_hz, EdgeRule, ModifyLastOnly, Word, WordGraph,
};

use crate::error::Result;
use crate::graph::ImplicitGraph;

/// `fan_graph(N, with_ray)`.
pub fn fan_graph(n: u32, with_ray: bool) -> Result<FanGraph> {
    FanGraph::new(n, with_ray)
}

/// A Cayley graph of an abelian group whose vertices carry the group
/// operations.
pub trait AbelianCayley: ImplicitGraph {
    fn zero(&self) -> Self::Vertex;
    fn add(&self, a: &Self::Vertex, b: &Self::Vertex) -> Self::Vertex;
    fn neg(&self, a: &Self::Vertex) -> Self::Vertex;

    fn sub(&self, a: &Self::Vertex, b: &Self::Vertex) -> Self::Vertex {
        self.add(a, &self.neg(b))
    }
}
