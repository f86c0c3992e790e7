//! Implicit graphs and the basic operations on them: BFS, balls, distances,
//! geodesic checks and geodesic enumeration.
//!
//! Every graph in this crate is a finite truncation (or a locally finite
//! one, like a Cayley graph of ℤ with finitely many generators) of some
//! infinite construction. Graphs are only ever explored from a vertex, so
//! the interface is a neighbour oracle rather than an adjacency structure.

mod ball;
mod explicit;
mod path;
mod traverse;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub use ball::{BallVertex, RootedBall};
pub use explicit::ExplicitGraph;
pub use path::{arrow, geodesics_between, is_geodesic, GeodPath};
pub use traverse::{
    ball, ball_with_vertices, bfs, distance, distances_from, eccentricity, Layers,
};

/// Vertex budget used when the caller does not pass one.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A graph given by an origin and a neighbour oracle.
///
/// Contract for implementors:
/// * `neighbors(v)` is sorted by `Vertex`'s `Ord`, duplicate-free, and never
///   contains `v` itself;
/// * adjacency is symmetric;
/// * `vertex_id` is injective and `parse_vertex(vertex_id(v)) == v`.
pub trait ImplicitGraph {
    type Vertex: Clone + Eq + Ord + Hash + Debug;

    fn origin(&self) -> Self::Vertex;

    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex>;

    fn adjacent(&self, u: &Self::Vertex, v: &Self::Vertex) -> bool {
        u != v && self.neighbors(u).binary_search(v).is_ok()
    }

    /// Canonical text encoding of a vertex.
    fn vertex_id(&self, v: &Self::Vertex) -> String;

    fn parse_vertex(&self, text: &str) -> Result<Self::Vertex>;

    /// Family name with its truncation parameters, e.g. `basis:M=5`.
    fn describe(&self) -> String;
}

impl<G: ImplicitGraph + ?Sized> ImplicitGraph for &G {
    type Vertex = G::Vertex;

    fn origin(&self) -> Self::Vertex {
        (**self).origin()
    }
    fn neighbors(&self, v: &Self::Vertex) -> Vec<Self::Vertex> {
        (**self).neighbors(v)
    }
    fn adjacent(&self, u: &Self::Vertex, v: &Self::Vertex) -> bool {
        (**self).adjacent(u, v)
    }
    fn vertex_id(&self, v: &Self::Vertex) -> String {
        (**self).vertex_id(v)
    }
    fn parse_vertex(&self, text: &str) -> Result<Self::Vertex> {
        (**self).parse_vertex(text)
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
}

/// Checks the neighbour contract around every vertex within `radius` of
/// `o`: sorted, duplicate-free, loop-free and symmetric.
pub fn check_contract<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    radius: usize,
    budget: usize,
) -> Result<std::result::Result<(), String>> {
    let layers = bfs(g, o, Some(radius), budget)?;
    for v in layers.layers.iter().flatten() {
        let nbrs = g.neighbors(v);
        if nbrs.windows(2).any(|w| w[0] >= w[1]) {
            return Ok(Err(format!("neighbours of {} not strictly sorted", g.vertex_id(v))));
        }
        if nbrs.contains(v) {
            return Ok(Err(format!("{} is its own neighbour", g.vertex_id(v))));
        }
        for w in &nbrs {
            if !g.neighbors(w).contains(v) {
                return Ok(Err(format!(
                    "{} lists {} but not conversely",
                    g.vertex_id(v),
                    g.vertex_id(w)
                )));
            }
        }
        if g.parse_vertex(&g.vertex_id(v)).ok().as_ref() != Some(v) {
            return Ok(Err(format!("{} does not round-trip", g.vertex_id(v))));
        }
    }
    Ok(Ok(()))
}
