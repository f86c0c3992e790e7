use serde::Serialize;

use crate::error::{Error, Result};
use crate::gallery::{EdgeRule, ModifyLastOnly, Word, WordGraph};
use crate::geodesy::max_zigzag_geodesic;
use crate::graph::{bfs, ImplicitGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HComponent {
    pub word: String,
    pub horizon: usize,
    /// Vertices of the last-letter component within `horizon` of the word.
    pub ball_size: usize,
    /// Longest zigzag-free geodesic from the word inside its component,
    /// capped at `horizon`.
    pub max_zigzag: usize,
    /// True when `max_zigzag` stays below the horizon, as in `Cay(G, S)`.
    pub bounded: bool,
}

/// Looks at the component of `w` once the append-zero edges are deleted.
/// Those components are copies of `Cay(G, S)` or `Cay(G′, S′)`, told apart
/// by whether zigzag-free geodesics run up to the horizon.
pub fn h_component_analysis(
    h: &WordGraph,
    w: &Word,
    horizon: usize,
    budget: usize,
) -> Result<HComponent> {
    if !h.is_valid(w) {
        return Err(Error::InvalidVertex(format!("{w:?}")));
    }
    let component = ModifyLastOnly(h);
    let layers = bfs(&component, w, Some(horizon), budget)?;
    let max_zigzag = max_zigzag_geodesic(&component, w, horizon, budget)?;
    Ok(HComponent {
        word: h.vertex_id(w),
        horizon,
        ball_size: layers.len(),
        max_zigzag,
        bounded: max_zigzag < horizon,
    })
}

/// A graph with one edge deleted.
struct WithoutEdge<'a, G: ImplicitGraph> {
    g: &'a G,
    u: G::Vertex,
    v: G::Vertex,
}

impl<G: ImplicitGraph> ImplicitGraph for WithoutEdge<'_, G> {
    type Vertex = G::Vertex;

    fn origin(&self) -> G::Vertex {
        self.g.origin()
    }

    fn neighbors(&self, x: &G::Vertex) -> Vec<G::Vertex> {
        let mut out = self.g.neighbors(x);
        if *x == self.u {
            out.retain(|y| *y != self.v);
        } else if *x == self.v {
            out.retain(|y| *y != self.u);
        }
        out
    }

    fn vertex_id(&self, x: &G::Vertex) -> String {
        self.g.vertex_id(x)
    }

    fn parse_vertex(&self, text: &str) -> Result<G::Vertex> {
        self.g.parse_vertex(text)
    }

    fn describe(&self) -> String {
        format!("{} minus an edge", self.g.describe())
    }
}

/// For an append-zero edge `{u, v}`: true when no path of length at most
/// `2·horizon` joins `u` and `v` once the edge is removed. This is a
/// bounded check; it cannot rule out longer detours.
pub fn rule_one_cut_check(
    h: &WordGraph,
    u: &Word,
    v: &Word,
    horizon: usize,
    budget: usize,
) -> Result<bool> {
    if h.edge_kind(u, v) != Some(EdgeRule::AppendZero) {
        return Err(Error::NotAnEdge {
            u: h.vertex_id(u),
            v: h.vertex_id(v),
        });
    }
    let cut = WithoutEdge {
        g: h,
        u: u.clone(),
        v: v.clone(),
    };
    let from_u = bfs(&cut, u, Some(horizon), budget)?;
    let from_v = bfs(&cut, v, Some(horizon), budget)?;
    let (small, large) = if from_u.len() <= from_v.len() {
        (&from_u, &from_v)
    } else {
        (&from_v, &from_u)
    };
    Ok(!small.dist.keys().any(|x| large.dist.contains_key(x)))
}
