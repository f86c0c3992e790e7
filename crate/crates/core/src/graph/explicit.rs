use rand::Rng;

use super::{ImplicitGraph, RootedBall};
use crate::error::{Error, Result};

/// A finite graph stored as sorted adjacency lists over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    adj: Vec<Vec<usize>>,
    origin: usize,
    name: String,
}

impl ExplicitGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)], name: impl Into<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("a graph needs at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidSpec(format!("bad edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(ExplicitGraph {
            adj,
            origin: 0,
            name: name.into(),
        })
    }

    pub fn with_origin(mut self, origin: usize) -> Self {
        assert!(origin < self.adj.len());
        self.origin = origin;
        self
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges, format!("path:n={n}")).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges, format!("cycle:n={n}")).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Self::from_edges(n, &edges, format!("complete:n={n}")).expect("valid clique")
    }

    /// A random connected graph: a random spanning tree plus each other pair
    /// independently with probability `p`.
    pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        Self::from_edges(n, &edges, format!("random:n={n}")).expect("valid random graph")
    }

    /// The ball as a stand-alone graph, rooted at its centre.
    pub fn from_ball(b: &RootedBall) -> Self {
        Self::from_edges(b.len(), b.edges(), format!("ball:r={}", b.radius()))
            .expect("balls are valid graphs")
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }
}

impl ImplicitGraph for ExplicitGraph {
    type Vertex = usize;

    fn origin(&self) -> usize {
        self.origin
    }

    fn neighbors(&self, v: &usize) -> Vec<usize> {
        self.adj[*v].clone()
    }

    fn adjacent(&self, u: &usize, v: &usize) -> bool {
        self.adj[*u].binary_search(v).is_ok()
    }

    fn vertex_id(&self, v: &usize) -> String {
        v.to_string()
    }

    fn parse_vertex(&self, text: &str) -> Result<usize> {
        text.trim()
            .parse::<usize>()
            .ok()
            .filter(|&v| v < self.adj.len())
            .ok_or_else(|| Error::InvalidVertex(text.to_string()))
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}
