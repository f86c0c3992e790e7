use std::collections::HashMap;

use super::{bfs, ImplicitGraph, RootedBall};
use crate::error::{Error, Result};

/// A finite path `κ : [base, base + len] → V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeodPath<V> {
    pub base: i64,
    pub vertices: Vec<V>,
}

impl<V: Clone + Eq> GeodPath<V> {
    pub fn new(vertices: Vec<V>) -> Self {
        GeodPath { base: 0, vertices }
    }

    pub fn with_base(base: i64, vertices: Vec<V>) -> Self {
        GeodPath { base, vertices }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }

    pub fn first_index(&self) -> i64 {
        self.base
    }

    pub fn last_index(&self) -> i64 {
        self.base + self.len() as i64
    }

    /// `κ(k)`, if `k` is in the domain.
    pub fn at(&self, k: i64) -> Option<&V> {
        let i = k.checked_sub(self.base)?;
        usize::try_from(i).ok().and_then(|i| self.vertices.get(i))
    }

    /// `k ↦ κ(k - shift)`.
    pub fn shifted(&self, shift: i64) -> Self {
        GeodPath {
            base: self.base + shift,
            vertices: self.vertices.clone(),
        }
    }

    /// `k ↦ κ(-k)`.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        GeodPath {
            base: -self.last_index(),
            vertices,
        }
    }

    /// Checks that consecutive vertices are adjacent.
    pub fn validate<G: ImplicitGraph<Vertex = V>>(&self, g: &G) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidPath("a path has a non-empty domain".into()));
        }
        for w in self.vertices.windows(2) {
            if !g.adjacent(&w[0], &w[1]) {
                return Err(Error::NotAnEdge {
                    u: g.vertex_id(&w[0]),
                    v: g.vertex_id(&w[1]),
                });
            }
        }
        Ok(())
    }
}

/// Whether `d(κ(m), κ(n)) = |m − n|` for every pair of indices.
pub fn is_geodesic<G: ImplicitGraph>(
    g: &G,
    p: &GeodPath<G::Vertex>,
    budget: usize,
) -> Result<bool> {
    p.validate(g)?;
    let len = p.len();
    for (i, v) in p.vertices.iter().enumerate() {
        if i == len {
            break;
        }
        let layers = bfs(g, v, Some(len - i), budget)?;
        for (j, w) in p.vertices.iter().enumerate().skip(i + 1) {
            if layers.distance(w) != Some(j - i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `v → w` in a rooted ball: an edge along which the distance to the root
/// increases by one.
///
/// Fails when `v` sits on the boundary sphere, since arrows out of it may
/// leave the ball.
pub fn arrow(b: &RootedBall, v: usize, w: usize) -> Result<bool> {
    if v >= b.len() || w >= b.len() {
        return Err(Error::InvalidVertex(format!("ball index {}", v.max(w))));
    }
    if b.dist(v) >= b.radius() {
        return Err(Error::ClippedDistance {
            vertex: b.id(v).to_string(),
        });
    }
    Ok(b.is_adjacent(v, w) && b.dist(w) == b.dist(v) + 1)
}

/// All geodesic paths from `u` to `v`, in lexicographic order of their
/// vertex sequences. Fails if there are more than `limit`.
pub fn geodesics_between<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    limit: usize,
    budget: usize,
) -> Result<Vec<GeodPath<G::Vertex>>> {
    if u == v {
        return Ok(vec![GeodPath::new(vec![u.clone()])]);
    }
    let from_u = search_until(g, u, v, budget)?;
    let d = from_u[v];
    let from_v = bfs(g, v, Some(d), budget)?;
    let mut out = Vec::new();
    let mut stack = vec![u.clone()];
    extend(g, &from_u, &from_v.dist, d, v, &mut stack, &mut out, limit)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend<G: ImplicitGraph>(
    g: &G,
    from_u: &HashMap<G::Vertex, usize>,
    from_v: &HashMap<G::Vertex, usize>,
    d: usize,
    target: &G::Vertex,
    stack: &mut Vec<G::Vertex>,
    out: &mut Vec<GeodPath<G::Vertex>>,
    limit: usize,
) -> Result<()> {
    let k = stack.len() - 1;
    let last = stack[k].clone();
    if &last == target {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        out.push(GeodPath::new(stack.clone()));
        return Ok(());
    }
    for w in g.neighbors(&last) {
        if from_u.get(&w) == Some(&(k + 1)) && from_v.get(&w) == Some(&(d - k - 1)) {
            stack.push(w);
            extend(g, from_u, from_v, d, target, stack, out, limit)?;
            stack.pop();
        }
    }
    Ok(())
}

/// BFS from `u` until `v` is reached; returns the distances found so far.
fn search_until<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    budget: usize,
) -> Result<HashMap<G::Vertex, usize>> {
    let mut dist = HashMap::from([(u.clone(), 0)]);
    let mut frontier = vec![u.clone()];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for w in g.neighbors(x) {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), depth);
                    next.push(w);
                }
            }
            if dist.len() > budget {
                return Err(Error::BudgetExceeded {
                    what: "BFS vertex count",
                    limit: budget,
                });
            }
        }
        if dist.contains_key(v) {
            return Ok(dist);
        }
        frontier = next;
    }
    Err(Error::Unreachable(g.vertex_id(v)))
}
