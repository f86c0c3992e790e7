use std::collections::HashMap;

use super::{ImplicitGraph, RootedBall};
use crate::error::{Error, Result};

/// BFS layers from a root. `layers[k]` holds the vertices at distance `k`,
/// sorted.
#[derive(Debug, Clone)]
pub struct Layers<V> {
    pub layers: Vec<Vec<V>>,
    pub dist: HashMap<V, usize>,
    /// True when the whole component was explored, i.e. the search stopped
    /// because the frontier emptied and not because of the depth limit.
    pub exhausted: bool,
}

impl<V: Eq + std::hash::Hash> Layers<V> {
    pub fn distance(&self, v: &V) -> Option<usize> {
        self.dist.get(v).copied()
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// Breadth-first search from `o`, down to `max_depth` if given.
pub fn bfs<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    max_depth: Option<usize>,
    budget: usize,
) -> Result<Layers<G::Vertex>> {
    let mut dist = HashMap::new();
    dist.insert(o.clone(), 0);
    let mut layers = vec![vec![o.clone()]];
    loop {
        let depth = layers.len() - 1;
        if max_depth.is_some_and(|m| depth >= m) {
            return Ok(Layers {
                layers,
                dist,
                exhausted: false,
            });
        }
        let mut next = Vec::new();
        for v in &layers[depth] {
            for w in g.neighbors(v) {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), depth + 1);
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
        if next.is_empty() {
            return Ok(Layers {
                layers,
                dist,
                exhausted: true,
            });
        }
        next.sort();
        layers.push(next);
    }
}

/// Distances from `o` to every vertex of its (finite) component.
pub fn distances_from<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    budget: usize,
) -> Result<Layers<G::Vertex>> {
    bfs(g, o, None, budget)
}

/// The ball of radius `r` around `o` as a rooted graph.
pub fn ball<G: ImplicitGraph>(g: &G, o: &G::Vertex, r: usize, budget: usize) -> Result<RootedBall> {
    ball_with_vertices(g, o, r, budget).map(|(b, _)| b)
}

/// Like [`ball`], also returning the typed vertices in ball-index order.
pub fn ball_with_vertices<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    r: usize,
    budget: usize,
) -> Result<(RootedBall, Vec<G::Vertex>)> {
    let layers = bfs(g, o, Some(r), budget)?;
    let mut order: Vec<(usize, String, G::Vertex)> = layers
        .layers
        .iter()
        .enumerate()
        .flat_map(|(d, layer)| layer.iter().map(move |v| (d, v)))
        .map(|(d, v)| (d, g.vertex_id(v), v.clone()))
        .collect();
    order.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let index: HashMap<&G::Vertex, usize> =
        order.iter().enumerate().map(|(i, (_, _, v))| (v, i)).collect();
    let mut edges = Vec::new();
    for (i, (_, _, v)) in order.iter().enumerate() {
        for w in g.neighbors(v) {
            if let Some(&j) = index.get(&w) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    let vertices = order.iter().map(|(_, _, v)| v.clone()).collect();
    let ball = RootedBall::from_sorted(
        r,
        order.into_iter().map(|(d, id, _)| (id, d)).collect(),
        edges,
    );
    Ok((ball, vertices))
}

/// Graph distance from `u` to `v` if it is at most `cap`, `None` otherwise.
pub fn distance<G: ImplicitGraph>(
    g: &G,
    u: &G::Vertex,
    v: &G::Vertex,
    cap: usize,
    budget: usize,
) -> Result<Option<usize>> {
    if u == v {
        return Ok(Some(0));
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(u.clone());
    let mut frontier = vec![u.clone()];
    for depth in 1..=cap {
        let mut next = Vec::new();
        for x in &frontier {
            for w in g.neighbors(x) {
                if &w == v {
                    return Ok(Some(depth));
                }
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
            if seen.len() > budget {
                return Err(Error::BudgetExceeded {
                    what: "BFS vertex count",
                    limit: budget,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(None)
}

/// Largest distance from `o`, if every vertex lies within `cap`.
pub fn eccentricity<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    cap: usize,
    budget: usize,
) -> Result<Option<usize>> {
    let layers = bfs(g, o, Some(cap + 1), budget)?;
    if layers.depth() > cap {
        Ok(None)
    } else {
        Ok(Some(layers.depth()))
    }
}
