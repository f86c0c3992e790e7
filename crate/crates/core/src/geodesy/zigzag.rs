use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bfs, GeodPath, ImplicitGraph};

/// Number of paths of length 2 from `a` to `b`, i.e. `|N(a) ∩ N(b)|`. When
/// `a == b` this is the degree of `a`.
pub fn length_two_paths<G: ImplicitGraph>(g: &G, a: &G::Vertex, b: &G::Vertex) -> usize {
    let na = g.neighbors(a);
    let nb = g.neighbors(b);
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < na.len() && j < nb.len() {
        match na[i].cmp(&nb[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Whether every pair `κ(k), κ(k+2)` is joined by exactly one path of
/// length 2.
pub fn is_zigzag_free<G: ImplicitGraph>(g: &G, p: &GeodPath<G::Vertex>) -> Result<bool> {
    p.validate(g)?;
    Ok(p
        .vertices
        .windows(3)
        .all(|w| length_two_paths(g, &w[0], &w[2]) == 1))
}

/// Length of the longest zigzag-free geodesic path starting at `o`, capped
/// at `horizon`.
///
/// A path along arrows out of `o` is geodesic, since its endpoint sits at
/// distance equal to its length, so the search only follows arrows. Results
/// are memoised on the last two vertices, which is all the zigzag condition
/// looks at.
pub fn max_zigzag_geodesic<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    horizon: usize,
    budget: usize,
) -> Result<usize> {
    if horizon == 0 {
        return Ok(0);
    }
    let layers = bfs(g, o, Some(horizon), budget)?;
    let arrows = |v: &G::Vertex| -> Vec<G::Vertex> {
        let d = layers.dist[v];
        if d == horizon {
            return Vec::new();
        }
        g.neighbors(v)
            .into_iter()
            .filter(|w| layers.dist.get(w) == Some(&(d + 1)))
            .collect()
    };
    let mut memo: HashMap<(G::Vertex, G::Vertex), usize> = HashMap::new();
    let mut best = 0;
    for w in arrows(o) {
        let len = 1 + extend(g, o, &w, &arrows, &mut memo, budget)?;
        best = best.max(len);
    }
    Ok(best.min(horizon))
}

fn extend<G: ImplicitGraph, F>(
    g: &G,
    prev: &G::Vertex,
    cur: &G::Vertex,
    arrows: &F,
    memo: &mut HashMap<(G::Vertex, G::Vertex), usize>,
    budget: usize,
) -> Result<usize>
where
    F: Fn(&G::Vertex) -> Vec<G::Vertex>,
{
    let key = (prev.clone(), cur.clone());
    if let Some(&v) = memo.get(&key) {
        return Ok(v);
    }
    if memo.len() >= budget {
        return Err(Error::SearchBudget { limit: budget });
    }
    let mut best = 0;
    for next in arrows(cur) {
        if length_two_paths(g, prev, &next) == 1 {
            best = best.max(1 + extend(g, cur, &next, arrows, memo, budget)?);
        }
    }
    memo.insert(key, best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ExplicitGraph;

    #[test]
    fn cycle_of_six() {
        let g = ExplicitGraph::cycle(6);
        assert_eq!(max_zigzag_geodesic(&g, &0, 10, 1000).unwrap(), 3);
        assert!(is_zigzag_free(&g, &GeodPath::new(vec![0, 1, 2, 3])).unwrap());
    }

    #[test]
    fn backtracking_counts_the_degree() {
        let g = ExplicitGraph::path(3);
        assert!(!is_zigzag_free(&g, &GeodPath::new(vec![1, 0, 1])).unwrap());
        assert!(is_zigzag_free(&g, &GeodPath::new(vec![2, 1, 2])).unwrap());
    }
}
