use crate::error::{Error, Result};
use crate::graph::{bfs, GeodPath, ImplicitGraph};
use crate::ordinal::ExtOrdinal;

/// Outcome of running the erasure process on `Geod(G, o)` by brute force.
#[derive(Debug, Clone)]
pub struct Erasure<V> {
    vertices: Vec<V>,
    /// Trie of geodesic paths from `o`: `(vertex index, parent node)`.
    nodes: Vec<(usize, Option<usize>)>,
    ranks: Vec<u64>,
    /// Rank of the length-0 path.
    pub radius: ExtOrdinal,
    /// Number of removal rounds performed.
    pub rounds: usize,
}

impl<V: Clone + Eq> Erasure<V> {
    pub fn path_count(&self) -> usize {
        self.nodes.len()
    }

    fn path_of(&self, mut node: usize) -> GeodPath<V> {
        let mut seq = Vec::new();
        loop {
            let (v, parent) = self.nodes[node];
            seq.push(self.vertices[v].clone());
            match parent {
                Some(p) => node = p,
                None => break,
            }
        }
        seq.reverse();
        GeodPath::new(seq)
    }

    /// Every geodesic path from `o` with the round in which it was erased.
    pub fn ranks(&self) -> Vec<(GeodPath<V>, u64)> {
        (0..self.nodes.len())
            .map(|i| (self.path_of(i), self.ranks[i]))
            .collect()
    }
}

/// Builds every geodesic path starting at `o` (they are exactly the arrow
/// chains out of `o`), then repeatedly removes the paths with no remaining
/// one-step extension. A path's rank is the round that removes it.
///
/// Fails with `MaxLenTooSmall` if some vertex lies further than `maxlen`
/// from `o`, and with a budget error past `path_budget` paths.
pub fn erasure_rank<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    maxlen: usize,
    path_budget: usize,
    budget: usize,
) -> Result<Erasure<G::Vertex>> {
    let layers = bfs(g, o, Some(maxlen + 1), budget)?;
    if layers.depth() > maxlen {
        return Err(Error::MaxLenTooSmall { maxlen });
    }
    let vertices: Vec<G::Vertex> = layers.layers.iter().flatten().cloned().collect();
    let index: std::collections::HashMap<&G::Vertex, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let arrows: Vec<Vec<usize>> = vertices
        .iter()
        .map(|v| {
            let d = layers.dist[v];
            g.neighbors(v)
                .iter()
                .filter(|w| layers.dist.get(*w) == Some(&(d + 1)))
                .map(|w| index[w])
                .collect()
        })
        .collect();

    let mut nodes: Vec<(usize, Option<usize>)> = vec![(0, None)];
    let mut children = vec![0usize];
    let mut next = 0;
    while next < nodes.len() {
        let (v, _) = nodes[next];
        for &w in &arrows[v] {
            if nodes.len() == path_budget {
                return Err(Error::BudgetExceeded {
                    what: "geodesic path count",
                    limit: path_budget,
                });
            }
            nodes.push((w, Some(next)));
            children.push(0);
            children[next] += 1;
        }
        next += 1;
    }

    let mut ranks = vec![u64::MAX; nodes.len()];
    let mut round: Vec<usize> = (0..nodes.len()).filter(|&i| children[i] == 0).collect();
    let mut rounds = 0;
    while !round.is_empty() {
        let mut following = Vec::new();
        for &i in &round {
            ranks[i] = rounds as u64;
            if let Some(p) = nodes[i].1 {
                children[p] -= 1;
                if children[p] == 0 {
                    following.push(p);
                }
            }
        }
        round = following;
        rounds += 1;
    }
    Ok(Erasure {
        vertices,
        radius: ExtOrdinal::nat(ranks[0]),
        nodes,
        ranks,
        rounds,
    })
}
