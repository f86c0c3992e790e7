use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{bfs, ImplicitGraph, Layers, RootedBall};
use crate::ordinal::{sup_plus, ExtOrdinal};

/// The labels `ℓ_v` of every vertex of a finite graph, relative to a root.
#[derive(Debug, Clone)]
pub struct LabelMap<V> {
    pub layers: Layers<V>,
    labels: HashMap<V, ExtOrdinal>,
}

impl<V: Clone + Eq + std::hash::Hash> LabelMap<V> {
    pub fn get(&self, v: &V) -> Option<&ExtOrdinal> {
        self.labels.get(v)
    }

    pub fn root(&self) -> &ExtOrdinal {
        &self.labels[&self.layers.layers[0][0]]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, &ExtOrdinal)> {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Solves `L_v = sup⁺{L_w : v → w}` on the component of `o`, which must be
/// finite. Arrows point away from `o`, so the system is solved layer by
/// layer from the outside in.
pub fn label_all<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    budget: usize,
) -> Result<LabelMap<G::Vertex>> {
    let layers = bfs(g, o, None, budget)?;
    let mut labels: HashMap<G::Vertex, ExtOrdinal> = HashMap::with_capacity(layers.len());
    for (d, layer) in layers.layers.iter().enumerate().rev() {
        for v in layer {
            let label = {
                let next = g
                    .neighbors(v)
                    .into_iter()
                    .filter(|w| layers.dist.get(w) == Some(&(d + 1)))
                    .map(|w| labels[&w].clone())
                    .collect::<Vec<_>>();
                sup_plus(next.iter())
            };
            labels.insert(v.clone(), label);
        }
    }
    Ok(LabelMap { layers, labels })
}

/// Labels of a rooted ball, by ball index. Refuses balls that reach their
/// boundary sphere: the arrows out of boundary vertices are unknown.
pub fn label_ball(b: &RootedBall) -> Result<Vec<ExtOrdinal>> {
    if b.touches_boundary() {
        return Err(Error::ClippedBall { radius: b.radius() });
    }
    let mut labels = vec![ExtOrdinal::zero(); b.len()];
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(b.dist(i)));
    for i in order {
        let next: Vec<ExtOrdinal> = b
            .neighbors(i)
            .iter()
            .filter(|&&j| b.dist(j) == b.dist(i) + 1)
            .map(|&j| labels[j].clone())
            .collect();
        labels[i] = sup_plus(next.iter());
    }
    Ok(labels)
}

/// `ℓ_o`.
pub fn generalized_radius<G: ImplicitGraph>(
    g: &G,
    o: &G::Vertex,
    budget: usize,
) -> Result<ExtOrdinal> {
    Ok(label_all(g, o, budget)?.root().clone())
}

/// Largest generalised radius over the component of the origin.
pub fn generalized_diameter<G: ImplicitGraph>(g: &G, budget: usize) -> Result<ExtOrdinal> {
    let all = bfs(g, &g.origin(), None, budget)?;
    let mut best = ExtOrdinal::zero();
    for v in all.layers.iter().flatten() {
        let r = generalized_radius(g, v, budget)?;
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ball, ExplicitGraph};

    #[test]
    fn path_rooted_at_an_end() {
        let g = ExplicitGraph::path(3);
        assert_eq!(generalized_radius(&g, &0, 100).unwrap(), ExtOrdinal::nat(2));
        assert_eq!(generalized_radius(&g, &1, 100).unwrap(), ExtOrdinal::nat(1));
        assert_eq!(generalized_diameter(&g, 100).unwrap(), ExtOrdinal::nat(2));
    }

    #[test]
    fn ball_labels_refuse_clipping() {
        let g = ExplicitGraph::path(5);
        let b = ball(&g, &0, 2, 100).unwrap();
        assert!(matches!(label_ball(&b), Err(Error::ClippedBall { radius: 2 })));
        let b = ball(&g, &0, 5, 100).unwrap();
        let labels = label_ball(&b).unwrap();
        assert_eq!(labels[0], ExtOrdinal::nat(4));
    }
}
