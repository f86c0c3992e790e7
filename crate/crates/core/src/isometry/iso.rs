use super::refine::{cell_sizes, individualize, refine};
use crate::error::{Error, Result};
use crate::graph::RootedBall;

/// Default cap on search-tree nodes for isomorphism and canonical forms.
pub const SEARCH_BUDGET: usize = 200_000;

/// A rooted isomorphism between two balls: `map[i]` is the image in the
/// second ball of vertex `i` of the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedIso {
    pub map: Vec<usize>,
}

impl RootedIso {
    /// Checks root, distance and adjacency preservation.
    pub fn verify(&self, a: &RootedBall, b: &RootedBall) -> bool {
        let n = a.len();
        if b.len() != n || self.map.len() != n || a.edges().len() != b.edges().len() {
            return false;
        }
        let mut seen = vec![false; n];
        for &j in &self.map {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return false;
            }
        }
        self.map[0] == 0
            && (0..n).all(|i| a.dist(i) == b.dist(self.map[i]))
            && a.edges()
                .iter()
                .all(|&(i, j)| b.is_adjacent(self.map[i], self.map[j]))
    }
}

/// Decides whether two balls are isomorphic as rooted graphs, returning a
/// witness if so.
///
/// Colour refinement runs on the disjoint union, so colours are comparable
/// across the two sides. When refinement stalls, one vertex of the first
/// ball is individualised together with each candidate of the same colour
/// in the second, in index order.
pub fn rooted_iso(a: &RootedBall, b: &RootedBall, budget: usize) -> Result<Option<RootedIso>> {
    let n = a.len();
    if n != b.len() || a.edges().len() != b.edges().len() {
        return Ok(None);
    }
    let mut da: Vec<usize> = a.vertices().iter().map(|v| v.dist).collect();
    let mut db: Vec<usize> = b.vertices().iter().map(|v| v.dist).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let mut adj: Vec<Vec<usize>> = a.adjacency().to_vec();
    adj.extend(
        b.adjacency()
            .iter()
            .map(|nbrs| nbrs.iter().map(|&j| j + n).collect()),
    );
    let colors: Vec<usize> = a
        .vertices()
        .iter()
        .chain(b.vertices())
        .map(|v| v.dist)
        .collect();
    let mut nodes = 0;
    let found = search(a, b, &adj, colors, &mut nodes, budget)?;
    Ok(found.map(|map| RootedIso { map }))
}

fn search(
    a: &RootedBall,
    b: &RootedBall,
    adj: &[Vec<usize>],
    colors: Vec<usize>,
    nodes: &mut usize,
    budget: usize,
) -> Result<Option<Vec<usize>>> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::SearchBudget { limit: budget });
    }
    let n = a.len();
    let colors = refine(adj, colors);
    let sizes = cell_sizes(&colors);
    let mut left = vec![0usize; sizes.len()];
    for &c in &colors[..n] {
        left[c] += 1;
    }
    if sizes.iter().zip(&left).any(|(&s, &l)| s != 2 * l) {
        return Ok(None);
    }
    let Some(cell) = (0..sizes.len()).find(|&c| sizes[c] > 2) else {
        let mut by_color = vec![0; sizes.len()];
        for (j, &c) in colors[n..].iter().enumerate() {
            by_color[c] = j;
        }
        let map: Vec<usize> = colors[..n].iter().map(|&c| by_color[c]).collect();
        let iso = RootedIso { map };
        return Ok(iso.verify(a, b).then_some(iso.map));
    };
    let x = (0..n).find(|&i| colors[i] == cell).expect("cell has left members");
    for y in (n..2 * n).filter(|&j| colors[j] == cell) {
        let mut next = individualize(&colors, x);
        next[y] = next[x];
        if let Some(map) = search(a, b, adj, next, nodes, budget)? {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Certificate {
    dists: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// A text form shared by exactly the balls rooted-isomorphic to `a`.
///
/// Individualisation-refinement over the whole search tree, keeping at each
/// node only the children whose refined cell sizes are smallest (an
/// isomorphism invariant), and taking the least certificate among leaves.
pub fn canonical_form(a: &RootedBall, budget: usize) -> Result<String> {
    let colors: Vec<usize> = a.vertices().iter().map(|v| v.dist).collect();
    let mut nodes = 0;
    let cert = canon(a, colors, &mut nodes, budget)?;
    let dists: Vec<String> = cert.dists.iter().map(|d| d.to_string()).collect();
    let edges: Vec<String> = cert.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    Ok(format!(
        "r{};n{};d[{}];e[{}]",
        a.radius(),
        a.len(),
        dists.join(","),
        edges.join(",")
    ))
}

fn canon(a: &RootedBall, colors: Vec<usize>, nodes: &mut usize, budget: usize) -> Result<Certificate> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::SearchBudget { limit: budget });
    }
    let colors = refine(a.adjacency(), colors);
    let sizes = cell_sizes(&colors);
    let Some(cell) = (0..sizes.len()).find(|&c| sizes[c] > 1) else {
        let mut dists = vec![0; a.len()];
        for (i, &c) in colors.iter().enumerate() {
            dists[c] = a.dist(i);
        }
        let mut edges: Vec<(usize, usize)> = a
            .edges()
            .iter()
            .map(|&(i, j)| (colors[i].min(colors[j]), colors[i].max(colors[j])))
            .collect();
        edges.sort_unstable();
        return Ok(Certificate { dists, edges });
    };
    let children: Vec<(Vec<usize>, Vec<usize>)> = (0..a.len())
        .filter(|&v| colors[v] == cell)
        .map(|v| {
            let c = refine(a.adjacency(), individualize(&colors, v));
            (cell_sizes(&c), c)
        })
        .collect();
    let best = children.iter().map(|(inv, _)| inv).min().expect("cell is non-empty").clone();
    let mut result: Option<Certificate> = None;
    for (inv, c) in children {
        if inv != best {
            continue;
        }
        let cert = canon(a, c, nodes, budget)?;
        if result.as_ref().is_none_or(|r| cert < *r) {
            result = Some(cert);
        }
    }
    Ok(result.expect("at least one child"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3(root_mid: bool) -> RootedBall {
        let ids = vec!["a".into(), "b".into(), "c".into()];
        let edges = if root_mid { vec![(0, 1), (0, 2)] } else { vec![(0, 1), (1, 2)] };
        RootedBall::new(2, ids, &edges).unwrap()
    }

    #[test]
    fn endpoint_versus_midpoint() {
        let end = path3(false);
        let mid = path3(true);
        assert!(rooted_iso(&end, &end, 100).unwrap().is_some());
        assert!(rooted_iso(&end, &mid, 100).unwrap().is_none());
        assert_ne!(canonical_form(&end, 100).unwrap(), canonical_form(&mid, 100).unwrap());
    }

    #[test]
    fn four_cycle_needs_branching() {
        let ids: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let a = RootedBall::new(2, ids.clone(), &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = RootedBall::new(2, ids, &[(0, 3), (3, 2), (2, 1), (1, 0)]).unwrap();
        let iso = rooted_iso(&a, &b, 100).unwrap().unwrap();
        assert!(iso.verify(&a, &b));
        assert_eq!(canonical_form(&a, 100).unwrap(), canonical_form(&b, 100).unwrap());
    }
}
