//! The path set 𝔓 of a basis Cayley graph: paths whose consecutive edge
//! labels move by exactly one and never double back.

use crate::error::{Error, Result};
use crate::gallery::{edge_label_direct, CayleyGraph, GroupElement};
use crate::graph::{GeodPath, ImplicitGraph};

/// Edge labels `N_{κ(k), κ(k+1)}` along a path, in index order.
pub fn path_labels(g: &CayleyGraph, p: &GeodPath<GroupElement>) -> Result<Vec<u32>> {
    p.validate(g)?;
    p.vertices
        .windows(2)
        .map(|w| edge_label_direct(g, &w[0], &w[1]))
        .collect()
}

/// Membership in 𝔓 from the label sequence: every window of three
/// consecutive labels `a, b, c` has `|a − b| = |b − c| = 1` and `a ≠ c`.
///
/// Paths with fewer than three edges are members vacuously.
pub fn pset_member(labels: &[u32]) -> bool {
    labels.windows(3).all(|w| {
        w[0].abs_diff(w[1]) == 1 && w[1].abs_diff(w[2]) == 1 && w[0] != w[2]
    })
}

/// The condition checked only in the forward direction: `|a − b| = 1` and
/// `a ≠ c` for each window. Unlike [`pset_member`], this is not preserved
/// by reversing the path; a label sequence `2, 3, 3` passes it while its
/// reverse does not.
pub fn pset_member_one_sided(labels: &[u32]) -> bool {
    labels
        .windows(3)
        .all(|w| w[0].abs_diff(w[1]) == 1 && w[0] != w[2])
}

pub fn pset_member_path(g: &CayleyGraph, p: &GeodPath<GroupElement>) -> Result<bool> {
    Ok(pset_member(&path_labels(g, p)?))
}

/// Fits `N_k = a·k + b` with `a ∈ {−1, 1}`, where edge `k` joins `κ(k)` and
/// `κ(k+1)` and the first edge has index `base`.
pub fn pset_progression(labels: &[u32], base: i64) -> Result<Option<(i64, i64)>> {
    if labels.len() < 3 {
        return Err(Error::InvalidPath(format!(
            "a progression needs at least 3 edges, got {}",
            labels.len()
        )));
    }
    let a = labels[1] as i64 - labels[0] as i64;
    if a.abs() != 1 {
        return Ok(None);
    }
    let b = labels[0] as i64 - a * base;
    let fits = labels
        .iter()
        .enumerate()
        .all(|(i, &n)| n as i64 == a * (base + i as i64) + b);
    Ok(fits.then_some((a, b)))
}

/// `k ↦ Σ_{2≤n≤k+1} e_n` on `[0, len]`, whose labels are `2, 3, …, len+1`.
/// The graph needs coordinates up to `len + 1`.
pub fn witness_ray_prefix(g: &CayleyGraph, len: usize) -> Result<GeodPath<GroupElement>> {
    let group = g.group();
    let mut cur = group.zero();
    let mut vertices = vec![cur.clone()];
    for k in 0..len {
        let n = (k + 2) as u32;
        let pos = group.position(Some(n)).ok_or_else(|| {
            Error::InvalidSpec(format!("{} has no coordinate e{n}", g.describe()))
        })?;
        cur = group.add(&cur, &group.unit(pos));
        vertices.push(cur.clone());
    }
    Ok(GeodPath::new(vertices))
}

/// Every member of 𝔓 that starts at `o` with between 1 and `max_len` edges.
/// Membership is closed under taking prefixes, which prunes the search.
pub fn pset_members_from(
    g: &CayleyGraph,
    o: &GroupElement,
    max_len: usize,
    limit: usize,
) -> Result<Vec<GeodPath<GroupElement>>> {
    let mut out = Vec::new();
    let mut stack = vec![o.clone()];
    let mut labels = Vec::new();
    grow(g, &mut stack, &mut labels, max_len, limit, &mut out)?;
    Ok(out)
}

fn grow(
    g: &CayleyGraph,
    stack: &mut Vec<GroupElement>,
    labels: &mut Vec<u32>,
    max_len: usize,
    limit: usize,
    out: &mut Vec<GeodPath<GroupElement>>,
) -> Result<()> {
    if labels.len() == max_len {
        return Ok(());
    }
    let last = stack.last().expect("non-empty").clone();
    for w in g.neighbors(&last) {
        labels.push(edge_label_direct(g, &last, &w)?);
        let n = labels.len();
        if n < 3 || pset_member(&labels[n - 3..]) {
            stack.push(w);
            if out.len() == limit {
                return Err(Error::LimitExceeded { limit });
            }
            out.push(GeodPath::new(stack.clone()));
            grow(g, stack, labels, max_len, limit, out)?;
            stack.pop();
        }
        labels.pop();
    }
    Ok(())
}
