use super::cayley::CayleyGraph;
use super::group::GroupElement;
use crate::error::{Error, Result};
use crate::geodesy::length_two_paths;
use crate::graph::ImplicitGraph;

/// Index of the coordinate where the endpoints of a basis-generator edge
/// disagree.
pub fn edge_label_direct(g: &CayleyGraph, u: &GroupElement, v: &GroupElement) -> Result<u32> {
    let err = || Error::NotBasisEdge {
        u: g.vertex_id(u),
        v: g.vertex_id(v),
    };
    if !g.is_basis() {
        return Err(err());
    }
    if !g.adjacent(u, v) {
        return Err(Error::NotAnEdge {
            u: g.vertex_id(u),
            v: g.vertex_id(v),
        });
    }
    let diff = g.group().sub(v, u);
    let mut nonzero = diff.0.iter().enumerate().filter(|(_, x)| **x != 0);
    let (pos, _) = nonzero.next().ok_or_else(err)?;
    if nonzero.next().is_some() {
        return Err(err());
    }
    g.group().coords()[pos].index.ok_or_else(err)
}

/// Recovers an edge label from the graph structure alone: the least `n ≥ 3`
/// such that a zigzag-free path of length `n − 1` joins the endpoints, or 2
/// if there is none with `n ≤ horizon`.
///
/// `horizon` must be at least the largest cyclic order in the group, or
/// long cycles could be missed.
pub fn edge_label_intrinsic(
    g: &CayleyGraph,
    u: &GroupElement,
    v: &GroupElement,
    horizon: usize,
    budget: usize,
) -> Result<u32> {
    if !g.adjacent(u, v) {
        return Err(Error::NotAnEdge {
            u: g.vertex_id(u),
            v: g.vertex_id(v),
        });
    }
    if !g.group().is_finite() {
        return Err(Error::InvalidSpec(
            "intrinsic labels need every coordinate to be finite".into(),
        ));
    }
    let needed = g.group().orders().into_iter().max().unwrap_or(2) as usize;
    if horizon < needed {
        return Err(Error::HorizonTooSmall { horizon, needed });
    }
    let mut visited = 0usize;
    for n in 3..=horizon {
        let mut stack = vec![u.clone()];
        if zigzag_free_walk(g, &mut stack, n - 1, v, &mut visited, budget)? {
            return Ok(n as u32);
        }
    }
    Ok(2)
}

fn zigzag_free_walk(
    g: &CayleyGraph,
    stack: &mut Vec<GroupElement>,
    len: usize,
    target: &GroupElement,
    visited: &mut usize,
    budget: usize,
) -> Result<bool> {
    *visited += 1;
    if *visited > budget {
        return Err(Error::SearchBudget { limit: budget });
    }
    if stack.len() == len + 1 {
        return Ok(stack.last() == Some(target));
    }
    let last = stack.last().expect("non-empty").clone();
    for w in g.neighbors(&last) {
        if stack.len() >= 2 && length_two_paths(g, &stack[stack.len() - 2], &w) != 1 {
            continue;
        }
        stack.push(w);
        let found = zigzag_free_walk(g, stack, len, target, visited, budget)?;
        stack.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
