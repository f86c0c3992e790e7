use serde::Serialize;

use super::iso::rooted_iso;
use crate::error::Result;
use crate::gallery::{matched_pair, GraphSpec, GraphTask};
use crate::graph::{ball, ImplicitGraph, RootedBall};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakTransReport {
    pub radius: usize,
    pub region: Vec<String>,
    pub passed: bool,
    /// Two region vertices with non-isomorphic balls.
    pub counterexample: Option<(String, String)>,
    /// For each region vertex, the rooted isomorphism from the first
    /// vertex's ball to its own, as pairs of vertex ids.
    pub witnesses: Vec<Vec<(String, String)>>,
}

/// Whether all balls of radius `r` around the region vertices are rooted
/// isomorphic. Each ball is compared with the first one.
pub fn weak_transitive_check<G: ImplicitGraph>(
    g: &G,
    region: &[G::Vertex],
    r: usize,
    budget: usize,
    search_budget: usize,
) -> Result<WeakTransReport> {
    let ids: Vec<String> = region.iter().map(|v| g.vertex_id(v)).collect();
    let mut report = WeakTransReport {
        radius: r,
        region: ids.clone(),
        passed: true,
        counterexample: None,
        witnesses: Vec::new(),
    };
    let Some(first) = region.first() else {
        return Ok(report);
    };
    let reference = ball(g, first, r, budget)?;
    for (v, id) in region.iter().zip(&ids) {
        let other = ball(g, v, r, budget)?;
        match rooted_iso(&reference, &other, search_budget)? {
            Some(iso) => report.witnesses.push(
                iso.map
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (reference.id(i).to_string(), other.id(j).to_string()))
                    .collect(),
            ),
            None => {
                report.passed = false;
                report.counterexample = Some((ids[0].clone(), id.clone()));
                report.witnesses.clear();
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeakIsoReport {
    pub cap: usize,
    /// `isomorphic[n]`: whether the matched balls of radius `n` are rooted
    /// isomorphic.
    pub isomorphic: Vec<bool>,
    /// Largest `n ≤ cap` with isomorphic balls.
    pub k: usize,
    /// `2^(−k)`.
    pub local_distance: f64,
    /// Whether the radii with isomorphic balls form an initial segment.
    pub downward_closed: bool,
}

/// Compares rooted balls of radius `0..=cap` produced by `balls`, which
/// supplies a matched pair for each radius.
pub fn weak_iso_upto<F>(mut balls: F, cap: usize, search_budget: usize) -> Result<WeakIsoReport>
where
    F: FnMut(usize) -> Result<(RootedBall, RootedBall)>,
{
    let mut isomorphic = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let (a, b) = balls(n)?;
        isomorphic.push(rooted_iso(&a, &b, search_budget)?.is_some());
    }
    let k = isomorphic.iter().rposition(|&x| x).unwrap_or(0);
    let prefix = isomorphic.iter().take_while(|&&x| x).count();
    let downward_closed = isomorphic[prefix..].iter().all(|&x| !x);
    Ok(WeakIsoReport {
        cap,
        k,
        local_distance: 2f64.powi(-(k as i32)),
        downward_closed,
        isomorphic,
    })
}

struct OriginBall {
    radius: usize,
    budget: usize,
}

impl GraphTask for OriginBall {
    type Output = Result<RootedBall>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<RootedBall> {
        ball(g, &g.origin(), self.radius, self.budget)
    }
}

/// [`weak_iso_upto`] for two families given by spec, matched with
/// [`matched_pair`] and compared at their origins.
pub fn weak_iso_specs(
    a: &GraphSpec,
    b: &GraphSpec,
    cap: usize,
    budget: usize,
    search_budget: usize,
) -> Result<(GraphSpec, GraphSpec, WeakIsoReport)> {
    let (ma, mb) = matched_pair(a, b);
    let report = weak_iso_upto(
        |radius| {
            let ba = ma.dispatch(OriginBall { radius, budget }, budget)??;
            let bb = mb.dispatch(OriginBall { radius, budget }, budget)??;
            Ok((ba, bb))
        },
        cap,
        search_budget,
    )?;
    Ok((ma, mb, report))
}
