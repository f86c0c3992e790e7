//! Reproduction bundles: each runs the desk-scale rendition of one result
//! and records every check as an assertion in a [`RunReport`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::RunReport;
use crate::error::{Error, Result};
use crate::gallery::{
    basis_graph, basis_graph_z, factorial_quotient_graph, factorial_sums, fan_graph,
    hypercube_graph, quotient_hn_graph, word_graph_h, AbelianCayley, GraphSpec,
};
use crate::geodesy::{
    erasure_rank, fold_geodesic, generalized_radius, max_zigzag_geodesic, pset,
};
use crate::graph::{bfs, eccentricity, is_geodesic, GeodPath, ImplicitGraph};
use crate::isometry::{
    h_component_analysis, rule_one_cut_check, weak_iso_specs, weak_transitive_check, SEARCH_BUDGET,
};
use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::transfinite::{dist_eta, label_eta_truncated, radius_eta, EtaGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bundle {
    Fan,
    Hypercube,
    Factorial,
    Theorem,
    YesAbelian,
    CexLemma,
    NonHausdorff,
    WordH,
}

impl Bundle {
    pub const ALL: [Bundle; 8] = [
        Bundle::Fan,
        Bundle::Hypercube,
        Bundle::Factorial,
        Bundle::Theorem,
        Bundle::YesAbelian,
        Bundle::CexLemma,
        Bundle::NonHausdorff,
        Bundle::WordH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bundle::Fan => "fan",
            Bundle::Hypercube => "hypercube",
            Bundle::Factorial => "factorial",
            Bundle::Theorem => "theorem",
            Bundle::YesAbelian => "yesabelian",
            Bundle::CexLemma => "cexlemma",
            Bundle::NonHausdorff => "nonhausdorff",
            Bundle::WordH => "wordH",
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bundle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Bundle::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown bundle {s:?}")))
    }
}

/// Runs a bundle. Errors inside individual checks (budget overruns
/// included) become failed assertions rather than aborting the run.
pub fn reproduce(bundle: Bundle, budget: usize, seed: u64) -> RunReport {
    let started = Instant::now();
    let mut report = RunReport::new(format!("reproduce {bundle}"), None);
    match bundle {
        Bundle::Fan => fan(&mut report, budget),
        Bundle::Hypercube => hypercube(&mut report, budget),
        Bundle::Factorial => factorial(&mut report, budget),
        Bundle::Theorem => theorem(&mut report, budget),
        Bundle::YesAbelian => yes_abelian(&mut report, budget, seed),
        Bundle::CexLemma => cex_lemma(&mut report),
        Bundle::NonHausdorff => non_hausdorff(&mut report, budget),
        Bundle::WordH => word_h(&mut report, budget),
    }
    report.finish(started)
}

fn record(report: &mut RunReport, name: impl Into<String>, outcome: Result<(bool, String)>) {
    match outcome {
        Ok((passed, detail)) => report.check(name, passed, Some(detail)),
        Err(e) => report.check(name, false, Some(format!("error: {e}"))),
    }
}

fn fan(report: &mut RunReport, budget: usize) {
    let mut radii = Vec::new();
    for n in 1..=10u32 {
        let outcome = (|| {
            let g = fan_graph(n, false)?;
            let radius = generalized_radius(&g, &g.origin(), budget)?;
            let erased = erasure_rank(&g, &g.origin(), n as usize, budget, budget)?;
            radii.push(radius.notation());
            let expected = ExtOrdinal::nat(n as u64);
            Ok((
                radius == expected && erased.radius == expected,
                format!("label {radius}, erasure {}", erased.radius),
            ))
        })();
        record(report, format!("radius(fan_{n}, 0) = {n}"), outcome);
    }
    report.result("radii", radii);
}

/// Every walk of length `L` from 0 whose first step only touches
/// coordinates `n < L` ends within distance `L − 1` of 0.
fn hypercube(report: &mut RunReport, budget: usize) {
    for n in 2..=5u32 {
        for len in 2..=4usize {
            let outcome = (|| {
                let g = hypercube_graph(n)?;
                let dist = bfs(&g, &g.origin(), None, budget)?.dist;
                let group = g.group().clone();
                let first: Vec<_> = g
                    .steps()
                    .iter()
                    .filter(|s| {
                        s.0.iter()
                            .zip(group.coords())
                            .all(|(x, c)| *x == 0 || (c.index.unwrap_or(0) as usize) < len)
                    })
                    .cloned()
                    .collect();
                let mut walks = 0u64;
                let mut worst = 0usize;
                let mut frontier = first;
                for _ in 1..len {
                    let mut next = Vec::with_capacity(frontier.len() * g.degree());
                    for v in &frontier {
                        next.extend(g.neighbors(v));
                    }
                    frontier = next;
                }
                for v in &frontier {
                    walks += 1;
                    worst = worst.max(dist[v]);
                }
                Ok((
                    walks == 0 || worst < len,
                    format!("{walks} walks, largest endpoint distance {worst}"),
                ))
            })();
            record(report, format!("hypercube N={n} L={len}: d <= L-1"), outcome);
        }
    }
}

fn factorial(report: &mut RunReport, budget: usize) {
    let n = 4u32;
    let outcome = (|| {
        let g = factorial_quotient_graph(n)?;
        let m = 24i64;
        let mut residues: Vec<i64> = factorial_sums(n)
            .into_iter()
            .map(|s| s.rem_euclid(m))
            .filter(|&s| s != 0)
            .collect();
        residues.sort_unstable();
        residues.dedup();
        let same = residues == g.steps();
        let diameter = (0..m)
            .map(|v| eccentricity(&g, &v, m as usize, budget).map(|e| e.unwrap_or(usize::MAX)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        let bound = n as f64 / (2.0 * std::f64::consts::E);
        report.result("quotient_diameter", diameter);
        Ok((
            same && diameter as f64 >= bound,
            format!("{} residues, diameter {diameter} vs bound {bound:.3}", residues.len()),
        ))
    })();
    record(report, "factorial N=4: generators and diameter bound", outcome);
}

pub(crate) fn theorem_sample() -> Vec<Ordinal> {
    ["0", "1", "2", "3", "5", "w", "w+1", "w+5", "w*2", "w*2+5", "w^2", "w^2+w*3+1"]
        .iter()
        .map(|s| s.parse().expect("sample parses"))
        .collect()
}

pub(crate) fn instantiable_sample() -> Vec<Ordinal> {
    ["0", "1", "2", "3", "4", "5", "6", "w", "w+1", "w+2", "w+3", "w*2", "w*2+1", "w^2", "w^2+1"]
        .iter()
        .map(|s| s.parse().expect("sample parses"))
        .collect()
}

fn theorem(report: &mut RunReport, budget: usize) {
    let mut radii = serde_json::Map::new();
    for eta in theorem_sample() {
        let r = radius_eta(&eta);
        radii.insert(eta.notation(), r.notation().into());
        report.check(
            format!("radius_eta({eta}) = {eta}"),
            r == ExtOrdinal::Ord(eta.clone()),
            Some(r.notation()),
        );
    }
    report.result("radius_eta", radii);
    let cap = budget.min(64);
    for eta in instantiable_sample() {
        for k in 2..=4u32 {
            let Ok(g) = EtaGraph::new(&eta, k, cap) else { continue };
            let outcome = (|| {
                let labels = crate::geodesy::label_all(&g, &0, budget)?;
                let mut bad = 0;
                for m in g.elements() {
                    let e = g.decode(m);
                    let d = dist_eta(&eta, &e)? as usize;
                    let l = label_eta_truncated(&eta, &e, k)?;
                    if labels.layers.distance(&m) != Some(d) || labels.get(&m) != Some(&l) {
                        bad += 1;
                    }
                }
                Ok((bad == 0, format!("{} vertices, {bad} disagreements", g.order())))
            })();
            record(report, format!("eta={eta} k={k}: recursion = BFS"), outcome);
        }
    }
}

/// A random geodesic of length `len` from `start`, following arrows.
pub(crate) fn random_geodesic<G: ImplicitGraph, R: Rng>(
    g: &G,
    start: &G::Vertex,
    len: usize,
    rng: &mut R,
    budget: usize,
) -> Result<Option<GeodPath<G::Vertex>>> {
    let layers = bfs(g, start, Some(len), budget)?;
    let mut path = vec![start.clone()];
    for d in 0..len {
        let cur = path.last().expect("non-empty");
        let next: Vec<G::Vertex> = g
            .neighbors(cur)
            .into_iter()
            .filter(|w| layers.distance(w) == Some(d + 1))
            .collect();
        match next.choose(rng) {
            Some(w) => path.push(w.clone()),
            None => return Ok(None),
        }
    }
    Ok(Some(GeodPath::new(path)))
}

fn fold_trials<G: AbelianCayley>(
    g: &G,
    starts: &[G::Vertex],
    trials: usize,
    rng: &mut ChaCha8Rng,
    budget: usize,
) -> Result<(usize, usize)> {
    let mut done = 0;
    let mut good = 0;
    let mut attempts = 0;
    while done < trials && attempts < trials * 20 {
        attempts += 1;
        let n = rng.gen_range(0..=6usize);
        let start = starts.choose(rng).expect("non-empty");
        let Some(gamma) = random_geodesic(g, start, 2 * n, rng, budget)? else {
            continue;
        };
        let kappa = fold_geodesic(g, &gamma)?;
        let lhs = g.sub(kappa.vertices.last().unwrap(), &kappa.vertices[0]);
        let rhs = g.sub(gamma.vertices.last().unwrap(), &gamma.vertices[0]);
        if is_geodesic(g, &kappa, budget)? && lhs == rhs {
            good += 1;
        }
        done += 1;
    }
    Ok((done, good))
}

fn yes_abelian(report: &mut RunReport, budget: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    let mut good = 0;
    let mut run = |name: &str, r: Result<(usize, usize)>, report: &mut RunReport| match r {
        Ok((d, ok)) => {
            total += d;
            good += ok;
            report.check(format!("fold on {name}"), d == ok && d > 0, Some(format!("{ok}/{d}")));
        }
        Err(e) => report.check(format!("fold on {name}"), false, Some(format!("error: {e}"))),
    };
    let per = 40;
    let outcome = basis_graph(6).and_then(|g| {
        let starts = bfs(&g, &g.origin(), Some(2), budget)?.layers.concat();
        fold_trials(&g, &starts, per, &mut rng, budget)
    });
    run("basis:M=6", outcome, report);
    let outcome = basis_graph_z(4).and_then(|g| {
        let starts = vec![g.origin()];
        fold_trials(&g, &starts, per, &mut rng, budget)
    });
    run("basisZ:M=4", outcome, report);
    let outcome = quotient_hn_graph(1, 5).and_then(|g| {
        let starts = vec![g.origin()];
        fold_trials(&g, &starts, per, &mut rng, budget)
    });
    run("hn:N=1,M=5", outcome, report);
    let outcome = crate::gallery::factorial_graph(3).and_then(|g| {
        fold_trials(&g, &[0, 5, -7], per, &mut rng, budget)
    });
    run("factorial:N=3", outcome, report);
    let outcome = hypercube_graph(5).and_then(|g| {
        let starts = vec![g.origin()];
        fold_trials(&g, &starts, per, &mut rng, budget)
    });
    run("hypercube:N=5", outcome, report);
    report.result("folded", total);
    report.result("geodesic_with_identity", good);
}

fn cex_lemma(report: &mut RunReport) {
    let outcome = (|| {
        let g = basis_graph(13)?;
        let mut all = true;
        for len in 0..=12 {
            let p = pset::witness_ray_prefix(&g, len)?;
            all &= pset::pset_member_path(&g, &p)?;
        }
        Ok((all, "prefixes of length 0..=12".to_string()))
    })();
    record(report, "witness ray prefixes are members", outcome);
    let outcome = (|| {
        let g = basis_graph(5)?;
        let members = pset::pset_members_from(&g, &g.origin(), 6, 1_000_000)?;
        let mut long = 0;
        let mut arithmetic = 0;
        let mut invariant = 0;
        for p in &members {
            let labels = pset::path_labels(&g, p)?;
            let mut rev = labels.clone();
            rev.reverse();
            if pset::pset_member(&rev) {
                invariant += 1;
            }
            if labels.len() >= 3 {
                long += 1;
                if pset::pset_progression(&labels, p.base)?.is_some() {
                    arithmetic += 1;
                }
            }
        }
        report.result("members_found", members.len());
        Ok((
            long == arithmetic && invariant == members.len(),
            format!(
                "{} members, {long} with >= 3 edges, {arithmetic} arithmetic, {invariant} reversal-stable",
                members.len()
            ),
        ))
    })();
    record(report, "members in basis:M=5 up to length 6", outcome);
}

fn non_hausdorff(report: &mut RunReport, budget: usize) {
    let mut ks = serde_json::Map::new();
    for m in 4..=6u32 {
        let outcome = (|| {
            let (a, b, r) = weak_iso_specs(
                &GraphSpec::Basis { m },
                &GraphSpec::Hn { n: 1, m },
                1,
                budget,
                SEARCH_BUDGET,
            )?;
            ks.insert(format!("M={m}"), r.k.into());
            Ok((r.k >= 1, format!("{a} vs {b}: K = {}", r.k)))
        })();
        record(report, format!("weak iso basis vs hn, M={m}, r=1"), outcome);
        let outcome = (|| {
            let g = basis_graph(m)?;
            let gz = basis_graph_z(m)?;
            let horizon = m as usize;
            let zg = max_zigzag_geodesic(&g, &g.origin(), horizon, budget)?;
            let zz = max_zigzag_geodesic(&gz, &gz.origin(), horizon, budget)?;
            Ok((
                zg <= (m / 2) as usize && zz >= horizon,
                format!("basis {zg}, basisZ {zz}, horizon {horizon}"),
            ))
        })();
        record(report, format!("zigzag discriminator, M={m}"), outcome);
    }
    report.result("K", ks);
}

fn word_h(report: &mut RunReport, budget: usize) {
    let m = 4u32;
    let horizon = m as usize + 1;
    let outcome = (|| {
        let h = word_graph_h(m, 3)?;
        let region = vec![h.root_word(), h.second_word()];
        let r = weak_transitive_check(&h, &region, 1, budget, SEARCH_BUDGET)?;
        Ok((r.passed, format!("{} at r=1", r.region.join(", "))))
    })();
    record(report, "wordH M=4: weakly transitive at r=1", outcome);
    let outcome = (|| {
        let h = word_graph_h(m, 3)?;
        let a = h_component_analysis(&h, &h.root_word(), horizon, budget)?;
        let b = h_component_analysis(&h, &h.second_word(), horizon, budget)?;
        Ok((
            a.bounded && !b.bounded,
            format!("{}: {}, {}: {}", a.word, a.max_zigzag, b.word, b.max_zigzag),
        ))
    })();
    record(report, "wordH M=4: components told apart", outcome);
    let outcome = (|| {
        let h = word_graph_h(m, 3)?;
        let cut = rule_one_cut_check(&h, &h.root_word(), &h.second_word(), horizon, budget)?;
        Ok((cut, format!("no detour of length <= {}", 2 * horizon)))
    })();
    record(report, "wordH M=4: append-zero edge is a cut edge", outcome);
}
