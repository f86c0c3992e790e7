use std::collections::{BTreeSet, HashSet};

use geodometer::gallery::{
    basis_graph, basis_graph_z, edge_label_direct, edge_label_intrinsic, factorial_graph,
    factorial_quotient_graph, fan_graph, hypercube_graph, matched_pair, quotient_hn_graph,
    word_graph_h, word_graph_hz, AbelianCayley, CayleyGraph, EdgeRule, FanVertex, GraphSpec,
    Word,
};
use geodometer::geodesy::length_two_paths;
use geodometer::graph::{ball, bfs, ImplicitGraph};
use geodometer::isometry::{rooted_iso, SEARCH_BUDGET};
use geodometer::transfinite::EtaGraph;
use geodometer::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BUDGET: usize = 1_000_000;

fn ids<G: ImplicitGraph>(g: &G, vs: &[G::Vertex]) -> BTreeSet<String> {
    vs.iter().map(|v| g.vertex_id(v)).collect()
}

fn diameter<G: ImplicitGraph>(g: &G) -> usize {
    bfs(g, &g.origin(), None, BUDGET).unwrap().depth()
}

#[test]
fn hypercube_family() {
    let g = hypercube_graph(2).unwrap();
    let b = ball(&g, &g.origin(), 5, BUDGET).unwrap();
    assert_eq!((b.len(), b.edges().len()), (2, 1));

    // (Z/2, Z/3): distinct non-zero reductions of {-1,0,1}^2
    let g = hypercube_graph(3).unwrap();
    let mut steps = BTreeSet::new();
    for a in -1i64..=1 {
        for c in -1i64..=1 {
            let v = (a.rem_euclid(2), c.rem_euclid(3));
            if v != (0, 0) {
                steps.insert(v);
            }
        }
    }
    assert_eq!(g.degree(), steps.len());
    assert_eq!(g.degree(), 5);
    // transitive, so the diameter is the eccentricity of 0, and the
    // coordinate-wise cyclic distance max ⌊n/2⌋ bounds it
    assert_eq!(diameter(&hypercube_graph(4).unwrap()), 2);
    assert!(matches!(hypercube_graph(1), Err(Error::InvalidSpec(_))));
}

#[test]
fn basis_family() {
    let g = basis_graph(3).unwrap();
    let nbrs = g.neighbors(&g.origin());
    assert_eq!(ids(&g, &nbrs), BTreeSet::from(["e2", "e3", "2e3"].map(String::from)));

    let gz = basis_graph_z(2).unwrap();
    let nbrs = gz.neighbors(&gz.origin());
    assert_eq!(ids(&gz, &nbrs), BTreeSet::from(["e2", "z", "-z"].map(String::from)));

    let g = basis_graph(6).unwrap();
    let group = g.group().clone();
    for n in 0..group.rank() {
        for m in n + 1..group.rank() {
            let v = group.add(&group.unit(n), &group.unit(m));
            let d = bfs(&g, &g.origin(), Some(2), BUDGET).unwrap().distance(&v);
            assert_eq!(d, Some(2));
        }
    }
}

#[test]
fn factorial_family() {
    let g = factorial_graph(2).unwrap();
    assert_eq!(g.steps(), &[-3, -2, -1, 1, 2, 3]);
    let g = factorial_graph(3).unwrap();
    assert!(g.adjacent(&0, &9));
    let d = bfs(&g, &0, Some(2), BUDGET).unwrap().distance(&12);
    assert_eq!(d, Some(2));
    assert!(!g.adjacent(&0, &12));

    let q = factorial_quotient_graph(4).unwrap();
    assert_eq!(q.modulus(), Some(24));
    assert!(q.steps().iter().all(|s| (0..24).contains(s)));
}

#[test]
fn fan_family() {
    let g = fan_graph(1, false).unwrap();
    let b = ball(&g, &g.origin(), 3, BUDGET).unwrap();
    assert_eq!((b.len(), b.edges().len()), (2, 1));
    let g = fan_graph(3, false).unwrap();
    assert_eq!(g.vertex_count(), 7);
    assert_eq!(ball(&g, &g.origin(), 10, BUDGET).unwrap().len(), 7);
    assert_eq!(g.neighbors(&FanVertex::Hub).len(), 3);

    let ray = fan_graph(3, true).unwrap();
    let plain = fan_graph(4, false).unwrap();
    let a = ball(&ray, &ray.origin(), 10, BUDGET).unwrap();
    let b = ball(&plain, &plain.origin(), 10, BUDGET).unwrap();
    assert!(rooted_iso(&a, &b, SEARCH_BUDGET).unwrap().is_some());
    assert_eq!(ray.vertex_id(&ray.parse_vertex("(4,inf)").unwrap()), "(4,inf)");
}

#[test]
fn quotient_family() {
    let line = quotient_hn_graph(0, 2).unwrap();
    assert_eq!(line.group().orders(), vec![0]);
    assert_eq!(line.degree(), 2);
    let layers = bfs(&line, &line.origin(), Some(4), BUDGET).unwrap();
    assert!(layers.layers[1..].iter().all(|l| l.len() == 2));

    let g = quotient_hn_graph(1, 5).unwrap();
    assert_eq!(g.group().orders(), vec![2, 3, 0, 4]);
    let b = basis_graph(5).unwrap();
    assert_eq!(
        ball(&g, &g.origin(), 1, BUDGET).unwrap().len(),
        ball(&b, &b.origin(), 1, BUDGET).unwrap().len()
    );
    assert!(quotient_hn_graph(2, 5).is_err());
}

#[test]
fn word_graph_edges() {
    let h = word_graph_h(4, 3).unwrap();
    let (root, second) = (h.root_word(), h.second_word());
    assert_eq!(h.edge_kind(&root, &second), Some(EdgeRule::AppendZero));
    assert!(h.adjacent(&root, &second));
    let e2 = h.parse_vertex("[e2]").unwrap();
    assert_eq!(h.edge_kind(&root, &e2), Some(EdgeRule::ModifyLast));
    assert_eq!(h.vertex_id(&second), "[0;0]");

    let hz = word_graph_hz(3, 3).unwrap();
    let z = hz.parse_vertex("[0;z]").unwrap();
    assert_eq!(hz.edge_kind(&hz.second_word(), &z), Some(EdgeRule::ModifyLast));
    // a zero letter may only be the last one
    assert!(hz.parse_vertex("[0;0;z]").is_err());
    assert!(!hz.is_valid(&Word(vec![])));
}

#[test]
fn matched_pairs() {
    let (a, b) = matched_pair(&GraphSpec::Fan { n: 3 }, &GraphSpec::FanRay { n: 3 });
    assert_eq!((a, b), (GraphSpec::Fan { n: 4 }, GraphSpec::FanRay { n: 3 }));
    let (a, b) = matched_pair(&GraphSpec::Basis { m: 4 }, &GraphSpec::Hn { n: 1, m: 6 });
    assert_eq!(a, GraphSpec::Basis { m: 6 });
    assert!(matches!(b, GraphSpec::Hn { m: 6, .. }));
}

#[test]
fn edge_labels() {
    let g = basis_graph(6).unwrap();
    let group = g.group().clone();
    let o = g.origin();
    let e = |s: &str| group.parse(s).unwrap();
    assert_eq!(edge_label_direct(&g, &o, &e("e4")).unwrap(), 4);
    assert_eq!(edge_label_direct(&g, &o, &e("e2")).unwrap(), 2);
    assert_eq!(edge_label_direct(&g, &e("e3"), &e("e3+e5")).unwrap(), 5);
    assert_eq!(edge_label_intrinsic(&g, &o, &e("e2"), 6, BUDGET).unwrap(), 2);
    assert_eq!(edge_label_intrinsic(&g, &e("e3"), &e("e3+e5"), 6, BUDGET).unwrap(), 5);
    assert!(matches!(
        edge_label_intrinsic(&g, &o, &e("e2"), 5, BUDGET),
        Err(Error::HorizonTooSmall { horizon: 5, needed: 6 })
    ));
    assert!(matches!(edge_label_direct(&g, &o, &e("e2+e3")), Err(Error::NotAnEdge { .. })));
    let h = hypercube_graph(3).unwrap();
    let hs = h.neighbors(&h.origin());
    assert!(matches!(edge_label_direct(&h, &h.origin(), &hs[0]), Err(Error::NotBasisEdge { .. })));

    // Going round the Z/4 cycle is not zigzag-free: 0 and 2e4 have two
    // common neighbours, so the cycle cannot single out label 4.
    assert_eq!(length_two_paths(&g, &o, &e("2e4")), 2);
    assert_ne!(edge_label_intrinsic(&g, &o, &e("e4"), 6, BUDGET).unwrap(), 4);
}

/// The structural label agrees with the coordinate index on every edge
/// near the origin, except for the Z/4 coordinate.
#[test]
fn intrinsic_labels_agree_with_direct_ones() {
    for m in 2..=6u32 {
        let g = basis_graph(m).unwrap();
        let layers = bfs(&g, &g.origin(), Some(3), BUDGET).unwrap();
        let mut seen = HashSet::new();
        for u in layers.layers.iter().flatten() {
            for v in g.neighbors(u) {
                let direct = edge_label_direct(&g, u, &v).unwrap();
                // translation invariance: labels depend only on the step
                let step = g.group().sub(&v, u);
                if direct == 4 || !seen.insert(step) {
                    continue;
                }
                let intrinsic = edge_label_intrinsic(&g, u, &v, m.max(2) as usize, BUDGET).unwrap();
                assert_eq!(intrinsic, direct, "basis:M={m} edge {:?}-{:?}", u, v);
            }
        }
    }
}

fn transitive_surrogate<G: AbelianCayley>(g: &G, rng: &mut ChaCha8Rng) {
    let near: Vec<G::Vertex> = bfs(g, &g.origin(), Some(3), BUDGET).unwrap().layers.concat();
    for _ in 0..20 {
        let a = near.choose(rng).unwrap();
        let b = near.choose(rng).unwrap();
        let ba = ball(g, a, 2, BUDGET).unwrap();
        let bb = ball(g, b, 2, BUDGET).unwrap();
        let iso = rooted_iso(&ba, &bb, SEARCH_BUDGET).unwrap();
        assert!(iso.is_some(), "{}: balls at {} and {}", g.describe(), g.vertex_id(a), g.vertex_id(b));
        // translation by b − a is the expected witness
        let shift = g.sub(b, a);
        for i in 0..ba.len() {
            let v = g.parse_vertex(ba.id(i)).unwrap();
            let image = g.vertex_id(&g.add(&v, &shift));
            assert_eq!(bb.dist(bb.index_of(&image).unwrap()), ba.dist(i));
        }
    }
}

#[test]
fn cayley_graphs_look_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let graphs: Vec<CayleyGraph> = vec![
        basis_graph(5).unwrap(),
        hypercube_graph(4).unwrap(),
        quotient_hn_graph(1, 5).unwrap(),
        basis_graph_z(3).unwrap(),
    ];
    for g in &graphs {
        transitive_surrogate(g, &mut rng);
    }
    transitive_surrogate(&factorial_quotient_graph(4).unwrap(), &mut rng);
    transitive_surrogate(&factorial_graph(3).unwrap(), &mut rng);
    transitive_surrogate(&EtaGraph::new(&"w+1".parse().unwrap(), 3, 4096).unwrap(), &mut rng);
}

/// Paths of length `L ≤ 5` from 0 in `hypercube(N ≤ 6)` whose first step
/// only touches coordinates `n < L` end within distance `L − 1`. Checked on
/// the set of all walk endpoints, which contains every path endpoint.
#[test]
fn hypercube_first_step_bound() {
    for n in 2..=6u32 {
        let g = hypercube_graph(n).unwrap();
        let dist = bfs(&g, &g.origin(), None, BUDGET).unwrap().dist;
        for len in 1..=5usize {
            let mut frontier: BTreeSet<_> = g
                .neighbors(&g.origin())
                .into_iter()
                .filter(|s| {
                    s.0.iter()
                        .zip(g.group().coords())
                        .all(|(x, c)| *x == 0 || (c.index.unwrap() as usize) < len)
                })
                .collect();
            for _ in 1..len {
                frontier = frontier.iter().flat_map(|v| g.neighbors(v)).collect();
            }
            for v in &frontier {
                assert!(dist[v] < len, "N={n} L={len}: {} at distance {}", g.vertex_id(v), dist[v]);
            }
        }
    }
}

proptest! {
    #[test]
    fn group_elements_round_trip(values in prop::collection::vec(-20i64..20, 5)) {
        let g = basis_graph_z(5).unwrap();
        let group = g.group();
        let x = group.reduce(geodometer::gallery::GroupElement(values));
        let text = group.format(&x);
        prop_assert_eq!(group.parse(&text).unwrap(), x.clone());
        prop_assert_eq!(group.add(&x, &group.neg(&x)), group.zero());
    }

    #[test]
    fn factorial_steps_are_symmetric(n in 1u32..6) {
        let g = factorial_graph(n).unwrap();
        let steps: BTreeSet<i64> = g.steps().iter().copied().collect();
        prop_assert!(steps.iter().all(|s| steps.contains(&-s)));
        prop_assert!(!steps.contains(&0));
    }
}
