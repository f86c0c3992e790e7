use std::collections::HashMap;

use geodometer::gallery::{basis_graph, basis_graph_z, fan_graph, FanVertex, IntegerCayley, Spoke};
use geodometer::geodesy::{
    erasure_rank, fold_geodesic, generalized_diameter, generalized_radius, is_zigzag_free,
    label_all, label_ball, max_zigzag_geodesic, pset, pset_member, pset_progression,
};
use geodometer::graph::{ball, bfs, ExplicitGraph, GeodPath, ImplicitGraph};
use geodometer::{Error, ExtOrdinal};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: usize = 1_000_000;

fn nat(n: u64) -> ExtOrdinal {
    ExtOrdinal::nat(n)
}

fn spoke(k: u32, n: u32) -> FanVertex {
    FanVertex::Spoke {
        k,
        n: Spoke::Finite(n),
    }
}

#[test]
fn fan_labels() {
    let g = fan_graph(3, false).unwrap();
    let labels = label_all(&g, &FanVertex::Hub, BUDGET).unwrap();
    assert_eq!(labels.get(&spoke(3, 3)), Some(&nat(0)));
    assert_eq!(labels.get(&spoke(2, 3)), Some(&nat(1)));
    assert_eq!(labels.get(&spoke(1, 3)), Some(&nat(2)));
    assert_eq!(labels.root(), &nat(3));
    // erasure settles the same values
    let e = erasure_rank(&g, &FanVertex::Hub, 3, BUDGET, BUDGET).unwrap();
    for (p, rank) in e.ranks() {
        let end = p.vertices.last().unwrap();
        let expected = labels.get(end).unwrap().as_natural().unwrap();
        if p.is_empty() {
            assert_eq!(rank, 3);
        } else {
            // a path is erased once its last vertex has no further arrows
            assert_eq!(rank, expected);
        }
    }
}

#[test]
fn small_radii() {
    let single = ExplicitGraph::path(1);
    assert_eq!(label_all(&single, &0, BUDGET).unwrap().root(), &nat(0));
    assert_eq!(generalized_radius(&ExplicitGraph::path(3), &0, BUDGET).unwrap(), nat(2));
    let k4 = ExplicitGraph::complete(4);
    for v in 0..4 {
        assert_eq!(generalized_radius(&k4, &v, BUDGET).unwrap(), nat(1));
    }
    assert_eq!(generalized_diameter(&k4, BUDGET).unwrap(), nat(1));
}

#[test]
fn fan_radius_off_the_hub() {
    for n in 1..=6u32 {
        let g = fan_graph(n, false).unwrap();
        let o = spoke(1, n);
        let radius = generalized_radius(&g, &o, BUDGET).unwrap();
        let erased = erasure_rank(&g, &o, 2 * n as usize, BUDGET, BUDGET).unwrap();
        assert_eq!(radius, erased.radius);
        let ecc = bfs(&g, &o, None, BUDGET).unwrap().depth() as u64;
        assert_eq!(radius, nat(ecc));
        assert_eq!(generalized_radius(&g, &FanVertex::Hub, BUDGET).unwrap(), nat(n as u64));
    }
}

#[test]
fn erasure_examples() {
    let g = fan_graph(2, false).unwrap();
    let e = erasure_rank(&g, &FanVertex::Hub, 2, BUDGET, BUDGET).unwrap();
    assert_eq!(e.radius, nat(2));
    let g = ExplicitGraph::path(2);
    let ranks = erasure_rank(&g, &0, 1, BUDGET, BUDGET).unwrap().ranks();
    assert_eq!(ranks, vec![(GeodPath::new(vec![0]), 1), (GeodPath::new(vec![0, 1]), 0)]);

    // maximal geodesics of fan_3 are erased first
    let g = fan_graph(3, false).unwrap();
    let e = erasure_rank(&g, &FanVertex::Hub, 3, BUDGET, BUDGET).unwrap();
    for (p, rank) in e.ranks() {
        let last = p.vertices.last().unwrap();
        let maximal = matches!(last, FanVertex::Spoke { k, n: Spoke::Finite(n) } if k == n);
        assert_eq!(rank == 0, maximal, "{p:?}");
    }
    assert!(erasure_rank(&g, &FanVertex::Hub, 3, 5, BUDGET).unwrap_err().is_budget());
}

#[test]
fn labels_on_balls_refuse_clipping() {
    let g = fan_graph(3, false).unwrap();
    let full = ball(&g, &FanVertex::Hub, 4, BUDGET).unwrap();
    let labels = label_ball(&full).unwrap();
    assert_eq!(labels[0], nat(3));
    let clipped = ball(&g, &FanVertex::Hub, 2, BUDGET).unwrap();
    assert!(matches!(label_ball(&clipped), Err(Error::ClippedBall { radius: 2 })));
}

#[test]
fn diameter_matches_bfs_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let n = rng.gen_range(1..=10);
        let g = ExplicitGraph::random_connected(n, rng.gen_range(0.0..0.5), &mut rng);
        let mut diam = 0;
        for v in 0..n {
            let ecc = bfs(&g, &v, None, BUDGET).unwrap().depth() as u64;
            diam = diam.max(ecc);
            let radius = generalized_radius(&g, &v, BUDGET).unwrap();
            assert_eq!(radius, nat(ecc));
            assert_eq!(erasure_rank(&g, &v, n, BUDGET, BUDGET).unwrap().radius, radius);
        }
        assert_eq!(generalized_diameter(&g, BUDGET).unwrap(), nat(diam));
    }
}

#[test]
fn zigzag_examples() {
    let g = basis_graph(5).unwrap();
    let group = g.group().clone();
    let e = |s: &str| group.parse(s).unwrap();
    let o = g.origin();
    let p = GeodPath::new(vec![o.clone(), e("e2"), e("e2+e3")]);
    assert!(!is_zigzag_free(&g, &p).unwrap());
    let p = GeodPath::new(vec![o.clone(), e("e5"), e("2e5")]);
    assert!(is_zigzag_free(&g, &p).unwrap());
    // in Z/4 the antipode 2e4 is also reached through -e4
    let p = GeodPath::new(vec![o.clone(), e("e4"), e("2e4")]);
    assert!(!is_zigzag_free(&g, &p).unwrap());
    assert!(is_zigzag_free(&g, &GeodPath::new(vec![o.clone(), e("e3")])).unwrap());

    assert_eq!(max_zigzag_geodesic(&g, &o, 6, BUDGET).unwrap(), 2);
    let gz = basis_graph_z(5).unwrap();
    assert_eq!(max_zigzag_geodesic(&gz, &gz.origin(), 6, BUDGET).unwrap(), 6);
    assert_eq!(max_zigzag_geodesic(&ExplicitGraph::cycle(6), &0, 10, BUDGET).unwrap(), 3);
}

/// Every zigzag-free walk of length up to 4 from 0 in basis(5) moves along
/// a single coordinate.
#[test]
fn zigzag_free_paths_stay_on_one_axis() {
    let g = basis_graph(5).unwrap();
    let mut stack = vec![vec![g.origin()]];
    let mut checked = 0;
    while let Some(walk) = stack.pop() {
        if walk.len() >= 2 {
            let p = GeodPath::new(walk.clone());
            if !is_zigzag_free(&g, &p).unwrap() {
                continue;
            }
            checked += 1;
            let axes: std::collections::BTreeSet<usize> = walk
                .windows(2)
                .map(|w| g.group().sub(&w[1], &w[0]).0.iter().position(|&x| x != 0).unwrap())
                .collect();
            assert_eq!(axes.len(), 1, "{walk:?}");
        }
        if walk.len() == 5 {
            continue;
        }
        for w in g.neighbors(walk.last().unwrap()) {
            let mut next = walk.clone();
            next.push(w);
            stack.push(next);
        }
    }
    assert!(checked > 0);
}

#[test]
fn fold_examples() {
    let line = IntegerCayley::new(None, &[1], "Z").unwrap();
    let k = fold_geodesic(&line, &GeodPath::new(vec![0, 1, 2, 3, 4])).unwrap();
    assert_eq!((k.base, k.vertices.clone()), (-2, vec![-2, -1, 0, 1, 2]));
    let k = fold_geodesic(&line, &GeodPath::new(vec![7])).unwrap();
    assert_eq!((k.base, k.vertices.clone()), (0, vec![0]));

    let g = basis_graph(5).unwrap();
    let group = g.group().clone();
    let e = |s: &str| group.parse(s).unwrap();
    let gamma = GeodPath::new(vec![g.origin(), e("e5"), e("e4+e5")]);
    let k = fold_geodesic(&g, &gamma).unwrap();
    assert_eq!(k.base, -1);
    assert_eq!(k.at(-1), Some(&e("-e4")));
    assert_eq!(k.at(0), Some(&g.origin()));
    assert_eq!(k.at(1), Some(&e("e5")));
    assert!(geodometer::graph::is_geodesic(&g, &k, BUDGET).unwrap());
    assert!(matches!(
        fold_geodesic(&g, &GeodPath::new(vec![g.origin(), e("e5")])),
        Err(Error::InvalidPath(_))
    ));
}

#[test]
fn path_set_examples() {
    let g = basis_graph(7).unwrap();
    let ray = pset::witness_ray_prefix(&g, 5).unwrap();
    let labels = pset::path_labels(&g, &ray).unwrap();
    assert_eq!(labels, vec![2, 3, 4, 5, 6]);
    assert!(pset::pset_member_path(&g, &ray).unwrap());
    assert_eq!(pset_progression(&labels[..4], 0).unwrap(), Some((1, 2)));

    let group = g.group().clone();
    let p = GeodPath::new(vec![g.origin(), group.parse("e3").unwrap(), group.parse("e3+e5").unwrap()]);
    assert!(pset::pset_member_path(&g, &p).unwrap());
    assert!(!pset_member(&[3, 5, 6]));
    assert!(!pset_member(&[3, 4, 3, 4]));
    assert_eq!(pset_progression(&[5, 4, 3], 0).unwrap(), Some((-1, 5)));
    assert_eq!(pset_progression(&[2, 3, 2], 0).unwrap(), None);
    assert!(pset_progression(&[2, 3], 0).is_err());
    assert!(pset::witness_ray_prefix(&basis_graph(4).unwrap(), 4).is_err());
}

/// Members found by the search are closed under reversal, and an increasing
/// member starting at label `b` sits on the line `N_k = k + b`.
#[test]
fn path_set_members_in_basis_five() {
    let g = basis_graph(5).unwrap();
    let members = pset::pset_members_from(&g, &g.origin(), 6, 1_000_000).unwrap();
    assert!(!members.is_empty());
    let mut by_labels: HashMap<Vec<u32>, usize> = HashMap::new();
    for p in &members {
        let labels = pset::path_labels(&g, p).unwrap();
        let mut rev = labels.clone();
        rev.reverse();
        assert!(pset_member(&rev));
        *by_labels.entry(labels.clone()).or_default() += 1;
        if labels.len() >= 3 {
            let (a, b) = pset_progression(&labels, 0).unwrap().unwrap();
            if a == 1 {
                assert_eq!(b, labels[0] as i64);
                assert!(b >= 2);
                // indexing each edge by its own label removes the intercept
                assert_eq!(pset_progression(&labels, b).unwrap(), Some((1, 0)));
            }
        }
    }
    assert!(by_labels.keys().all(|l| l.iter().all(|&x| (2..=5).contains(&x))));
}

proptest! {
    #[test]
    fn fold_preserves_endpoint_difference(steps in prop::collection::vec(prop::sample::select(vec![-3i64, -1, 1, 3]), 0..6)) {
        let g = IntegerCayley::new(None, &[1, 3], "Z").unwrap();
        let mut walk = vec![0i64];
        for s in &steps {
            walk.push(walk.last().unwrap() + s);
        }
        if walk.len() % 2 == 0 {
            walk.pop();
        }
        let gamma = GeodPath::new(walk.clone());
        let k = fold_geodesic(&g, &gamma).unwrap();
        prop_assert_eq!(k.vertices.last().unwrap() - k.vertices[0], walk.last().unwrap() - walk[0]);
        prop_assert_eq!(k.at(0), Some(&0));
    }

    #[test]
    fn membership_is_reversal_invariant(labels in prop::collection::vec(2u32..8, 0..8)) {
        let mut rev = labels.clone();
        rev.reverse();
        prop_assert_eq!(pset_member(&labels), pset_member(&rev));
    }
}
