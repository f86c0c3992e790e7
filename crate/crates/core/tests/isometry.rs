use geodometer::gallery::{basis_graph, fan_graph, hypercube_graph, word_graph_h, FanVertex, GraphSpec, Spoke};
use geodometer::geodesy::max_zigzag_geodesic;
use geodometer::graph::{ball, bfs, ExplicitGraph, ImplicitGraph};
use geodometer::isometry::{
    canonical_form, h_component_analysis, rooted_iso, rule_one_cut_check, weak_iso_specs,
    weak_transitive_check, SEARCH_BUDGET,
};
use geodometer::{Error, RootedBall};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: usize = 1_000_000;

fn spec(s: &str) -> GraphSpec {
    s.parse().unwrap()
}

/// Tries every bijection fixing the root.
fn brute_force_iso(a: &RootedBall, b: &RootedBall) -> bool {
    fn extend(a: &RootedBall, b: &RootedBall, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || a.dist(i) != b.dist(j) {
                continue;
            }
            if (0..i).any(|k| a.is_adjacent(i, k) != b.is_adjacent(j, map[k])) {
                continue;
            }
            used[j] = true;
            map.push(j);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && a.edges().len() == b.edges().len() && {
        let mut used = vec![false; b.len()];
        used[0] = true;
        extend(a, b, &mut vec![0], &mut used)
    }
}

fn relabel(g: &ExplicitGraph, perm: &[usize]) -> ExplicitGraph {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    ExplicitGraph::from_edges(g.len(), &edges, "relabelled").unwrap()
}

#[test]
fn path_end_and_middle_differ() {
    let p = ExplicitGraph::path(3);
    let end = ball(&p, &0, 2, BUDGET).unwrap();
    let mid = ball(&p, &1, 2, BUDGET).unwrap();
    assert_eq!(rooted_iso(&end, &mid, SEARCH_BUDGET).unwrap(), None);
    assert_ne!(canonical_form(&end, SEARCH_BUDGET).unwrap(), canonical_form(&mid, SEARCH_BUDGET).unwrap());
    assert!(rooted_iso(&end, &ball(&p, &2, 2, BUDGET).unwrap(), SEARCH_BUDGET).unwrap().is_some());
}

#[test]
fn basis_unit_balls_agree() {
    let g = basis_graph(4).unwrap();
    let e3 = g.parse_vertex("e3").unwrap();
    let a = ball(&g, &g.origin(), 1, BUDGET).unwrap();
    let b = ball(&g, &e3, 1, BUDGET).unwrap();
    let iso = rooted_iso(&a, &b, SEARCH_BUDGET).unwrap().unwrap();
    assert!(iso.verify(&a, &b));
    assert_eq!(canonical_form(&a, SEARCH_BUDGET).unwrap(), canonical_form(&b, SEARCH_BUDGET).unwrap());
}

/// Relabelled random graphs keep their canonical form, and forms of balls
/// with the same radius agree exactly when brute force finds an isomorphism.
#[test]
fn canonical_forms_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut forms = Vec::new();
    for _ in 0..60 {
        let n = rng.gen_range(1..=7);
        let g = ExplicitGraph::random_connected(n, rng.gen_range(0.0..0.5), &mut rng);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let o = rng.gen_range(0..n);
        let r = rng.gen_range(0..4);
        let a = ball(&g, &o, r, BUDGET).unwrap();
        let b = ball(&relabel(&g, &perm), &perm[o], r, BUDGET).unwrap();
        let iso = rooted_iso(&a, &b, SEARCH_BUDGET).unwrap().unwrap();
        assert!(iso.verify(&a, &b));
        let form = canonical_form(&a, SEARCH_BUDGET).unwrap();
        assert_eq!(form, canonical_form(&b, SEARCH_BUDGET).unwrap());
        forms.push((a, form));
    }
    for (a, fa) in &forms {
        for (b, fb) in forms.iter().filter(|(b, _)| b.radius() == a.radius()) {
            let expected = brute_force_iso(a, b);
            assert_eq!(fa == fb, expected);
            assert_eq!(rooted_iso(a, b, SEARCH_BUDGET).unwrap().is_some(), expected);
        }
    }
}

#[test]
fn weak_transitivity() {
    let g = hypercube_graph(4).unwrap();
    let region: Vec<_> = ["0", "e2", "e2+e3+e4"].iter().map(|s| g.parse_vertex(s).unwrap()).collect();
    let report = weak_transitive_check(&g, &region, 2, BUDGET, SEARCH_BUDGET).unwrap();
    assert!(report.passed);
    assert_eq!(report.witnesses.len(), 3);

    let f = fan_graph(3, false).unwrap();
    let spoke = FanVertex::Spoke {
        k: 1,
        n: Spoke::Finite(1),
    };
    let report = weak_transitive_check(&f, &[FanVertex::Hub, spoke], 1, BUDGET, SEARCH_BUDGET).unwrap();
    assert!(!report.passed);
    assert_eq!(report.counterexample, Some(("0".into(), "(1,1)".into())));
}

#[test]
fn weak_isomorphism() {
    let (_, _, r) = weak_iso_specs(&spec("fan:N=2"), &spec("fanray:N=2"), 2, BUDGET, SEARCH_BUDGET).unwrap();
    assert_eq!(r.k, 2);
    assert!(r.downward_closed);

    let (_, _, r) = weak_iso_specs(&spec("basis:M=5"), &spec("basis:M=5"), 3, BUDGET, SEARCH_BUDGET).unwrap();
    assert_eq!((r.k, r.local_distance), (3, 0.125));

    let (_, _, r) = weak_iso_specs(&spec("basis:M=5"), &spec("hn:N=1,M=5"), 2, BUDGET, SEARCH_BUDGET).unwrap();
    assert!(r.k >= 1);
    let (_, _, s) = weak_iso_specs(&spec("hn:N=1,M=5"), &spec("basis:M=5"), 2, BUDGET, SEARCH_BUDGET).unwrap();
    assert_eq!(r, s);
}

#[test]
fn word_graph_components() {
    let horizon = 6;
    let h = word_graph_h(5, 3).unwrap();
    let a = h_component_analysis(&h, &h.root_word(), horizon, BUDGET).unwrap();
    let b = h_component_analysis(&h, &h.second_word(), horizon, BUDGET).unwrap();

    // the components are copies of the letter graphs
    let first = h.first_letters();
    let later = h.later_letters();
    assert_eq!(a.ball_size, bfs(first, &first.origin(), Some(horizon), BUDGET).unwrap().len());
    assert_eq!(b.ball_size, bfs(later, &later.origin(), Some(horizon), BUDGET).unwrap().len());
    assert_eq!(a.max_zigzag, max_zigzag_geodesic(first, &first.origin(), horizon, BUDGET).unwrap());
    assert_eq!(b.max_zigzag, max_zigzag_geodesic(later, &later.origin(), horizon, BUDGET).unwrap());

    assert_eq!(a.max_zigzag, 2);
    assert!(a.bounded);
    assert_eq!(b.max_zigzag, horizon);
    assert!(!b.bounded);

    assert!(rule_one_cut_check(&h, &h.root_word(), &h.second_word(), horizon, BUDGET).unwrap());
    let e2 = h.parse_vertex("[e2]").unwrap();
    assert!(matches!(
        rule_one_cut_check(&h, &h.root_word(), &e2, horizon, BUDGET),
        Err(Error::NotAnEdge { .. })
    ));
}

#[test]
fn search_budget_is_enforced() {
    let g = hypercube_graph(5).unwrap();
    let b = ball(&g, &g.origin(), 2, BUDGET).unwrap();
    assert!(canonical_form(&b, 1).unwrap_err().is_budget());
}
