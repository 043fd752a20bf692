//! Randomized invariants for the graph core, the solvers, and the
//! enumeration code, checked against naive definitional re-computations.

use proptest::prelude::*;

use ctdom::domination::{enumerate_dom_sets, gamma, is_dom_set, witnesses, DomKind, SolveError, SolverBudget};
use ctdom::graph::Graph;
use ctdom::patterns::{find_pattern, Pattern};
use ctdom::VertexSet;

fn budget() -> SolverBudget {
    SolverBudget::default()
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, 0usize..3, any::<u64>()).prop_map(|(n, pi, seed)| {
        let p = [0.25, 0.4, 0.6][pi];
        Graph::random_connected(n, p, seed).unwrap()
    })
}

fn subset_from_mask(g: &Graph, mask: u64) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    for v in 0..g.vertex_count() {
        if mask >> v & 1 == 1 {
            d.insert(v);
        }
    }
    d
}

fn naive_is_dom_set(g: &Graph, d: &VertexSet, kind: DomKind) -> bool {
    let dominating = match kind {
        DomKind::Total => (0..g.vertex_count()).all(|v| !g.neighbors(v).intersection(d).is_empty()),
        DomKind::Semitotal => (0..g.vertex_count())
            .all(|v| d.contains(v) || !g.neighbors(v).intersection(d).is_empty()),
    };
    if !dominating {
        return false;
    }
    match kind {
        DomKind::Total => true,
        DomKind::Semitotal => d.iter().all(|x| {
            d.iter().any(|y| y != x && matches!(g.distance(x, y), Some(dd) if dd <= 2))
        }),
    }
}

/// All k-subsets of 0..n in ascending element-lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

proptest! {
    #[test]
    fn contraction_drops_one_vertex_and_merged_edges(g in arb_graph(3, 9)) {
        let n = g.vertex_count();
        let m = g.edge_count();
        for (u, v) in g.edges() {
            let h = g.contract_edge(u, v).unwrap();
            prop_assert_eq!(h.vertex_count(), n - 1);
            let common = g.neighbors(u).intersection(&g.neighbors(v)).len();
            prop_assert_eq!(h.edge_count(), m - 1 - common);
            for (a, b) in h.edges() {
                prop_assert_ne!(a, b, "contraction must not leave loops");
                prop_assert!(h.has_edge(b, a), "adjacency must stay symmetric");
            }
        }
    }

    #[test]
    fn distances_obey_metric_axioms(g in arb_graph(3, 9)) {
        let n = g.vertex_count();
        for u in 0..n {
            prop_assert_eq!(g.distance(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(g.distance(u, v), g.distance(v, u));
                prop_assert_eq!(g.distance(u, v) == Some(1), g.has_edge(u, v));
                for w in 0..n {
                    let (duv, dvw, duw) = (
                        g.distance(u, v).unwrap(),
                        g.distance(v, w).unwrap(),
                        g.distance(u, w).unwrap(),
                    );
                    prop_assert!(duw <= duv + dvw, "triangle inequality");
                }
            }
        }
    }

    #[test]
    fn four_subdivision_counts_and_paths(g in arb_graph(3, 7)) {
        let (h, map) = g.four_subdivide().unwrap();
        let n = g.vertex_count();
        let m = g.edge_count();
        prop_assert_eq!(h.vertex_count(), n + 4 * m);
        prop_assert_eq!(h.edge_count(), 5 * m);
        for (u, v) in g.edges() {
            let [e1, e2, e3, e4] = map.path_of(u, v).unwrap();
            prop_assert!(!h.has_edge(u, v), "original edge must be gone");
            for (a, b) in [(u, e1), (e1, e2), (e2, e3), (e3, e4), (e4, v)] {
                prop_assert!(h.has_edge(a, b), "replacement path must be wired through");
            }
            prop_assert_eq!(h.degree(e1), 2);
            prop_assert_eq!(h.degree(e2), 2);
            prop_assert_eq!(h.degree(e3), 2);
            prop_assert_eq!(h.degree(e4), 2);
        }
    }

    #[test]
    fn induced_subgraph_on_everything_is_identity(g in arb_graph(3, 9)) {
        let (h, mapping) = g.induced_subgraph(&g.vertex_set());
        prop_assert_eq!(h.vertex_count(), g.vertex_count());
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for a in 0..h.vertex_count() {
            for b in 0..h.vertex_count() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(mapping[a], mapping[b]));
            }
        }
    }

    #[test]
    fn double_path_pattern_implies_single(
        g in arb_graph(4, 9),
        mask in any::<u64>(),
    ) {
        let d = subset_from_mask(&g, mask);
        if find_pattern(&g, &d, Pattern::TwoP3).is_some() {
            prop_assert!(find_pattern(&g, &d, Pattern::P3).is_some());
        }
        if find_pattern(&g, &d, Pattern::P4).is_some() {
            prop_assert!(find_pattern(&g, &d, Pattern::P3).is_some());
        }
    }

    #[test]
    fn dom_set_check_matches_definition(
        g in arb_graph(3, 9),
        mask in any::<u64>(),
    ) {
        let d = subset_from_mask(&g, mask);
        for kind in [DomKind::Total, DomKind::Semitotal] {
            prop_assert_eq!(
                is_dom_set(&g, &d, kind),
                naive_is_dom_set(&g, &d, kind),
                "kind {:?}, set {:?}", kind, d.iter().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn witness_sets_match_definition(
        g in arb_graph(3, 9),
        mask in any::<u64>(),
    ) {
        let d = subset_from_mask(&g, mask);
        for x in 0..g.vertex_count() {
            let got = witnesses(&g, &d, x);
            if !d.contains(x) {
                prop_assert_eq!(got, Err(SolveError::NotInSet(x)));
                continue;
            }
            let want: Vec<usize> = d
                .iter()
                .filter(|&y| y != x && matches!(g.distance(x, y), Some(dd) if dd <= 2))
                .collect();
            prop_assert_eq!(got.unwrap().iter().collect::<Vec<_>>(), want);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_gamma_matches_enumerative_minimum(g in arb_graph(3, 8)) {
        for kind in [DomKind::Total, DomKind::Semitotal] {
            let enumerated = (1..=g.vertex_count())
                .find(|&k| enumerate_dom_sets(&g, kind, k).next().is_some());
            let solved = gamma(&g, kind, budget()).unwrap().value;
            prop_assert_eq!(enumerated, Some(solved), "kind {:?}", kind);
        }
    }

    #[test]
    fn enumeration_is_exactly_the_valid_sets_in_order(
        g in arb_graph(3, 7),
        k in 1usize..=5,
    ) {
        for kind in [DomKind::Total, DomKind::Semitotal] {
            let want: Vec<Vec<usize>> = k_subsets(g.vertex_count(), k)
                .into_iter()
                .filter(|s| {
                    let mut d = VertexSet::EMPTY;
                    for &v in s {
                        d.insert(v);
                    }
                    naive_is_dom_set(&g, &d, kind)
                })
                .collect();
            let got: Vec<Vec<usize>> = enumerate_dom_sets(&g, kind, k)
                .map(|d| d.iter().collect())
                .collect();
            prop_assert_eq!(got, want, "kind {:?}", kind);
        }
    }
}
