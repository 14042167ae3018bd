//! Randomized invariants across the whole crate: structural graph laws, the
//! pruning pipeline's soundness, agreement of the three miners, and the
//! correlation math. Anything that must hold for *every* graph lives here;
//! fixture-specific expectations stay in the unit tests.

use proptest::prelude::*;

use holeminer_core::graph::{load_edge_list, DirectedGraph, GraphBuilder, NodeId, NodeSet};
use holeminer_core::mine::{
    mine, mine_brute_force, mine_iblackhole, mine_iblackhole_dc, Algorithm, MiningConfig,
};
use holeminer_core::pattern::{
    boundary_weights, is_simplified_blackhole, is_simplified_volcano, satisfies_ratio, PatternKind,
};
use holeminer_core::prune::{candidate_list, final_list, potential_list, prune_level};
use holeminer_core::stock::{build_stock_graph, lagged_correlation, movements, PriceMatrix};
use holeminer_core::synth::er_digraph;

/// Random graph with arbitrary weights and possibly isolated nodes. Raw edge
/// endpoints are reduced modulo the node count, so every generated case is
/// valid by construction.
fn arb_graph() -> impl Strategy<Value = DirectedGraph> {
    (1usize..10, prop::collection::vec((0u32..10, 0u32..10, 1u64..100), 0..25)).prop_map(
        |(n, raw_edges)| {
            let mut b = GraphBuilder::new();
            for i in 0..n {
                b.intern(&format!("n{i}"));
            }
            for (s, d, w) in raw_edges {
                let s = NodeId(s % n as u32);
                let d = NodeId(d % n as u32);
                if s != d {
                    b.add_edge(s, d, w as f64 / 4.0);
                }
            }
            b.build().0
        },
    )
}

/// A graph plus a nonempty subset of its nodes.
fn arb_graph_and_set() -> impl Strategy<Value = (DirectedGraph, NodeSet)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.node_count();
        let set = prop::collection::btree_set(0..n as u32, 1..=n).prop_map(|ids| {
            ids.into_iter().map(NodeId).collect::<NodeSet>()
        });
        (Just(g), set)
    })
}

fn seeded_er() -> impl Strategy<Value = DirectedGraph> {
    (4usize..12, 0.05f64..0.35, any::<u64>())
        .prop_map(|(n, p, seed)| er_digraph(n, p, seed))
}

proptest! {
    #[test]
    fn reversing_twice_restores_the_graph(g in arb_graph()) {
        prop_assert_eq!(g.reverse().reverse(), g);
    }

    #[test]
    fn reversal_swaps_degrees(g in arb_graph()) {
        let r = g.reverse();
        for v in 0..g.node_count() {
            let v = NodeId(v as u32);
            prop_assert_eq!(g.out_degree(v).unwrap(), r.in_degree(v).unwrap());
            prop_assert_eq!(g.in_degree(v).unwrap(), r.out_degree(v).unwrap());
        }
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph()) {
        let serialized = g.to_edge_list();
        let (reloaded, report) = load_edge_list(serialized.as_bytes()).unwrap();
        prop_assert_eq!(report.self_loops_dropped, 0);
        prop_assert_eq!(report.duplicates_collapsed, 0);
        // Same labeled structure, possibly renumbered ids.
        let canon = |g: &DirectedGraph| {
            let mut labels: Vec<String> = (0..g.node_count())
                .map(|v| g.label(NodeId(v as u32)).to_string())
                .collect();
            labels.sort();
            let mut edges: Vec<(String, String, String)> = g
                .edges()
                .map(|e| {
                    (
                        g.label(e.src).to_string(),
                        g.label(e.dst).to_string(),
                        format!("{}", e.weight),
                    )
                })
                .collect();
            edges.sort();
            (labels, edges)
        };
        prop_assert_eq!(canon(&reloaded), canon(&g));
        // And the text form is a fixed point.
        prop_assert_eq!(reloaded.to_edge_list(), serialized);
    }

    #[test]
    fn closures_are_transitively_closed(g in arb_graph()) {
        for v in 0..g.node_count() {
            let c = g.closure(NodeId(v as u32)).unwrap();
            for u in c.iter() {
                let cu = g.closure(u).unwrap();
                prop_assert!(cu.iter().all(|w| c.contains(w)),
                    "closure({u}) leaks outside closure({v})");
            }
        }
    }

    #[test]
    fn weak_components_partition_the_nodes(g in arb_graph()) {
        let comps = g.weak_components();
        let mut seen = vec![false; g.node_count()];
        for comp in &comps {
            prop_assert!(g.is_weakly_connected(comp).unwrap());
            for v in comp.iter() {
                prop_assert!(!seen[v.index()], "node {v} in two components");
                seen[v.index()] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        // Maximality: no edge joins two different components.
        for e in g.edges() {
            let home = |x: NodeId| comps.iter().position(|c| c.contains(x)).unwrap();
            prop_assert_eq!(home(e.src), home(e.dst));
        }
    }

    #[test]
    fn boundary_weights_dualize_under_reversal((g, set) in arb_graph_and_set()) {
        let w = boundary_weights(&g, &set).unwrap();
        let wr = boundary_weights(&g.reverse(), &set).unwrap();
        prop_assert_eq!(w.in_weight, wr.out_weight);
        prop_assert_eq!(w.out_weight, wr.in_weight);
    }

    #[test]
    fn volcano_test_equals_blackhole_test_on_reversal((g, set) in arb_graph_and_set()) {
        prop_assert_eq!(
            is_simplified_volcano(&g, &set).unwrap(),
            is_simplified_blackhole(&g.reverse(), &set).unwrap()
        );
    }

    #[test]
    fn simplified_blackholes_satisfy_any_ratio((g, set) in arb_graph_and_set()) {
        if is_simplified_blackhole(&g, &set).unwrap() {
            let w = boundary_weights(&g, &set).unwrap();
            prop_assert_eq!(w.out_weight, 0.0);
            // With inflow the ratio is infinite; without, the set is merely
            // isolated and the ratio form rejects it.
            if w.in_weight > 0.0 {
                for theta in [0.35, 1.0, 1e6] {
                    prop_assert!(satisfies_ratio(&g, &set, PatternKind::Blackhole, theta).unwrap());
                }
            }
        }
    }

    #[test]
    fn potential_lists_grow_with_size(g in arb_graph()) {
        for size in 1..6usize {
            let small = potential_list(&g, size).unwrap();
            let large = potential_list(&g, size + 1).unwrap();
            for v in 0..g.node_count() {
                prop_assert!(!small[v] || large[v]);
            }
        }
    }

    #[test]
    fn candidate_lists_grow_and_carrying_changes_nothing(g in arb_graph()) {
        let mut previous: Option<Vec<bool>> = None;
        for size in 1..=5usize {
            let potential = potential_list(&g, size).unwrap();
            let (fresh, _) = candidate_list(&g, &potential, None);
            let (carried, _) = candidate_list(&g, &potential, previous.as_deref());
            prop_assert_eq!(&fresh, &carried, "carrying altered the fixed point at {}", size);
            if let Some(prev) = &previous {
                for v in 0..g.node_count() {
                    prop_assert!(!prev[v] || fresh[v], "candidate list shrank at {}", size);
                }
            }
            previous = Some(fresh);
        }
    }

    #[test]
    fn candidate_lists_are_fixed_points(g in arb_graph()) {
        for size in 1..=4usize {
            let potential = potential_list(&g, size).unwrap();
            let (cands, _) = candidate_list(&g, &potential, None);
            for v in 0..g.node_count() {
                if cands[v] {
                    for &(s, _) in g.successors(NodeId(v as u32)) {
                        prop_assert!(cands[s.index()]);
                    }
                }
            }
        }
    }

    #[test]
    fn final_lists_keep_exactly_the_small_closures(g in arb_graph()) {
        for size in 1..=4usize {
            let potential = potential_list(&g, size).unwrap();
            let (cands, _) = candidate_list(&g, &potential, None);
            let (finals, _) = final_list(&g, size, &cands).unwrap();
            for (v, &kept) in finals.iter().enumerate() {
                let expected = g.closure(NodeId(v as u32)).unwrap().len() < size;
                prop_assert_eq!(kept, expected,
                    "node {} at size {}: finals disagree with closure size", v, size);
            }
        }
    }

    #[test]
    fn emitted_patterns_are_blackholes_of_exact_size(g in arb_graph()) {
        for size in 1..=4usize {
            let level = prune_level(&g, size, None).unwrap();
            for p in &level.emitted {
                prop_assert_eq!(p.len(), size);
                prop_assert!(is_simplified_blackhole(&g, p).unwrap());
            }
        }
    }

    #[test]
    fn every_closure_is_a_blackhole(g in arb_graph()) {
        for v in 0..g.node_count() {
            let c = g.closure(NodeId(v as u32)).unwrap();
            prop_assert!(is_simplified_blackhole(&g, &c).unwrap(),
                "closure of {} is not a blackhole", v);
        }
    }

    #[test]
    fn miners_agree_on_random_graphs(g in seeded_er()) {
        let n = 4.min(g.node_count());
        let bf = mine_brute_force(&g, n, None).unwrap();
        let ib = mine_iblackhole(&g, n).unwrap();
        let dc = mine_iblackhole_dc(&g, n).unwrap();
        prop_assert!(bf.patterns_eq(&ib));
        prop_assert!(bf.patterns_eq(&dc));
    }

    #[test]
    fn mined_volcanoes_pass_the_direct_test(g in seeded_er()) {
        let config = MiningConfig::new(Algorithm::IBlackholeDc, PatternKind::Volcano, 3);
        let result = mine(&g, &config).unwrap();
        for sets in result.patterns_by_size.values() {
            for s in sets {
                prop_assert!(is_simplified_volcano(&g, s).unwrap());
            }
        }
    }

    #[test]
    fn correlations_stay_in_unit_range(
        x in prop::collection::vec(any::<bool>(), 3..40),
        y_seed in prop::collection::vec(any::<bool>(), 3..40),
        lag in 1usize..5,
    ) {
        let len = x.len().min(y_seed.len());
        prop_assume!(lag < len);
        let r = lagged_correlation(&x[..len], &y_seed[..len], lag).unwrap();
        if let Some(r) = r {
            prop_assert!((-1.0..=1.0).contains(&r), "correlation {} out of range", r);
        }
    }

    #[test]
    fn lagged_self_copy_is_perfectly_correlated(
        x in prop::collection::vec(any::<bool>(), 4..40),
        lag in 1usize..4,
    ) {
        prop_assume!(lag < x.len());
        // y repeats x `lag` steps later.
        let mut y = vec![false; lag];
        y.extend_from_slice(&x[..x.len() - lag]);
        let r = lagged_correlation(&x, &y, lag).unwrap();
        // None only when the overlapping window of x is constant.
        if let Some(r) = r {
            prop_assert!((r - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn raising_the_threshold_never_adds_edges(
        seed in any::<u64>(),
        instruments in 3usize..8,
        days in 6usize..20,
    ) {
        use rand::Rng as _;
        use rand::SeedableRng as _;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let tickers: Vec<String> = (0..instruments).map(|i| format!("S{i}")).collect();
        let prices: Vec<Vec<f64>> = (0..instruments)
            .map(|_| {
                let mut p = vec![100.0];
                for _ in 1..days {
                    let last = *p.last().unwrap();
                    p.push(if rng.random_bool(0.5) { last * 1.01 } else { last * 0.99 });
                }
                p
            })
            .collect();
        let m = PriceMatrix::new(tickers, prices).unwrap();
        let loose = build_stock_graph(&m, 0.2, 1).unwrap();
        let strict = build_stock_graph(&m, 0.6, 1).unwrap();
        let loose_edges: std::collections::BTreeSet<(NodeId, NodeId)> =
            loose.edges().map(|e| (e.src, e.dst)).collect();
        for e in strict.edges() {
            prop_assert!(loose_edges.contains(&(e.src, e.dst)));
        }
        // Movement vectors always lose exactly one day.
        prop_assert_eq!(movements(&m).len(), days - 1);
    }
}
