//! The three miners. All of them find exactly the same patterns; they differ
//! in how much of the subset lattice they refuse to look at.
//!
//! - [`mine_brute_force`] scores every size-`i` subset of the whole node set
//!   (or of an explicit scope). It exists as the oracle the other two are
//!   held to, and as the only choice when patterns need not be connected to
//!   anything in particular.
//! - [`mine_iblackhole`] runs the pruning pipeline first and enumerates
//!   subsets of the usually far smaller final list.
//! - [`mine_iblackhole_dc`] additionally splits the final list into weak
//!   components and enumerates connected subsets inside each component
//!   independently; a blackhole is weakly connected, so it can never span
//!   two components. Components can be searched in parallel.
//!
//! Volcano requests run the same machinery on the reversed graph.
//!
//! Every size level first estimates how many candidate sets enumeration
//! would visit and refuses with [`Error::SearchSpaceTooLarge`] when that
//! exceeds the configured guard limit, rather than silently running for
//! hours.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, NodeSet};
use crate::pattern::{self, PatternKind};
use crate::prune::{prune_level, PruneStats};

/// Default ceiling on candidate sets per size level.
pub const DEFAULT_GUARD_LIMIT: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    BruteForce,
    IBlackhole,
    IBlackholeDc,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::BruteForce => "brute",
            Algorithm::IBlackhole => "iblackhole",
            Algorithm::IBlackholeDc => "iblackhole-dc",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "brute" => Ok(Algorithm::BruteForce),
            "iblackhole" => Ok(Algorithm::IBlackhole),
            "iblackhole-dc" => Ok(Algorithm::IBlackholeDc),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// Knobs for [`mine`]. The per-algorithm entry points use the defaults:
/// serial execution, guard limit of one billion sets per level.
#[derive(Debug, Clone)]
pub struct MiningConfig {
    pub algorithm: Algorithm,
    pub kind: PatternKind,
    /// Patterns of every size from 1 through this are mined.
    pub max_size: usize,
    /// Search weak components in parallel (divide-and-conquer miner only).
    pub parallel: bool,
    /// Per-level ceiling on enumerated candidate sets.
    pub guard_limit: u64,
}

impl MiningConfig {
    pub fn new(algorithm: Algorithm, kind: PatternKind, max_size: usize) -> Self {
        MiningConfig {
            algorithm,
            kind,
            max_size,
            parallel: false,
            guard_limit: DEFAULT_GUARD_LIMIT,
        }
    }
}

/// Everything a mining run produced, keyed by pattern size. Pattern lists
/// are sorted and duplicate-free, so two results can be compared directly.
#[derive(Debug, Clone)]
pub struct PatternResult {
    pub algorithm: Algorithm,
    pub kind: PatternKind,
    pub max_size: usize,
    /// Patterns per size; every size from 1 to `max_size` has an entry,
    /// possibly empty.
    pub patterns_by_size: BTreeMap<usize, Vec<NodeSet>>,
    /// Wall-clock milliseconds spent on each size level.
    pub timings_ms: BTreeMap<usize, f64>,
    /// Per-level pruning counters; `None` for the brute-force miner.
    pub prune_stats: Option<Vec<PruneStats>>,
}

impl PatternResult {
    pub fn count(&self, size: usize) -> usize {
        self.patterns_by_size.get(&size).map_or(0, Vec::len)
    }

    pub fn total_patterns(&self) -> usize {
        self.patterns_by_size.values().map(Vec::len).sum()
    }

    /// True when both runs found exactly the same sets at every size,
    /// regardless of algorithm, timing, or pruning details.
    pub fn patterns_eq(&self, other: &PatternResult) -> bool {
        self.patterns_by_size == other.patterns_by_size
    }
}

/// Number of `k`-subsets of an `m`-set, saturating at `u128::MAX`.
pub fn combination_count(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k) as u128;
    let m = m as u128;
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc * (m - j) / (j + 1) stays integral at every step.
        match acc.checked_mul(m - j) {
            Some(v) => acc = v / (j + 1),
            None => return u128::MAX,
        }
    }
    acc
}

fn guard(universe: usize, k: usize, limit: u64) -> Result<()> {
    let candidates = combination_count(universe, k);
    if candidates > limit as u128 {
        Err(Error::SearchSpaceTooLarge { candidates, limit })
    } else {
        Ok(())
    }
}

/// Visits every k-subset of `0..m` in lexicographic order. The slice handed
/// to the callback is the current index combination, ascending.
fn for_each_combination(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k == 0 || k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        // Rightmost position that can still advance.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] < m - k + pos {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
    }
}

/// Exhaustively checks every `size`-subset of `universe` (sorted ids)
/// against the full graph. Both miners' enumeration phases funnel through
/// here; only the universe differs.
fn blackhole_subsets(g: &DirectedGraph, universe: &[NodeId], size: usize) -> Vec<NodeSet> {
    let mut found = Vec::new();
    let mut buf = vec![NodeId(0); size];
    for_each_combination(universe.len(), size, |idx| {
        for (slot, &j) in idx.iter().enumerate() {
            buf[slot] = universe[j];
        }
        if pattern::members_form_blackhole(g, &buf) {
            found.push(NodeSet::new(buf.clone()));
        }
    });
    found
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Mines with explicit configuration. This is the one entry point that
/// understands volcanoes: the request is dualized onto blackhole mining over
/// the (possibly reversed) graph and the result is stamped with the original
/// kind.
pub fn mine(g: &DirectedGraph, config: &MiningConfig) -> Result<PatternResult> {
    if config.max_size == 0 {
        return Err(Error::InvalidSize);
    }
    let (_, target) = pattern::dualize(config.kind, g);
    let mut result = match config.algorithm {
        Algorithm::BruteForce => brute_force(&target, config.max_size, None, config.guard_limit)?,
        Algorithm::IBlackhole => iblackhole(&target, config.max_size, config.guard_limit)?,
        Algorithm::IBlackholeDc => {
            iblackhole_dc(&target, config.max_size, config.guard_limit, config.parallel)?
        }
    };
    result.kind = config.kind;
    Ok(result)
}

/// Exhaustive blackhole search up to `max_size`, optionally restricted to
/// subsets of `scope`. Uses the default guard limit.
pub fn mine_brute_force(
    g: &DirectedGraph,
    max_size: usize,
    scope: Option<&NodeSet>,
) -> Result<PatternResult> {
    brute_force(g, max_size, scope, DEFAULT_GUARD_LIMIT)
}

/// Pruned blackhole search up to `max_size` with the default guard limit.
pub fn mine_iblackhole(g: &DirectedGraph, max_size: usize) -> Result<PatternResult> {
    iblackhole(g, max_size, DEFAULT_GUARD_LIMIT)
}

/// Pruned, per-component blackhole search up to `max_size` with the default
/// guard limit, serial.
pub fn mine_iblackhole_dc(g: &DirectedGraph, max_size: usize) -> Result<PatternResult> {
    iblackhole_dc(g, max_size, DEFAULT_GUARD_LIMIT, false)
}

fn brute_force(
    g: &DirectedGraph,
    max_size: usize,
    scope: Option<&NodeSet>,
    guard_limit: u64,
) -> Result<PatternResult> {
    if max_size == 0 {
        return Err(Error::InvalidSize);
    }
    let all;
    let universe: &[NodeId] = match scope {
        Some(s) => {
            g.check_set(s)?;
            s.members()
        }
        None => {
            all = g.all_nodes();
            all.members()
        }
    };
    let mut patterns_by_size = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    for size in 1..=max_size {
        let start = Instant::now();
        guard(universe.len(), size, guard_limit)?;
        patterns_by_size.insert(size, blackhole_subsets(g, universe, size));
        timings_ms.insert(size, elapsed_ms(start));
    }
    Ok(PatternResult {
        algorithm: Algorithm::BruteForce,
        kind: PatternKind::Blackhole,
        max_size,
        patterns_by_size,
        timings_ms,
        prune_stats: None,
    })
}

fn iblackhole(g: &DirectedGraph, max_size: usize, guard_limit: u64) -> Result<PatternResult> {
    if max_size == 0 {
        return Err(Error::InvalidSize);
    }
    let mut patterns_by_size = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    let mut stats = Vec::with_capacity(max_size);
    let mut carried: Option<Vec<bool>> = None;
    for size in 1..=max_size {
        let start = Instant::now();
        let level = prune_level(g, size, carried.as_deref())?;
        let universe = mask_to_ids(&level.finals);
        guard(universe.len(), size, guard_limit)?;
        let mut found = blackhole_subsets(g, &universe, size);
        found.extend(level.emitted.iter().cloned());
        found.sort_unstable();
        found.dedup();
        patterns_by_size.insert(size, found);
        timings_ms.insert(size, elapsed_ms(start));
        stats.push(level.stats);
        carried = Some(level.candidates);
    }
    Ok(PatternResult {
        algorithm: Algorithm::IBlackhole,
        kind: PatternKind::Blackhole,
        max_size,
        patterns_by_size,
        timings_ms,
        prune_stats: Some(stats),
    })
}

fn iblackhole_dc(
    g: &DirectedGraph,
    max_size: usize,
    guard_limit: u64,
    parallel: bool,
) -> Result<PatternResult> {
    if max_size == 0 {
        return Err(Error::InvalidSize);
    }
    let mut patterns_by_size = BTreeMap::new();
    let mut timings_ms = BTreeMap::new();
    let mut stats = Vec::with_capacity(max_size);
    let mut carried: Option<Vec<bool>> = None;
    for size in 1..=max_size {
        let start = Instant::now();
        let level = prune_level(g, size, carried.as_deref())?;
        let components = g.weak_components_masked(&level.finals);
        // A pattern of `size` nodes cannot live in a smaller component.
        let searchable: Vec<&Vec<NodeId>> =
            components.iter().filter(|c| c.len() >= size).collect();
        for comp in &searchable {
            guard(comp.len(), size, guard_limit)?;
        }
        let per_component: Vec<Vec<NodeSet>> = if parallel {
            searchable
                .par_iter()
                .map(|comp| connected_blackholes(g, comp, size))
                .collect()
        } else {
            searchable
                .iter()
                .map(|comp| connected_blackholes(g, comp, size))
                .collect()
        };
        let mut found: Vec<NodeSet> = per_component.into_iter().flatten().collect();
        found.extend(level.emitted.iter().cloned());
        found.sort_unstable();
        found.dedup();
        patterns_by_size.insert(size, found);
        timings_ms.insert(size, elapsed_ms(start));
        stats.push(level.stats);
        carried = Some(level.candidates);
    }
    Ok(PatternResult {
        algorithm: Algorithm::IBlackholeDc,
        kind: PatternKind::Blackhole,
        max_size,
        patterns_by_size,
        timings_ms,
        prune_stats: Some(stats),
    })
}

fn mask_to_ids(mask: &[bool]) -> Vec<NodeId> {
    mask.iter()
        .enumerate()
        .filter(|&(_, &alive)| alive)
        .map(|(v, _)| NodeId(v as u32))
        .collect()
}

/// Enumerates weakly connected `size`-subsets of one component and keeps the
/// ones with no escaping edge. Connectivity comes free from the enumeration
/// order, so only the escape check runs per set.
fn connected_blackholes(g: &DirectedGraph, component: &[NodeId], size: usize) -> Vec<NodeSet> {
    debug_assert!(component.windows(2).all(|w| w[0] < w[1]));
    // Undirected adjacency in local indices, restricted to the component.
    let m = component.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (local, &v) in component.iter().enumerate() {
        for &(nb, _) in g.successors(v).iter().chain(g.predecessors(v)) {
            if let Ok(other) = component.binary_search(&nb) {
                adj[local].push(other);
            }
        }
        adj[local].sort_unstable();
        adj[local].dedup();
    }
    let mut found = Vec::new();
    let mut members = vec![NodeId(0); size];
    for_each_connected_subset(&adj, size, &mut |locals| {
        for (slot, &l) in locals.iter().enumerate() {
            members[slot] = component[l];
        }
        members.sort_unstable();
        if pattern::has_no_escaping_edge(g, &members) {
            found.push(NodeSet::new(members.clone()));
        }
    });
    found.sort_unstable();
    found
}

/// Enumerates every connected `k`-subset of an undirected adjacency
/// structure exactly once: grow from each root, extending only through
/// neighbors of the current set that were not already adjacent to it, and
/// only with indices above the root.
fn for_each_connected_subset(
    adj: &[Vec<usize>],
    k: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if k == 0 {
        return;
    }
    let mut sub = Vec::with_capacity(k);
    for root in 0..adj.len() {
        sub.push(root);
        if k == 1 {
            visit(&sub);
        } else {
            let ext: Vec<usize> = adj[root].iter().copied().filter(|&u| u > root).collect();
            extend_subset(adj, k, root, &mut sub, ext, visit);
        }
        sub.pop();
    }
}

fn extend_subset(
    adj: &[Vec<usize>],
    k: usize,
    root: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    while let Some(w) = ext.pop() {
        if sub.len() + 1 == k {
            sub.push(w);
            visit(sub);
            sub.pop();
            continue;
        }
        // Extension set for the grown subgraph: keep the rest of ours, add
        // w's exclusive neighbors (not in or adjacent to the current set).
        let mut next_ext = ext.clone();
        for &u in &adj[w] {
            if u > root
                && !sub.contains(&u)
                && !sub.iter().any(|&s| adj[s].binary_search(&u).is_ok())
            {
                next_ext.push(u);
            }
        }
        sub.push(w);
        extend_subset(adj, k, root, sub, next_ext, visit);
        sub.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;
    use std::collections::BTreeSet;

    fn graph(text: &str) -> DirectedGraph {
        load_edge_list(text.as_bytes()).unwrap().0
    }

    fn set(g: &DirectedGraph, labels: &[&str]) -> NodeSet {
        labels.iter().map(|l| g.node_id(l).unwrap()).collect()
    }

    fn chain() -> DirectedGraph {
        graph("a b\nb c\n")
    }

    fn cycles() -> DirectedGraph {
        graph("x y\ny x\nu v\nv u 1\n")
    }

    #[test]
    fn combination_count_basics() {
        assert_eq!(combination_count(5, 0), 1);
        assert_eq!(combination_count(5, 2), 10);
        assert_eq!(combination_count(5, 5), 1);
        assert_eq!(combination_count(5, 6), 0);
        assert_eq!(combination_count(40, 5), 658_008);
        assert_eq!(combination_count(300, 4), 330_791_175);
        assert_eq!(combination_count(300, 5), 19_582_837_560);
        // Deliberately absurd inputs must saturate, not overflow.
        assert_eq!(combination_count(100_000, 50_000), u128::MAX);
    }

    #[test]
    fn combinations_enumerate_lexicographically() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |idx| seen.push(idx.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
            ]
        );
        let mut count = 0u64;
        for_each_combination(7, 4, |_| count += 1);
        assert_eq!(count as u128, combination_count(7, 4));
        // Degenerate shapes.
        for_each_combination(3, 0, |_| panic!("k = 0 visits nothing"));
        for_each_combination(2, 3, |_| panic!("k > m visits nothing"));
        let mut whole = Vec::new();
        for_each_combination(3, 3, |idx| whole.push(idx.to_vec()));
        assert_eq!(whole, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn connected_subset_enumeration_matches_filtered_combinations() {
        let g = graph("a b\nb c\nc a\nb d\nd e\nv f\nx y\n");
        let comp_sets = g.weak_components_masked(&vec![true; g.node_count()]);
        for k in 1..=4 {
            // Oracle: all k-subsets that are weakly connected.
            let all = g.all_nodes();
            let mut expected = BTreeSet::new();
            for_each_combination(g.node_count(), k, |idx| {
                let members: Vec<NodeId> = idx.iter().map(|&i| all.members()[i]).collect();
                if crate::graph::weakly_connected_members(&g, &members) {
                    expected.insert(NodeSet::new(members));
                }
            });
            let mut actual = BTreeSet::new();
            for comp in &comp_sets {
                if comp.len() < k {
                    continue;
                }
                let m = comp.len();
                let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
                for (local, &v) in comp.iter().enumerate() {
                    for &(nb, _) in g.successors(v).iter().chain(g.predecessors(v)) {
                        if let Ok(other) = comp.binary_search(&nb) {
                            adj[local].push(other);
                        }
                    }
                    adj[local].sort_unstable();
                    adj[local].dedup();
                }
                for_each_connected_subset(&adj, k, &mut |locals| {
                    let members: Vec<NodeId> = locals.iter().map(|&l| comp[l]).collect();
                    let fresh = actual.insert(NodeSet::new(members));
                    assert!(fresh, "connected subset enumerated twice at k = {k}");
                });
            }
            assert_eq!(actual, expected, "k = {k}");
        }
    }

    #[test]
    fn brute_force_on_chain_finds_the_nested_suffixes() {
        let g = chain();
        let r = mine_brute_force(&g, 3, None).unwrap();
        assert_eq!(r.patterns_by_size[&1], vec![set(&g, &["c"])]);
        assert_eq!(r.patterns_by_size[&2], vec![set(&g, &["b", "c"])]);
        assert_eq!(r.patterns_by_size[&3], vec![set(&g, &["a", "b", "c"])]);
        assert_eq!(r.total_patterns(), 3);
    }

    #[test]
    fn brute_force_on_two_cycles_finds_only_the_pairs() {
        let g = cycles();
        let r = mine_brute_force(&g, 4, None).unwrap();
        assert!(r.patterns_by_size[&1].is_empty());
        assert_eq!(
            r.patterns_by_size[&2],
            vec![set(&g, &["x", "y"]), set(&g, &["u", "v"])]
        );
        assert!(r.patterns_by_size[&3].is_empty());
        // The union of both cycles is not weakly connected.
        assert!(r.patterns_by_size[&4].is_empty());
    }

    #[test]
    fn scope_restricts_the_universe_but_not_the_graph() {
        let g = chain();
        let scope = set(&g, &["b", "c"]);
        let r = mine_brute_force(&g, 2, Some(&scope)).unwrap();
        // {b} alone still leaks b -> c, judged against the full graph.
        assert_eq!(r.patterns_by_size[&1], vec![set(&g, &["c"])]);
        assert_eq!(r.patterns_by_size[&2], vec![set(&g, &["b", "c"])]);
    }

    #[test]
    fn all_three_miners_agree_on_fixtures() {
        for text in [
            "a b\nb c\n",
            "x y\ny x\nu v\nv u 1\n",
            "a b\nb c\nc a\nb d\nd e\nv f\n",
            "hub a\nhub b\nhub c\na sink\nb sink\nc sink\n",
        ] {
            let g = graph(text);
            let n = 4.min(g.node_count());
            let bf = mine_brute_force(&g, n, None).unwrap();
            let ib = mine_iblackhole(&g, n).unwrap();
            let dc = mine_iblackhole_dc(&g, n).unwrap();
            assert!(bf.patterns_eq(&ib), "iblackhole differs on {text:?}");
            assert!(bf.patterns_eq(&dc), "divide-and-conquer differs on {text:?}");
        }
    }

    #[test]
    fn pruned_miners_report_funnel_stats() {
        let g = chain();
        let r = mine_iblackhole(&g, 2).unwrap();
        let stats = r.prune_stats.as_ref().unwrap();
        assert_eq!(stats.len(), 2);
        assert_eq!(stats[0].size, 1);
        assert_eq!(stats[1].size, 2);
        assert_eq!(stats[1].emitted, 1);
        assert!(mine_brute_force(&g, 2, None).unwrap().prune_stats.is_none());
    }

    #[test]
    fn divide_and_conquer_searches_disjoint_parts_independently() {
        // Two far-apart chains; patterns are the union of per-part patterns.
        let g = graph("a b\nb c\np q\nq r\n");
        let dc = mine_iblackhole_dc(&g, 3).unwrap();
        assert_eq!(
            dc.patterns_by_size[&2],
            vec![set(&g, &["b", "c"]), set(&g, &["q", "r"])]
        );
        assert_eq!(
            dc.patterns_by_size[&3],
            vec![set(&g, &["a", "b", "c"]), set(&g, &["p", "q", "r"])]
        );
    }

    #[test]
    fn parallel_and_serial_dc_agree() {
        let g = crate::synth::er_digraph(30, 0.1, 7);
        let serial = mine_iblackhole_dc(&g, 3).unwrap();
        let mut config = MiningConfig::new(Algorithm::IBlackholeDc, PatternKind::Blackhole, 3);
        config.parallel = true;
        let parallel = mine(&g, &config).unwrap();
        assert!(serial.patterns_eq(&parallel));
    }

    #[test]
    fn volcano_mining_mirrors_blackhole_mining() {
        let g = chain();
        for algorithm in [
            Algorithm::BruteForce,
            Algorithm::IBlackhole,
            Algorithm::IBlackholeDc,
        ] {
            let config = MiningConfig::new(algorithm, PatternKind::Volcano, 3);
            let r = mine(&g, &config).unwrap();
            assert_eq!(r.kind, PatternKind::Volcano);
            assert_eq!(r.patterns_by_size[&1], vec![set(&g, &["a"])]);
            assert_eq!(r.patterns_by_size[&2], vec![set(&g, &["a", "b"])]);
            assert_eq!(r.patterns_by_size[&3], vec![set(&g, &["a", "b", "c"])]);
        }
    }

    #[test]
    fn zero_size_is_rejected_everywhere() {
        let g = chain();
        assert!(matches!(
            mine_brute_force(&g, 0, None),
            Err(Error::InvalidSize)
        ));
        assert!(matches!(mine_iblackhole(&g, 0), Err(Error::InvalidSize)));
        assert!(matches!(mine_iblackhole_dc(&g, 0), Err(Error::InvalidSize)));
        let config = MiningConfig::new(Algorithm::BruteForce, PatternKind::Blackhole, 0);
        assert!(matches!(mine(&g, &config), Err(Error::InvalidSize)));
    }

    #[test]
    fn guard_limit_refuses_oversized_levels() {
        let g = crate::synth::er_digraph(30, 0.05, 3);
        let mut config = MiningConfig::new(Algorithm::BruteForce, PatternKind::Blackhole, 3);
        config.guard_limit = 100;
        let err = mine(&g, &config).unwrap_err();
        match err {
            Error::SearchSpaceTooLarge { candidates, limit } => {
                assert_eq!(limit, 100);
                assert!(candidates > 100);
            }
            other => panic!("expected guard refusal, got {other:?}"),
        }
    }

    #[test]
    fn empty_graph_mines_empty_levels() {
        let g = load_edge_list("".as_bytes()).unwrap().0;
        for result in [
            mine_brute_force(&g, 3, None).unwrap(),
            mine_iblackhole(&g, 3).unwrap(),
            mine_iblackhole_dc(&g, 3).unwrap(),
        ] {
            assert_eq!(result.total_patterns(), 0);
            assert_eq!(result.patterns_by_size.len(), 3);
        }
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in [
            Algorithm::BruteForce,
            Algorithm::IBlackhole,
            Algorithm::IBlackholeDc,
        ] {
            assert_eq!(a.to_string().parse::<Algorithm>().unwrap(), a);
        }
        assert!("dijkstra".parse::<Algorithm>().is_err());
    }
}
