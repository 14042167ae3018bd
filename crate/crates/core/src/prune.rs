//! The pruning pipeline that shrinks the search space before any subset
//! enumeration happens. For a target pattern size `i` it narrows the node
//! universe in three stages:
//!
//! 1. **potential** — only nodes with out-degree below `i` can belong to a
//!    blackhole of `i` nodes, since all their out-edges must stay inside it.
//! 2. **candidate** — a node with a successor outside the potential list can
//!    never be covered, and once it falls out, neither can any of its
//!    predecessors; removals cascade until the survivors are exactly the
//!    nodes whose successors all survive too (a fixed point).
//! 3. **final** — per-node reachability closures settle the rest: a closure
//!    larger than `i` disqualifies the node and, by the same cascade, its
//!    predecessors; a closure of exactly `i` nodes *is* a blackhole and is
//!    emitted here, its origin removed; smaller closures stay for the
//!    enumeration phase.
//!
//! Candidate lists grow with `i`, so the previous level's list can be carried
//! in and skipped instead of re-derived; `prune_level` wires the stages
//! together that way.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, NodeSet};

/// How many nodes each stage kept or removed at one size level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneStats {
    /// Target pattern size.
    pub size: usize,
    /// Nodes with out-degree below `size`.
    pub potential: usize,
    /// Survivors of the escape cascade.
    pub candidates: usize,
    /// Survivors of the closure stage, the universe enumeration runs on.
    pub finals: usize,
    /// Removed at the candidate stage (escaping successor, plus cascades).
    pub removed_escaping: usize,
    /// Removed at the final stage because a closure outgrew `size`.
    pub removed_closure_overflow: usize,
    /// Removed at the final stage because their closure was emitted.
    pub removed_emitted: usize,
    /// Distinct patterns emitted directly by the closure rule.
    pub emitted: usize,
}

/// Full output of one pruning level: the three stage masks, the patterns the
/// closure rule emitted outright, and the counters.
#[derive(Debug, Clone)]
pub struct PruneLevel {
    pub size: usize,
    pub potential: Vec<bool>,
    pub candidates: Vec<bool>,
    pub finals: Vec<bool>,
    pub emitted: Vec<NodeSet>,
    pub stats: PruneStats,
}

/// Funnel counters plus the shape of the subgraph induced on the final list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PruneReport {
    #[serde(flatten)]
    pub stats: PruneStats,
    /// Node count of the induced subgraph (same as `stats.finals`).
    pub nodes: usize,
    pub edges: usize,
    pub components: usize,
}

/// Stage 1: nodes whose out-degree is below `size`. Everything a blackhole
/// member points at must be inside the set, so a member of an `i`-node
/// blackhole has at most `i - 1` out-edges.
pub fn potential_list(g: &DirectedGraph, size: usize) -> Result<Vec<bool>> {
    if size == 0 {
        return Err(Error::InvalidSize);
    }
    Ok((0..g.node_count())
        .map(|v| g.successors(NodeId(v as u32)).len() < size)
        .collect())
}

/// Stage 2: repeatedly discard nodes with a successor outside the surviving
/// set, starting from the potential list, until nothing changes. Nodes
/// flagged in `carried` are survivors of the previous (smaller) level's
/// candidate stage; the list only ever grows from one level to the next, so
/// they are skipped outright and never removed.
///
/// Returns the surviving mask and how many nodes were removed.
pub fn candidate_list(
    g: &DirectedGraph,
    potential: &[bool],
    carried: Option<&[bool]>,
) -> (Vec<bool>, usize) {
    assert_eq!(potential.len(), g.node_count());
    if let Some(c) = carried {
        assert_eq!(c.len(), g.node_count());
    }
    let mut alive = potential.to_vec();
    let mut removed = 0;
    for v in 0..g.node_count() {
        if !alive[v] || carried.is_some_and(|c| c[v]) {
            continue;
        }
        // A dead successor here can only be one that was never potential:
        // had a cascade killed it, the cascade would have reached v too.
        let escapes = g
            .successors(NodeId(v as u32))
            .iter()
            .any(|&(s, _)| !alive[s.index()]);
        if escapes {
            removed += cascade_remove(g, &mut alive, NodeId(v as u32), carried);
        }
    }
    (alive, removed)
}

/// Stage 3: the closure rule over the candidate mask. Returns the final mask
/// and the patterns emitted on the way.
pub fn final_list(
    g: &DirectedGraph,
    size: usize,
    candidates: &[bool],
) -> Result<(Vec<bool>, Vec<NodeSet>)> {
    let stage = final_stage(g, size, candidates)?;
    Ok((stage.alive, stage.emitted))
}

struct FinalStage {
    alive: Vec<bool>,
    emitted: Vec<NodeSet>,
    removed_overflow: usize,
    removed_emitted: usize,
}

fn final_stage(g: &DirectedGraph, size: usize, candidates: &[bool]) -> Result<FinalStage> {
    if size == 0 {
        return Err(Error::InvalidSize);
    }
    assert_eq!(candidates.len(), g.node_count());
    let mut alive = candidates.to_vec();
    let mut emitted: Vec<NodeSet> = Vec::new();
    let mut removed_overflow = 0;
    let mut removed_emitted = 0;
    for v in 0..g.node_count() {
        if !alive[v] {
            continue;
        }
        let v = NodeId(v as u32);
        // The closure runs on the full graph, not the masked one: everything
        // reachable from a candidate is itself a surviving candidate, by the
        // stage-2 fixed point.
        let (closure, exceeded) = g.closure_bounded(v, size)?;
        if exceeded {
            // No i-node blackhole can contain v: the set would have to
            // absorb v's whole closure. Its predecessors sink with it.
            removed_overflow += cascade_remove(g, &mut alive, v, None);
        } else if closure.len() == size {
            // The closure itself is an i-node blackhole; emit it and retire
            // v the same way.
            if !emitted.contains(&closure) {
                emitted.push(closure);
            }
            removed_emitted += cascade_remove(g, &mut alive, v, None);
        }
    }
    emitted.sort_unstable();
    Ok(FinalStage {
        alive,
        emitted,
        removed_overflow,
        removed_emitted,
    })
}

/// Runs all three stages for one size level. `carried` is the previous
/// level's candidate mask, if any.
pub fn prune_level(
    g: &DirectedGraph,
    size: usize,
    carried: Option<&[bool]>,
) -> Result<PruneLevel> {
    let potential = potential_list(g, size)?;
    let (candidates, removed_escaping) = candidate_list(g, &potential, carried);
    let stage = final_stage(g, size, &candidates)?;
    let stats = PruneStats {
        size,
        potential: count(&potential),
        candidates: count(&candidates),
        finals: count(&stage.alive),
        removed_escaping,
        removed_closure_overflow: stage.removed_overflow,
        removed_emitted: stage.removed_emitted,
        emitted: stage.emitted.len(),
    };
    Ok(PruneLevel {
        size,
        potential,
        candidates,
        finals: stage.alive,
        emitted: stage.emitted,
        stats,
    })
}

/// One-shot funnel report for a single size: stage counts plus node, edge,
/// and weak-component counts of the subgraph induced on the final list.
pub fn prune_stats(g: &DirectedGraph, size: usize) -> Result<PruneReport> {
    let level = prune_level(g, size, None)?;
    let alive = &level.finals;
    let nodes = count(alive);
    let mut edges = 0;
    for v in 0..g.node_count() {
        if !alive[v] {
            continue;
        }
        edges += g
            .successors(NodeId(v as u32))
            .iter()
            .filter(|&&(s, _)| alive[s.index()])
            .count();
    }
    let components = g.weak_components_masked(alive).len();
    Ok(PruneReport {
        stats: level.stats,
        nodes,
        edges,
        components,
    })
}

/// Kills `start` and every transitive predecessor still alive. Nodes flagged
/// in `protected` are left untouched and not walked through.
fn cascade_remove(
    g: &DirectedGraph,
    alive: &mut [bool],
    start: NodeId,
    protected: Option<&[bool]>,
) -> usize {
    let mut removed = 0;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        if !alive[u.index()] || protected.is_some_and(|p| p[u.index()]) {
            continue;
        }
        alive[u.index()] = false;
        removed += 1;
        for &(p, _) in g.predecessors(u) {
            if alive[p.index()] {
                stack.push(p);
            }
        }
    }
    removed
}

fn count(mask: &[bool]) -> usize {
    mask.iter().filter(|&&b| b).count()
}
