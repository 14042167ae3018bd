//! What counts as a pattern: boundary weights, the ratio form, the
//! simplified form the miners search for, and blackhole/volcano duality.
//!
//! A blackhole is a weakly connected node set that mass flows into but never
//! out of; a volcano is its mirror image. Mining volcanoes therefore reduces
//! to mining blackholes on the reversed graph, which is what [`dualize`]
//! encodes.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{weakly_connected_members, DirectedGraph, NodeId, NodeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Blackhole,
    Volcano,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Blackhole => "blackhole",
            PatternKind::Volcano => "volcano",
        })
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "blackhole" => Ok(PatternKind::Blackhole),
            "volcano" => Ok(PatternKind::Volcano),
            other => Err(format!("unknown pattern kind `{other}`")),
        }
    }
}

/// Total edge weight crossing a set's boundary, split by direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSummary {
    /// Weight on edges from outside the set into it.
    pub in_weight: f64,
    /// Weight on edges from inside the set out of it.
    pub out_weight: f64,
}

/// Sums boundary-crossing weight around `set`. Edges with both ends inside
/// contribute to neither side.
pub fn boundary_weights(g: &DirectedGraph, set: &NodeSet) -> Result<WeightSummary> {
    check_members(g, set)?;
    let mut in_weight = 0.0;
    let mut out_weight = 0.0;
    for v in set.iter() {
        for &(p, w) in g.predecessors(v) {
            if !set.contains(p) {
                in_weight += w;
            }
        }
        for &(s, w) in g.successors(v) {
            if !set.contains(s) {
                out_weight += w;
            }
        }
    }
    Ok(WeightSummary {
        in_weight,
        out_weight,
    })
}

/// The general, threshold-based form of the patterns: `set` must be weakly
/// connected (when it has at least two members) and its dominant-direction
/// boundary ratio must exceed `theta`.
///
/// For blackholes the ratio is in-weight over out-weight, for volcanoes the
/// reverse. A zero denominator counts as exceeding any threshold provided
/// the numerator is positive; a set with no boundary flow at all satisfies
/// neither kind.
pub fn satisfies_ratio(g: &DirectedGraph, set: &NodeSet, kind: PatternKind, theta: f64) -> Result<bool> {
    check_members(g, set)?;
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(Error::InvalidTheta { theta });
    }
    if set.len() >= 2 && !weakly_connected_members(g, set.members()) {
        return Ok(false);
    }
    let w = boundary_weights(g, set)?;
    let (num, den) = match kind {
        PatternKind::Blackhole => (w.in_weight, w.out_weight),
        PatternKind::Volcano => (w.out_weight, w.in_weight),
    };
    if den == 0.0 {
        Ok(num > 0.0)
    } else {
        Ok(num / den > theta)
    }
}

/// The form the miners actually search for: weakly connected (singletons
/// trivially so) with no edge leaving the set at all. This is the limit of
/// the ratio form as the threshold grows without bound.
pub fn is_simplified_blackhole(g: &DirectedGraph, set: &NodeSet) -> Result<bool> {
    check_members(g, set)?;
    Ok(members_form_blackhole(g, set.members()))
}

/// Direct mirror check, written against predecessors rather than by
/// reversing the graph: weakly connected with no edge entering the set.
/// Deliberately independent of [`dualize`] so the two can be tested against
/// each other.
pub fn is_simplified_volcano(g: &DirectedGraph, set: &NodeSet) -> Result<bool> {
    check_members(g, set)?;
    let members = set.members();
    let no_inbound = members.iter().all(|&v| {
        g.predecessors(v)
            .iter()
            .all(|&(p, _)| members.binary_search(&p).is_ok())
    });
    Ok(no_inbound && weakly_connected_members(g, members))
}

/// Maps a mining request onto blackhole mining: blackholes run on the graph
/// as-is, volcanoes on the reversed graph. Ids and labels are preserved by
/// reversal, so any set found on the returned graph names the same nodes in
/// the original.
pub fn dualize<'g>(kind: PatternKind, g: &'g DirectedGraph) -> (PatternKind, Cow<'g, DirectedGraph>) {
    match kind {
        PatternKind::Blackhole => (PatternKind::Blackhole, Cow::Borrowed(g)),
        PatternKind::Volcano => (PatternKind::Blackhole, Cow::Owned(g.reverse())),
    }
}

/// Hot-path form of the simplified check over a sorted member slice, no
/// allocation. The escape scan runs first; connectivity only matters for the
/// few sets that pass it.
pub(crate) fn members_form_blackhole(g: &DirectedGraph, members: &[NodeId]) -> bool {
    has_no_escaping_edge(g, members) && weakly_connected_members(g, members)
}

pub(crate) fn has_no_escaping_edge(g: &DirectedGraph, members: &[NodeId]) -> bool {
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    members.iter().all(|&v| {
        g.successors(v)
            .iter()
            .all(|&(s, _)| members.binary_search(&s).is_ok())
    })
}

fn check_members(g: &DirectedGraph, set: &NodeSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyNodeSet);
    }
    g.check_set(set)
}
