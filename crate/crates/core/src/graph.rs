//! Directed-graph model and the structural queries the miners rely on:
//! degrees, reversal, induced subgraphs, weak connectivity and components,
//! and reachability closures.
//!
//! Graphs are immutable once built. Adjacency lists are sorted by neighbor
//! id, so every traversal, and every output derived from one, is
//! deterministic for a given input.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense index of a node in a [`DirectedGraph`], assigned in first-appearance
/// order at build time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A directed edge with its positive weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub src: NodeId,
    pub dst: NodeId,
    pub weight: f64,
}

/// Canonical node set: members sorted ascending, no duplicates.
///
/// The canonical form makes sets directly comparable, so pattern lists can be
/// sorted, deduplicated, and diffed across algorithms without normalization
/// at the call site.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet {
    members: Vec<NodeId>,
}

impl NodeSet {
    pub fn new(mut members: Vec<NodeId>) -> Self {
        members.sort_unstable();
        members.dedup();
        NodeSet { members }
    }

    pub fn singleton(v: NodeId) -> Self {
        NodeSet { members: vec![v] }
    }

    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<NodeId> for NodeSet {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        NodeSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<NodeId>> for NodeSet {
    fn from(members: Vec<NodeId>) -> Self {
        NodeSet::new(members)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// What construction cleaned up: self-loops are dropped, repeated (src, dst)
/// pairs collapse to the first weight seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LoadReport {
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// Accumulates labels and edges, then freezes them into a [`DirectedGraph`].
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edges: Vec<(u32, u32, f64)>,
    self_loops_dropped: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        GraphBuilder {
            labels: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            self_loops_dropped: 0,
        }
    }

    /// Returns the id for `label`, minting one on first sight.
    ///
    /// Labels must be nonempty and free of whitespace; anything else would not
    /// survive an edge-list round trip.
    pub fn intern(&mut self, label: &str) -> NodeId {
        assert!(
            !label.is_empty() && !label.chars().any(char::is_whitespace),
            "node label must be nonempty and contain no whitespace: {label:?}"
        );
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        id
    }

    /// Records an edge. Self-loops are silently dropped (and counted); the
    /// weight must be positive and finite.
    pub fn add_edge(&mut self, src: NodeId, dst: NodeId, weight: f64) {
        assert!(
            weight > 0.0 && weight.is_finite(),
            "edge weight must be positive and finite, got {weight}"
        );
        assert!(src.index() < self.labels.len() && dst.index() < self.labels.len());
        if src == dst {
            self.self_loops_dropped += 1;
            return;
        }
        self.edges.push((src.0, dst.0, weight));
    }

    pub fn build(self) -> (DirectedGraph, LoadReport) {
        let n = self.labels.len();
        let mut edges = self.edges;
        // Stable sort: among duplicate (src, dst) pairs the first one recorded
        // stays in front, and dedup keeps it.
        edges.sort_by_key(|&(s, d, _)| (s, d));
        let before = edges.len();
        edges.dedup_by_key(|&mut (s, d, _)| (s, d));
        let duplicates_collapsed = before - edges.len();

        let mut forward = vec![Vec::new(); n];
        let mut reverse = vec![Vec::new(); n];
        let edge_count = edges.len();
        for (s, d, w) in edges {
            forward[s as usize].push((NodeId(d), w));
            reverse[d as usize].push((NodeId(s), w));
        }
        for list in &mut reverse {
            list.sort_unstable_by_key(|&(p, _)| p);
        }

        let graph = DirectedGraph {
            labels: self.labels,
            forward,
            reverse,
            edge_count,
        };
        let report = LoadReport {
            self_loops_dropped: self.self_loops_dropped,
            duplicates_collapsed,
        };
        (graph, report)
    }
}

impl Default for GraphBuilder {
    fn default() -> Self {
        GraphBuilder::new()
    }
}

/// Immutable directed graph with positive edge weights and string labels.
///
/// Both forward and reverse adjacency are materialized: the pruning pipeline
/// walks predecessors as often as successors, and reversal becomes a swap.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedGraph {
    labels: Vec<String>,
    forward: Vec<Vec<(NodeId, f64)>>,
    reverse: Vec<Vec<(NodeId, f64)>>,
    edge_count: usize,
}

impl DirectedGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.index()]
    }

    /// Looks a node up by label. Linear scan; fine for the CLI and tests,
    /// hot paths work with ids.
    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| NodeId(i as u32))
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet {
            members: (0..self.labels.len()).map(|i| NodeId(i as u32)).collect(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.forward.iter().enumerate().flat_map(|(s, list)| {
            list.iter().map(move |&(dst, weight)| Edge {
                src: NodeId(s as u32),
                dst,
                weight,
            })
        })
    }

    /// Out-neighbors of `v` with weights, ascending by id.
    ///
    /// # Panics
    /// If `v` is out of range.
    pub fn successors(&self, v: NodeId) -> &[(NodeId, f64)] {
        &self.forward[v.index()]
    }

    /// In-neighbors of `v` with weights, ascending by id.
    ///
    /// # Panics
    /// If `v` is out of range.
    pub fn predecessors(&self, v: NodeId) -> &[(NodeId, f64)] {
        &self.reverse[v.index()]
    }

    pub fn out_degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.forward[v.index()].len())
    }

    pub fn in_degree(&self, v: NodeId) -> Result<usize> {
        self.check_node(v)?;
        Ok(self.reverse[v.index()].len())
    }

    /// The same nodes with every edge flipped. Ids and labels carry over, so
    /// node sets remain valid across the pair of graphs.
    pub fn reverse(&self) -> DirectedGraph {
        DirectedGraph {
            labels: self.labels.clone(),
            forward: self.reverse.clone(),
            reverse: self.forward.clone(),
            edge_count: self.edge_count,
        }
    }

    /// Subgraph on `set`: those nodes and every edge with both ends inside.
    /// Nodes are renumbered densely in ascending order of their old ids;
    /// labels follow them.
    pub fn induced_subgraph(&self, set: &NodeSet) -> Result<DirectedGraph> {
        self.check_set(set)?;
        let mut b = GraphBuilder::new();
        for v in set.iter() {
            b.intern(&self.labels[v.index()]);
        }
        for v in set.iter() {
            let src = NodeId(set.members().binary_search(&v).unwrap() as u32);
            for &(s, w) in self.successors(v) {
                if let Ok(pos) = set.members().binary_search(&s) {
                    b.add_edge(src, NodeId(pos as u32), w);
                }
            }
        }
        Ok(b.build().0)
    }

    /// Whether `set` induces a weakly connected subgraph. Singletons count as
    /// connected; the empty set is an error.
    pub fn is_weakly_connected(&self, set: &NodeSet) -> Result<bool> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        Ok(weakly_connected_members(self, set.members()))
    }

    /// Weak components of the whole graph, each sorted ascending, the list
    /// ordered by smallest member.
    pub fn weak_components(&self) -> Vec<NodeSet> {
        let alive = vec![true; self.node_count()];
        self.weak_components_masked(&alive)
            .into_iter()
            .map(|members| NodeSet { members })
            .collect()
    }

    /// Weak components among nodes where `alive` is true, ignoring edges that
    /// touch a dead endpoint. Members come back ascending, components ordered
    /// by smallest member.
    pub fn weak_components_masked(&self, alive: &[bool]) -> Vec<Vec<NodeId>> {
        assert_eq!(alive.len(), self.node_count());
        let n = self.node_count();
        let mut uf = UnionFind::new(n);
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            for &(s, _) in &self.forward[v] {
                if alive[s.index()] {
                    uf.union(v as u32, s.0);
                }
            }
        }
        let mut buckets: HashMap<u32, Vec<NodeId>> = HashMap::new();
        for (v, &live) in alive.iter().enumerate() {
            if live {
                buckets
                    .entry(uf.find(v as u32))
                    .or_default()
                    .push(NodeId(v as u32));
            }
        }
        // Ascending scan above keeps each bucket sorted already.
        let mut comps: Vec<Vec<NodeId>> = buckets.into_values().collect();
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }

    /// Every node reachable from `v` by directed edges, including `v`.
    pub fn closure(&self, v: NodeId) -> Result<NodeSet> {
        self.check_node(v)?;
        let (set, _) = self.closure_walk(v, usize::MAX);
        Ok(set)
    }

    /// Reachability closure that gives up early: once more than `cap` nodes
    /// have been collected the walk stops and the second value is true. The
    /// returned set is then a partial closure of exactly `cap` + 1 nodes,
    /// enough to witness that the true closure is larger than `cap`.
    pub fn closure_bounded(&self, v: NodeId, cap: usize) -> Result<(NodeSet, bool)> {
        self.check_node(v)?;
        if cap == 0 {
            return Err(Error::InvalidCap);
        }
        Ok(self.closure_walk(v, cap))
    }

    fn closure_walk(&self, v: NodeId, cap: usize) -> (NodeSet, bool) {
        let mut seen = vec![false; self.node_count()];
        seen[v.index()] = true;
        let mut collected = vec![v];
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &(s, _) in self.successors(u) {
                if !seen[s.index()] {
                    seen[s.index()] = true;
                    collected.push(s);
                    if collected.len() > cap {
                        return (NodeSet::new(collected), true);
                    }
                    queue.push_back(s);
                }
            }
        }
        (NodeSet::new(collected), false)
    }

    /// Renders the graph back to edge-list text: one `v <label>` line per
    /// isolated node, then one line per edge, both sections sorted by label
    /// so equal graphs always serialize identically. Weights of 1 are
    /// omitted. Feeding the output to [`load_edge_list`] reproduces the
    /// same labeled graph; internal ids may come back in a different order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut isolated: Vec<&str> = (0..self.node_count())
            .filter(|&v| self.forward[v].is_empty() && self.reverse[v].is_empty())
            .map(|v| self.labels[v].as_str())
            .collect();
        isolated.sort_unstable();
        for label in isolated {
            writeln!(out, "v {label}").unwrap();
        }
        let mut edges: Vec<(&str, &str, f64)> = self
            .edges()
            .map(|e| {
                (
                    self.labels[e.src.index()].as_str(),
                    self.labels[e.dst.index()].as_str(),
                    e.weight,
                )
            })
            .collect();
        edges.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for (src, dst, w) in edges {
            if w == 1.0 {
                writeln!(out, "{src} {dst}").unwrap();
            } else {
                writeln!(out, "{src} {dst} {w}").unwrap();
            }
        }
        out
    }

    fn check_node(&self, v: NodeId) -> Result<()> {
        if v.index() < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                id: v.0,
                node_count: self.node_count(),
            })
        }
    }

    pub(crate) fn check_set(&self, set: &NodeSet) -> Result<()> {
        // Members are sorted, so the last one is the only range check needed.
        if let Some(&last) = set.members().last() {
            self.check_node(last)?;
        }
        Ok(())
    }
}

/// Weak connectivity over a sorted member slice, union-find over positions.
pub(crate) fn weakly_connected_members(g: &DirectedGraph, members: &[NodeId]) -> bool {
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    if members.len() <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(members.len());
    let mut roots = members.len() as u32;
    for (pos, &v) in members.iter().enumerate() {
        for &(s, _) in g.successors(v) {
            if let Ok(spos) = members.binary_search(&s) {
                if uf.union(pos as u32, spos as u32) {
                    roots -= 1;
                }
            }
        }
    }
    roots == 1
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        // Path halving.
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Returns true when the two were in different sets.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }
}

/// Parses edge-list text into a graph.
///
/// Format, one record per line:
/// - `src dst` or `src dst weight`, whitespace separated; the weight defaults
///   to 1 and must be positive and finite,
/// - `v label` declares a node without edges (isolated nodes would otherwise
///   be unrepresentable),
/// - blank lines and lines starting with `#` are skipped.
///
/// Node ids are assigned in first-appearance order. Self-loops are dropped
/// and duplicate (src, dst) pairs collapse to the first weight seen; the
/// [`LoadReport`] says how many of each. Malformed lines fail with their
/// 1-based line number.
pub fn load_edge_list(reader: impl BufRead) -> Result<(DirectedGraph, LoadReport)> {
    let mut b = GraphBuilder::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", label] => {
                b.intern(label);
            }
            [src, dst] => {
                let s = b.intern(src);
                let d = b.intern(dst);
                b.add_edge(s, d, 1.0);
            }
            [src, dst, w] => {
                let weight: f64 = w.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid weight `{w}`"),
                })?;
                if !(weight > 0.0 && weight.is_finite()) {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("weight must be positive and finite, got `{w}`"),
                    });
                }
                let s = b.intern(src);
                let d = b.intern(dst);
                b.add_edge(s, d, weight);
            }
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!(
                        "expected `src dst [weight]` or `v label`, found {} token(s)",
                        tokens.len()
                    ),
                });
            }
        }
    }
    Ok(b.build())
}
