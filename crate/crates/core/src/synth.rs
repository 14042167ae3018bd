//! Seeded synthetic graphs for tests and benchmarks. Same seed, same graph,
//! on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{DirectedGraph, GraphBuilder, NodeId};

/// Erdős–Rényi style digraph: every ordered pair of distinct nodes gets an
/// edge with probability `edge_prob`. Nodes are labeled `n0`, `n1`, ...;
/// isolated ones are kept.
pub fn er_digraph(nodes: usize, edge_prob: f64, seed: u64) -> DirectedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for i in 0..nodes {
        b.intern(&format!("n{i}"));
    }
    for u in 0..nodes {
        for v in 0..nodes {
            if u != v && rng.random_bool(edge_prob) {
                b.add_edge(NodeId(u as u32), NodeId(v as u32), 1.0);
            }
        }
    }
    b.build().0
}

/// A sparse graph of `clusters` disjoint 20-node clusters, built to give the
/// pruning stages something realistic to chew on. Each cluster is a strongly
/// connected 14-node body (a directed cycle plus random chords) feeding a
/// small acyclic tail. Every body node reaches the body and the tail's
/// diamond, 18 nodes, so closure pruning wipes the bodies out for small
/// pattern sizes, while the tails survive as many separate weak components
/// with genuine patterns in them.
pub fn clustered_digraph(clusters: usize, seed: u64) -> DirectedGraph {
    const BODY: usize = 14;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for c in 0..clusters {
        let mut body = Vec::with_capacity(BODY);
        for i in 0..BODY {
            body.push(b.intern(&format!("c{c}b{i}")));
        }
        let tail: Vec<NodeId> = (0..6).map(|i| b.intern(&format!("c{c}t{i}"))).collect();

        // Spanning cycle keeps the body strongly connected regardless of
        // which chords the generator picks.
        for i in 0..BODY {
            b.add_edge(body[i], body[(i + 1) % BODY], 1.0);
        }
        for _ in 0..18 {
            let u = rng.random_range(0..BODY);
            let v = rng.random_range(0..BODY);
            if u != v {
                b.add_edge(body[u], body[v], 1.0);
            }
        }

        // The tail: a diamond plus a short stalk, all draining into t3.
        b.add_edge(body[0], tail[0], 1.0);
        b.add_edge(tail[0], tail[1], 1.0);
        b.add_edge(tail[0], tail[2], 1.0);
        b.add_edge(tail[1], tail[3], 1.0);
        b.add_edge(tail[2], tail[3], 1.0);
        b.add_edge(tail[4], tail[3], 1.0);
        b.add_edge(tail[5], tail[4], 1.0);
    }
    b.build().0
}
