//! Mining blackholes and volcanoes in directed graphs.
//!
//! A *blackhole* is a weakly connected set of nodes that edges lead into but
//! never out of; a *volcano* is the mirror image, a set edges only leave.
//! Finding all of them up to a given size is a subset-search problem, and
//! this crate implements it three ways: a brute-force search that doubles as
//! a correctness oracle, a pruned search that cuts the universe down before
//! enumerating ([`mine_iblackhole`]), and a divide-and-conquer variant that
//! additionally splits the search across weak components
//! ([`mine_iblackhole_dc`]). All three return identical pattern lists.
//!
//! The [`stock`] module builds the kind of graph this was designed for:
//! directed lagged-correlation networks over daily price series, where a
//! blackhole is a group of instruments that follows the market but leads
//! nobody outside itself.

pub mod error;
pub mod graph;
pub mod mine;
pub mod pattern;
pub mod prune;
pub mod stock;
pub mod synth;

pub use error::{Error, Result};
pub use graph::{
    load_edge_list, DirectedGraph, Edge, GraphBuilder, LoadReport, NodeId, NodeSet,
};
pub use mine::{
    mine, mine_brute_force, mine_iblackhole, mine_iblackhole_dc, Algorithm, MiningConfig,
    PatternResult, DEFAULT_GUARD_LIMIT,
};
pub use pattern::{
    boundary_weights, dualize, is_simplified_blackhole, is_simplified_volcano, satisfies_ratio,
    PatternKind, WeightSummary,
};
pub use prune::{
    candidate_list, final_list, potential_list, prune_level, prune_stats, PruneLevel, PruneReport,
    PruneStats,
};
pub use stock::{
    build_stock_graph, build_stock_graph_raw, lagged_correlation, lagged_pearson, load_prices,
    movements, MovementMatrix, PriceLoad, PriceMatrix, RejectedRow,
};
