use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across loading, validation, and mining.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("node id {id} out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { id: u32, node_count: usize },

    #[error("node set must not be empty")]
    EmptyNodeSet,

    #[error("closure cap must be at least 1")]
    InvalidCap,

    #[error("pattern size must be at least 1")]
    InvalidSize,

    #[error("ratio threshold must be positive and finite, got {theta}")]
    InvalidTheta { theta: f64 },

    #[error("search space too large: {candidates} candidate sets exceed the guard limit of {limit}")]
    SearchSpaceTooLarge { candidates: u128, limit: u64 },

    #[error("lag {lag} out of range for series of length {len}")]
    InvalidLag { lag: usize, len: usize },

    #[error("series length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("row {row}: {message}")]
    PriceCsv { row: usize, message: String },

    #[error("invalid price matrix: {0}")]
    PriceData(String),

    #[error("need at least 2 instruments to build a stock graph, got {count}")]
    TooFewInstruments { count: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
