//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Edge endpoints are invalid for the given node count (self-loop or out of range).
    #[error("invalid edge ({u}, {v}) for graph on {n} nodes: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        n: usize,
        reason: &'static str,
    },

    /// Attempt to add an edge that is already present.
    #[error("edge ({0}, {1}) already exists")]
    EdgeExists(usize, usize),

    /// Attempt to remove an edge that is not present.
    #[error("edge ({0}, {1}) is not present")]
    EdgeMissing(usize, usize),

    /// Generator or experiment parameters out of their documented bounds.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// Induced subgraph requested on an empty or out-of-range node set.
    #[error("invalid node subset: {0}")]
    InvalidSubset(String),

    /// Edge-list document failed to parse.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Matrix handed to the eigensolver is not square.
    #[error("matrix is not square: {rows} x {cols}")]
    ShapeError { rows: usize, cols: usize },

    /// Matrix deviates from symmetry beyond the requested tolerance.
    #[error("matrix is not symmetric: max |a_ij - a_ji| = {max_deviation:e}")]
    NotSymmetric { max_deviation: f64 },

    /// QL iteration failed to converge (practically unreachable for symmetric input).
    #[error("eigenvalue iteration failed to converge at index {0}")]
    NoConvergence(usize),

    /// Operation requires a connected graph.
    #[error("graph is disconnected ({components} components); eigenratio undefined")]
    DisconnectedGraph { components: usize },

    /// Split-complement formula requested for a graph whose complement is connected.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Exhaustive enumeration refused: too many labeled edge subsets.
    #[error("desk scale exceeded for n = {n}: refusing to enumerate 2^{pairs} = {subsets} edge subsets")]
    DeskScaleExceeded { n: usize, pairs: usize, subsets: u128 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
