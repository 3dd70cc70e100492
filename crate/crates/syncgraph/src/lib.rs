//! Graph synchronizability analysis toolkit.
//!
//! The synchronizability of a diffusively coupled network is characterized by
//! the eigenratio r = λ2/λN of its Laplacian matrix, where
//! 0 = λ1 < λ2 ≤ … ≤ λN are the Laplacian eigenvalues of the (connected)
//! underlying graph. The larger r, the more synchronizable the network.
//!
//! This crate provides:
//!
//! - [`graph`] — simple undirected labeled graphs, generators (cycles, complete,
//!   complete bipartite, Petersen, preferential attachment), complementation,
//!   induced subgraphs, and an edge-list text format;
//! - [`spectra`] — a self-contained symmetric eigensolver, Laplacian spectra,
//!   eigenratio reports, the closed-form cycle spectrum, and the
//!   complement-spectrum identity;
//! - [`metrics`] — betweenness centrality, distance statistics, degree
//!   homogeneity, clustering;
//! - [`verify`] — executable checks of the spectral facts this toolkit is
//!   built around (edge monotonicity, degree bounds, λ2 preservation,
//!   complement identities, the even-cycle bound, the cycle chord theorem,
//!   and randomized eigenratio bounds);
//! - [`experiments`] — edge-addition trajectories: add edges to a seed graph by
//!   a strategy and record the eigenratio after every addition;
//! - [`search`] — exhaustive best-eigenratio tables over all connected labeled
//!   graphs at small n, and simulated-annealing topology optimization;
//! - [`cli`] — the command-line front end.
//!
//! All operations are deterministic: randomized routines take explicit 64-bit
//! seeds and use a fixed, portable generator (ChaCha8), and parallel reductions
//! are order-independent, so outputs do not depend on thread count.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod metrics;
pub mod search;
pub mod spectra;
#[cfg(test)]
pub(crate) mod testutil;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, GeneratorSpec};
pub use spectra::{Spectrum, SyncReport};
