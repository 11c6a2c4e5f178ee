//! Spectral extremal analysis of degenerate graphs.
//!
//! The crate answers one family of questions: how large can the signless
//! Laplacian spectral radius (the Q-index) or the adjacency spectral radius
//! of a graph get, given its order and a degeneracy constraint, and which
//! graphs attain the maximum?
//!
//! - [`graph`] — small simple graphs as bitset adjacency rows, degeneracy
//!   orderings, the extremal split graphs `S(n, k)`, and greedy completion
//!   to maximal k-degenerate graphs.
//! - [`edgelist`] / [`graph6`] — plain-text and graph6 interchange formats.
//! - [`canon`] — a canonical form for graphs of order at most 8, used to
//!   detect isomorphism during exhaustive scans.
//! - [`spectral`] — a deterministic Jacobi eigensolver plus the Q-index,
//!   adjacency index, and row-sum diagnostics built on it.
//! - [`bounds`] — closed-form upper bounds on the two indices in terms of
//!   order, size, and extreme degrees, with equality certificates.
//! - [`search`] — exhaustive and randomized verification sweeps that check
//!   the bounds and the extremal claims over entire graph classes.

pub mod bounds;
pub mod canon;
pub mod edgelist;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectral;

pub use graph::{DegeneracyOrdering, DegreeProfile, Graph, GraphError};
