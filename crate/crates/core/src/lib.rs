//! Edge-set graphs of small connected graphs.
//!
//! The edge-set graph of `G` has one vertex per nonempty subset of `E(G)`;
//! two subsets are adjacent when some edge of one shares an endpoint with
//! some edge of the other. This crate builds it, computes its degrees in
//! closed form, relates it to the set-graph on the same number of elements,
//! and checks a catalogue of claims about it against brute force.

pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub mod esg;
pub mod oracle;
pub mod subset;
pub mod domination;
pub mod edge_degree;
pub mod claims;
