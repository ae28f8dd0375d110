//! Edge open packing in graphs.
//!
//! Two edges of a graph have a *common edge* when a third edge joins an
//! endpoint of one to an endpoint of the other. An edge open packing (EOP)
//! set contains no such pair, and the EOP number `ρ_e^o(G)` is the largest
//! size of one. This crate provides
//!
//! * the graph substrate and the common-edge relation ([`graph`], [`packing`],
//!   [`structure`]),
//! * an exact branch-and-bound oracle for general graphs ([`exact`]),
//! * a linear-time dynamic program for trees with witness reconstruction
//!   ([`tree`]),
//! * the three reductions from independent set and their identity checks
//!   ([`gadgets`]),
//! * the `m/δ` bound, its extremal family and edge-removal bounds
//!   ([`bounds`]),
//! * the plain-text graph, witness and name-map formats ([`format`]).

mod bitset;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod format;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod packing;
pub mod structure;
pub mod tree;

pub use error::{Error, Result};
pub use exact::{Budget, SolveResult};
pub use graph::{Edge, Graph};
pub use packing::EopSet;
