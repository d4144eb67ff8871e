//! Degree spread of simple graphs.
//!
//! For a vertex set `B` of a graph `G`, the spread of `B` is the difference
//! between the largest and smallest host-graph degree in `B`. The parameter
//! `sp(G, k)` is the largest size of a vertex set with spread at most `k`;
//! `rep(G) = sp(G, 0)` is the largest multiplicity in the degree sequence.
//!
//! This crate computes `sp` with witnesses, evaluates the known lower and
//! upper bounds for it exactly, generates the extremal tree and maximal
//! outerplanar families, and exhaustively searches small graph classes for
//! exact extremal values. It is `no_std` and only needs `alloc`; IO, the
//! command line and the threaded shard runner live in the `degspread` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod formats;
pub mod graph;
pub mod spread;
pub mod verify;

pub use bounds::{BoundEntry, BoundKind, BoundReport, GraphStats, Rational};
pub use constructions::{ClassCheck, ConstructionSpec, Family, ValidationReport};
pub use enumeration::{GraphClass, SearchRecord};
pub use error::{Error, ParseError};
pub use formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use graph::{DegreeCensus, DegreeSequence, Graph};
pub use spread::{rep, sp, sp_bruteforce, spread_of_set, SpreadResult};
