//! Steiner `k`-Wiener index of block graphs.
//!
//! `SW_k(G)` sums the Steiner distance over all `k`-subsets of vertices. On
//! block graphs it can be computed in polynomial time from component sizes
//! ([`decompositions`]); the exponential [`oracle`] computes it directly on
//! any small connected graph. [`closed_forms`] covers special families and
//! [`extremal`] explores families with a fixed block order sequence.
//!
//! Index values are exact integers of any [`Scalar`] type; [`Value`] and
//! [`Betweenness`] are the unbounded defaults.
//!
//! ```
//! use swk_core::{decompositions::sw_vertex_decomposition, graph::windmill, Value};
//!
//! let bowtie = windmill(3, 2).unwrap();
//! assert_eq!(sw_vertex_decomposition::<Value>(&bowtie, 3).unwrap(), Value::from(24));
//! ```

pub mod closed_forms;
pub mod combinatorics;
pub mod decompositions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod scalar;
pub mod subsets;

pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::Scalar;

/// Unbounded exact index value.
pub type Value = num_bigint::BigInt;

/// Unbounded exact rational, for betweenness.
pub type Betweenness = num_rational::BigRational;
