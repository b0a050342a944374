//! Exact enumeration and counting of fair dominating sets.
//!
//! A set `D` of vertices is a *k-fair dominating set* when every vertex
//! outside `D` has exactly `k >= 1` neighbors in `D`; it is *fair* when it is
//! k-fair for some `k`. The whole vertex set counts as fair.
//!
//! - [`graph`], [`families`], [`edgelist`]: graphs and how to build them.
//! - [`engine`]: the brute-force oracle (counts, listings, polynomials, fd numbers).
//! - [`combinatorics`]: binomials, multinomials, partitions, cycle block counts.
//! - [`closed_forms`]: counting theorems for named families.
//! - [`verify`]: cross-checks formulas and published tables against the oracle.

pub mod closed_forms;
pub mod combinatorics;
pub mod edgelist;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod poly;
pub mod tables;
pub mod verify;

pub use engine::{classify, Engine, Fairness, DEFAULT_CAP};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Distance, Graph, VertexSet};
pub use poly::{Count, FairDomPolynomial};
