//! Matroid intersection under restricted oracles.
//!
//! Two matroids on a common ground set of at most 64 elements are hidden behind
//! a [`RestrictedOracle`] that answers one kind of query: rank sum, minimum or
//! maximum rank, common independence, or common independence together with
//! maximum rank. The solvers in [`solvers`] find maximum-weight or
//! maximum-cardinality common independent sets through those interfaces
//! alone. [`refgraph`] and [`verify`] provide full-access reference answers.

pub mod error;
pub mod generate;
pub mod instance;
pub mod matroid;
pub mod oracles;
pub mod refgraph;
pub mod session;
pub mod solvers;
pub mod subset;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use oracles::{
    CiOracle, MatroidPair, OracleKind, QueryCounts, RestrictedOracle, ShapeCounts, ShapeOracle,
    SumQueryCapability,
};
pub use solvers::{PathSeq, SolveReport, SolveStats, SolverKind};
pub use subset::{GroundSet, SubsetMask, Weighting};
pub use zoo::{
    GraphRepresentation, MatroidKind, MatroidSpec, PartitionRepresentation, SplitRepresentation,
};
