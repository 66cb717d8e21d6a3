//! Solver output records.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::oracles::{OracleKind, QueryCounts, ShapeCounts};
use crate::subset::{SubsetMask, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverKind {
    /// Rank-sum Bellman–Ford emulation over a `Sum` oracle.
    Sum,
    /// BFS emulation over `CI`, for an all-one partition first matroid.
    CiPartition,
    /// Neighborhood search over `CI`, for an elementary split first matroid.
    CiSplit,
    /// The rank-sum search with shapes answered by `CI` and `Max`.
    CiMax,
    /// Explicit exchange graphs over full access.
    Full,
}

impl SolverKind {
    pub const ALL: [SolverKind; 5] = [
        SolverKind::Sum,
        SolverKind::CiPartition,
        SolverKind::CiSplit,
        SolverKind::CiMax,
        SolverKind::Full,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Sum => "sum",
            SolverKind::CiPartition => "ci-partition",
            SolverKind::CiSplit => "ci-split",
            SolverKind::CiMax => "ci-max",
            SolverKind::Full => "full",
        }
    }

    /// The oracle the solver runs against.
    pub fn oracle_kind(self) -> OracleKind {
        match self {
            SolverKind::Sum => OracleKind::Sum,
            SolverKind::CiPartition | SolverKind::CiSplit => OracleKind::Ci,
            SolverKind::CiMax => OracleKind::CiPlusMax,
            SolverKind::Full => OracleKind::FullPair,
        }
    }

    pub fn supports_weights(self) -> bool {
        self != SolverKind::CiPartition
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown solver `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeOptimum {
    pub size: usize,
    pub set: SubsetMask,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub oracle_kind: OracleKind,
    pub queries: QueryCounts,
    /// Shape questions of the rank-sum search, when it ran.
    pub shape_queries: Option<ShapeCounts>,
    pub augmentations: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub solver: SolverKind,
    pub weighted: bool,
    pub n: usize,
    /// The set found at every size from 0 to the maximum cardinality.
    pub per_size: Vec<SizeOptimum>,
    /// Maximum weight over `per_size`, ties going to the larger set.
    pub best: SizeOptimum,
    pub max_cardinality: usize,
    pub certificate: Option<SubsetMask>,
    pub stats: SolveStats,
}

impl SolveReport {
    pub(crate) fn from_chain(
        solver: SolverKind,
        w: &Weighting,
        weighted: bool,
        chain: &[SubsetMask],
        certificate: Option<SubsetMask>,
        stats: SolveStats,
    ) -> Self {
        let per_size: Vec<SizeOptimum> = chain
            .iter()
            .map(|&set| SizeOptimum {
                size: set.len(),
                set,
                weight: w.total(set),
            })
            .collect();
        let best = per_size
            .iter()
            .max_by_key(|s| s.weight)
            .expect("the chain starts at the empty set")
            .clone();
        SolveReport {
            solver,
            weighted,
            n: stats.n,
            max_cardinality: per_size.len() - 1,
            per_size,
            best,
            certificate,
            stats,
        }
    }

    pub fn max_cardinality_set(&self) -> SubsetMask {
        self.per_size[self.max_cardinality].set
    }

    /// Same sets, weights and per-size table, ignoring solver and counters.
    pub fn same_solution(&self, other: &SolveReport) -> bool {
        self.weighted == other.weighted
            && self.n == other.n
            && self.per_size == other.per_size
            && self.best == other.best
            && self.max_cardinality == other.max_cardinality
    }
}
