//! Intersection solvers over restricted oracles.

pub mod ci_partition;
pub mod ci_split;
pub mod path;
pub mod rank_sum;
pub mod report;

pub use ci_partition::{augment_ci_partition, emulating_bfs, solve_ci_partition, BfsTrace};
pub use ci_split::{augment_ci_split, solve_ci_split};
pub use path::PathSeq;
pub use rank_sum::{
    cheapest_path_augment_rank_sum, emulating_bellman_ford, solve_ci_max, solve_rank_sum,
    solve_shapes, BellmanFordOutcome,
};
pub use report::{SizeOptimum, SolveReport, SolveStats, SolverKind};

use crate::error::{Error, Result};
use crate::oracles::{OracleKind, RestrictedOracle};
use crate::refgraph;
use crate::subset::{SubsetMask, Weighting};

/// An augmenting sequence and the set it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentingPath {
    pub path: PathSeq,
    pub set: SubsetMask,
}

fn weights_or_zero(w: Option<&Weighting>, n: usize) -> Result<Weighting> {
    match w {
        Some(w) if w.len() != n => Err(Error::Contract(format!(
            "{} weights for {n} elements",
            w.len()
        ))),
        Some(w) => Ok(w.clone()),
        None => Ok(Weighting::zeros(n)),
    }
}

/// Reference solver on explicit exchange graphs. Accepts `FullPair` only.
pub fn solve_full(oracle: RestrictedOracle<'_>, w: Option<&Weighting>) -> Result<SolveReport> {
    let pair = oracle.full_pair()?;
    let n = pair.n();
    let weights = weights_or_zero(w, n)?;
    let (chain, certificate) = refgraph::solve_full(&pair, &weights)?;
    let stats = SolveStats {
        oracle_kind: OracleKind::FullPair,
        queries: oracle.counts(),
        shape_queries: None,
        augmentations: chain.len() - 1,
        n,
    };
    Ok(SolveReport::from_chain(
        SolverKind::Full,
        &weights,
        w.is_some(),
        &chain,
        Some(certificate),
        stats,
    ))
}
