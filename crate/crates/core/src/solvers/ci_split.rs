//! Weighted intersection from common-independence answers when the first
//! matroid is an elementary split matroid. Some cheapest augmenting path has
//! at most three elements, so every set within one or two swaps of `I` is tried.

use crate::error::Result;
use crate::oracles::{CiOracle, RestrictedOracle};
use crate::subset::{SubsetMask, Weighting};

use super::report::{SolveReport, SolveStats, SolverKind};

/// The heaviest common independent `I + x` or `I + x1 + x2 - y`, preferring
/// the smaller change and then the smaller mask on equal weight.
pub fn augment_ci_split(ci: &mut CiOracle<'_>, w: &Weighting, i: SubsetMask) -> Option<SubsetMask> {
    let outside: Vec<usize> = i.complement(ci.n()).iter().collect();
    let mut candidates: Vec<SubsetMask> = outside.iter().map(|&x| i.with(x)).collect();
    for (a, &x1) in outside.iter().enumerate() {
        for &x2 in &outside[a + 1..] {
            candidates.extend(i.iter().map(|y| i.with(x1).with(x2).without(y)));
        }
    }
    candidates.sort_by_key(|&j| (std::cmp::Reverse(w.total(j)), (j ^ i).len(), j));
    candidates
        .into_iter()
        .find(|&j| ci.is_common_independent(j))
}

/// Weighted solver. Accepts `Ci`, `CiPlusMax` or `FullPair`; the split
/// structure of the first matroid is trusted, not checked.
pub fn solve_ci_split(oracle: RestrictedOracle<'_>, w: Option<&Weighting>) -> Result<SolveReport> {
    let mut ci = CiOracle::new(oracle)?;
    let n = ci.n();
    let weights = super::weights_or_zero(w, n)?;
    let mut chain = vec![SubsetMask::EMPTY];
    let mut current = SubsetMask::EMPTY;
    while let Some(next) = augment_ci_split(&mut ci, &weights, current) {
        current = next;
        chain.push(current);
    }
    let stats = SolveStats {
        oracle_kind: ci.oracle().kind(),
        queries: ci.oracle().counts(),
        shape_queries: None,
        augmentations: chain.len() - 1,
        n,
    };
    Ok(SolveReport::from_chain(
        SolverKind::CiSplit,
        &weights,
        w.is_some(),
        &chain,
        None,
        stats,
    ))
}
