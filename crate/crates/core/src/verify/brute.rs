//! Exhaustive ground truth over all `2^n` subsets.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracles::MatroidPair;
use crate::solvers::{SizeOptimum, SolveReport};
use crate::subset::{SubsetMask, Weighting};
use crate::zoo::MatroidSpec;

pub const DEFAULT_MAX_N: usize = 24;

/// Overrides [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "RMI_BRUTE_FORCE_MAX_N";

/// The enumeration budget, from [`MAX_N_ENV`] when set to a number.
pub fn budget() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceResult {
    /// Maximum weight at every size from 0 to `max_cardinality`, with the
    /// lowest-mask set attaining it.
    pub per_size: Vec<SizeOptimum>,
    /// Maximum weight overall, ties going to the larger size.
    pub best: SizeOptimum,
    pub max_cardinality: usize,
    /// `min_Z r_1(Z) + r_2(E - Z)`.
    pub duality_min: usize,
    pub duality_argmin: SubsetMask,
}

/// Rank of every subset, indexed by mask.
pub fn rank_table(m: &MatroidSpec) -> Vec<u8> {
    let n = m.ground_size();
    let mut rank = vec![0u8; 1 << n];
    for bits in 1u64..1 << n {
        let x = SubsetMask::from_bits(bits);
        let low = bits.trailing_zeros() as usize;
        let below = rank[(bits & (bits - 1)) as usize];
        // independent sets are closed under removal, so test only when the rest is
        rank[bits as usize] = if below as usize == x.len() - 1 && m.is_independent(x) {
            x.len() as u8
        } else {
            x.iter()
                .filter(|&e| e != low)
                .map(|e| rank[(bits & !(1 << e)) as usize])
                .fold(below, u8::max)
        };
    }
    rank
}

pub fn brute_force(pair: &MatroidPair<'_>, w: &Weighting) -> Result<BruteForceResult> {
    brute_force_with_budget(pair, w, budget())
}

pub fn brute_force_with_budget(
    pair: &MatroidPair<'_>,
    w: &Weighting,
    max_n: usize,
) -> Result<BruteForceResult> {
    let n = pair.n();
    if n > max_n.min(30) {
        return Err(Error::Budget {
            n,
            limit: max_n.min(30),
        });
    }
    if w.len() != n {
        return Err(Error::Contract(format!(
            "{} weights for {n} elements",
            w.len()
        )));
    }
    let r1 = rank_table(pair.m1);
    let r2 = rank_table(pair.m2);
    let full = SubsetMask::full(n).bits();

    let mut per_size: Vec<Option<SizeOptimum>> = vec![None; n + 1];
    let mut duality_min = usize::MAX;
    let mut duality_argmin = SubsetMask::EMPTY;
    for bits in 0..=full {
        let x = SubsetMask::from_bits(bits);
        let size = x.len();
        if r1[bits as usize] as usize == size && r2[bits as usize] as usize == size {
            let weight = w.total(x);
            let slot = &mut per_size[size];
            if slot.as_ref().is_none_or(|cur| weight > cur.weight) {
                *slot = Some(SizeOptimum {
                    size,
                    set: x,
                    weight,
                });
            }
        }
        let value = r1[bits as usize] as usize + r2[(full & !bits) as usize] as usize;
        if value < duality_min {
            duality_min = value;
            duality_argmin = x;
        }
    }
    let per_size: Vec<SizeOptimum> = per_size.into_iter().map_while(|s| s).collect();
    let best = per_size
        .iter()
        .max_by_key(|s| s.weight)
        .expect("the empty set is common independent")
        .clone();
    Ok(BruteForceResult {
        max_cardinality: per_size.len() - 1,
        per_size,
        best,
        duality_min,
        duality_argmin,
    })
}

impl BruteForceResult {
    /// Differences between a solver report and this ground truth. Sets may
    /// differ where several attain the optimum; weights, sizes and common
    /// independence may not.
    pub fn compare(&self, pair: &MatroidPair<'_>, report: &SolveReport) -> Vec<String> {
        let mut issues = Vec::new();
        if report.max_cardinality != self.max_cardinality {
            issues.push(format!(
                "max cardinality {} but brute force finds {}",
                report.max_cardinality, self.max_cardinality
            ));
        }
        for (k, found) in report.per_size.iter().enumerate() {
            if found.size != k || found.set.len() != k {
                issues.push(format!("size {k} entry holds {}", found.set));
            }
            if !pair.is_common_independent(found.set) {
                issues.push(format!(
                    "size {k} set {} is not common independent",
                    found.set
                ));
            }
        }
        if report.weighted {
            for (found, truth) in report.per_size.iter().zip(&self.per_size) {
                if found.weight != truth.weight {
                    issues.push(format!(
                        "size {} weight {} but brute force finds {}",
                        truth.size, found.weight, truth.weight
                    ));
                }
            }
            if report.best.weight != self.best.weight {
                issues.push(format!(
                    "best weight {} but brute force finds {}",
                    report.best.weight, self.best.weight
                ));
            }
        }
        issues
    }
}
