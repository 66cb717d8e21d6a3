//! Cardinality intersection from common-independence answers alone, when the
//! first matroid is a partition matroid with all-one capacities.

use crate::error::Result;
use crate::oracles::{CiOracle, RestrictedOracle};
use crate::subset::{SubsetMask, Weighting};

use super::path::PathSeq;
use super::report::{SolveReport, SolveStats, SolverKind};
use super::AugmentingPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTrace {
    pub path: Option<PathSeq>,
    /// Final label `P_y` of every element; only elements of `I` are ever set.
    pub labels: Vec<Option<PathSeq>>,
}

/// Breadth-first search from `s` in the pruned exchange graph, decided by
/// common-independence queries. Returns a sequence `P` with `I xor P` common
/// independent of size `|I| + 1`, if it finds one.
pub fn emulating_bfs(ci: &mut CiOracle<'_>, i: SubsetMask, s: usize) -> BfsTrace {
    let n = ci.n();
    let mut labels: Vec<Option<PathSeq>> = vec![None; n];
    let root = PathSeq::single(s);
    if ci.is_common_independent(i.with(s)) {
        return BfsTrace {
            path: Some(root),
            labels,
        };
    }
    for y in i.iter() {
        if ci.is_common_independent(i.with(s).without(y)) {
            labels[y] = Some(root.extended(y));
        }
    }
    let outside = i.complement(n);
    for level in 1..=n {
        let frontier: Vec<PathSeq> = i
            .iter()
            .filter_map(|y| labels[y].clone())
            .filter(|p| p.len() == 2 * level)
            .collect();
        if frontier.is_empty() {
            break;
        }
        let mut frontier_sorted = frontier;
        frontier_sorted.sort_by(|a, b| a.elements().cmp(b.elements()));

        for head in &frontier_sorted {
            let y_prev = head.last();
            for x in (outside - head.as_set()).iter() {
                let pair = SubsetMask::singleton(y_prev).with(x);
                if !ci.is_common_independent(pair)
                    && ci.is_common_independent(i ^ head.as_set().with(x))
                {
                    return BfsTrace {
                        path: Some(head.extended(x)),
                        labels,
                    };
                }
            }
        }

        let unlabeled: Vec<usize> = i.iter().filter(|&y| labels[y].is_none()).collect();
        for y in unlabeled {
            'search: for head in &frontier_sorted {
                let y_prev = head.last();
                for x in (outside - head.as_set()).iter() {
                    let pair = SubsetMask::singleton(y_prev).with(x);
                    if !ci.is_common_independent(pair)
                        && ci.is_common_independent(i ^ head.as_set().with(x).with(y))
                    {
                        labels[y] = Some(head.extended(x).extended(y));
                        break 'search;
                    }
                }
            }
        }
    }
    BfsTrace { path: None, labels }
}

/// A common independent set one larger than `i`, or `None` when `i` is maximum.
pub fn augment_ci_partition(ci: &mut CiOracle<'_>, i: SubsetMask) -> Option<AugmentingPath> {
    let outside = i.complement(ci.n());
    if let Some(x) = outside
        .iter()
        .find(|&x| ci.is_common_independent(i.with(x)))
    {
        return Some(AugmentingPath {
            set: i.with(x),
            path: PathSeq::single(x),
        });
    }
    outside.iter().find_map(|s| {
        emulating_bfs(ci, i, s).path.map(|path| AugmentingPath {
            set: i ^ path.as_set(),
            path,
        })
    })
}

/// Maximum-cardinality solver. Accepts `Ci`, `CiPlusMax` or `FullPair`; the
/// all-one partition structure of the first matroid is trusted, not checked.
pub fn solve_ci_partition(oracle: RestrictedOracle<'_>) -> Result<SolveReport> {
    let mut ci = CiOracle::new(oracle)?;
    let n = ci.n();
    let mut chain = vec![SubsetMask::EMPTY];
    let mut current = SubsetMask::EMPTY;
    while let Some(step) = augment_ci_partition(&mut ci, current) {
        current = step.set;
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
        SolverKind::CiPartition,
        &Weighting::zeros(n),
        false,
        &chain,
        None,
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{MatroidPair, OracleKind};
    use crate::refgraph::{bfs_distances, build_exchange_graph, GraphVariant};
    use crate::zoo::{self, MatroidSpec, PartitionRepresentation};

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied())
    }

    fn k22() -> (MatroidSpec, MatroidSpec) {
        let left = zoo::partition(
            4,
            PartitionRepresentation::all_one(vec![set(&[0, 1]), set(&[2, 3])]),
        )
        .unwrap();
        let right = zoo::partition(
            4,
            PartitionRepresentation::all_one(vec![set(&[0, 2]), set(&[1, 3])]),
        )
        .unwrap();
        (left, right)
    }

    fn ci(pair: MatroidPair<'_>) -> CiOracle<'_> {
        CiOracle::new(RestrictedOracle::new(pair, OracleKind::Ci)).unwrap()
    }

    #[test]
    fn step_one_returns_root() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let trace = emulating_bfs(&mut ci(pair), SubsetMask::EMPTY, 1);
        assert_eq!(trace.path.unwrap().elements(), &[1]);
    }

    #[test]
    fn k22_three_element_path() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let i = set(&[0]);
        // element 1 = e01 is a sink only, element 2 = e10 a source only
        let g = build_exchange_graph(&pair, i, GraphVariant::Pruned).unwrap();
        assert!(g.sources().contains(2) && !g.sinks().contains(2));
        let trace = emulating_bfs(&mut ci(pair), i, 2);
        let path = trace.path.unwrap();
        assert_eq!(path.elements(), &[2, 0, 1]);
        assert_eq!(i ^ path.as_set(), set(&[1, 2]));
        let dist = bfs_distances(&g, 2);
        assert_eq!(dist[0], Some(trace.labels[0].as_ref().unwrap().len()));
        assert_eq!(dist[1], Some(path.len()));
    }

    #[test]
    fn exhausted_search() {
        let p = zoo::partition(3, PartitionRepresentation::all_one(vec![set(&[0, 1, 2])])).unwrap();
        let u = zoo::uniform(3, 1).unwrap();
        let pair = MatroidPair::new(&p, &u).unwrap();
        let mut o = ci(pair);
        assert!(emulating_bfs(&mut o, set(&[0]), 1).path.is_none());
        assert!(augment_ci_partition(&mut o, set(&[0])).is_none());
    }

    #[test]
    fn driver_counts_only_ci() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let report = solve_ci_partition(RestrictedOracle::new(pair, OracleKind::Ci)).unwrap();
        assert_eq!(report.max_cardinality, 2);
        assert!(pair.is_common_independent(report.max_cardinality_set()));
        let q = report.stats.queries;
        assert_eq!(q.sum + q.min + q.max, 0);
        assert!(!report.weighted);
        for kind in [OracleKind::Sum, OracleKind::Min, OracleKind::Max] {
            assert!(solve_ci_partition(RestrictedOracle::new(pair, kind)).is_err());
        }
    }
}
