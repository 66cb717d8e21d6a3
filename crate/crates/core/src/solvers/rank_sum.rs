//! Weighted intersection through rank-sum shape questions.
//!
//! [`emulating_bellman_ford`] grows labels `P_e` from one source exactly as
//! Bellman–Ford would in the pruned exchange graph, but decides every arc
//! from rank-sum answers alone. Every question goes through
//! [`SumQueryCapability`], so the same code runs over a `Sum` oracle and over
//! `CI` plus `Max`.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracles::{MatroidPair, OracleKind, RestrictedOracle, ShapeOracle, SumQueryCapability};
use crate::refgraph::{build_exchange_graph, element_costs, ExchangeGraph, GraphVariant};
use crate::subset::{SubsetMask, Weighting};
use crate::zoo::MatroidSpec;

use super::path::{strictly_cheaper, Costed, PathSeq};
use super::report::{SolveReport, SolveStats, SolverKind};
use super::AugmentingPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellmanFordOutcome {
    pub path: Option<PathSeq>,
    /// Final label `P_e` of every element.
    pub labels: Vec<Option<PathSeq>>,
}

/// `r_sum(I + x) - 2|I|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Growth {
    Zero,
    One,
    Two,
}

/// Full-access checks of the search invariants, active only when the
/// capability carries an audit pair.
struct Audit {
    m1: MatroidSpec,
    m2: MatroidSpec,
    graph: ExchangeGraph,
    from_source: bool,
}

impl Audit {
    fn new(pair: MatroidPair<'_>, i: SubsetMask, s: usize) -> Self {
        let graph = build_exchange_graph(&pair, i, GraphVariant::Pruned)
            .expect("search base must be common independent");
        let from_source = graph.sources().contains(s);
        assert!(
            from_source || graph.sinks().contains(s),
            "search root {s} is neither a source nor a sink of {i}"
        );
        Audit {
            m1: pair.m1.clone(),
            m2: pair.m2.clone(),
            graph,
            from_source,
        }
    }

    fn check_label(&self, path: &PathSeq) {
        let i = self.graph.base();
        let j = i ^ path.as_set();
        if i.contains(path.last()) {
            assert_eq!(j.len(), i.len(), "label {path} changes the size of {i}");
            assert!(
                self.m1.is_independent(j) && self.m2.is_independent(j),
                "label {path} leaves {j}, which is not common independent"
            );
        } else {
            assert_eq!(j.len(), i.len() + 1, "label {path} does not grow {i}");
            let near = if self.from_source { &self.m1 } else { &self.m2 };
            assert!(near.is_independent(j), "label {path} leaves {j} dependent");
        }
    }

    /// Extending `P_x` by `y`.
    fn check_odd(&self, x: usize, y: usize, accepted: bool) {
        let arc = if self.from_source {
            self.graph.has_arc(x, y)
        } else {
            self.graph.has_arc(y, x)
        };
        assert_eq!(
            accepted, arc,
            "odd-round test for ({x},{y}) disagrees with D'[I]"
        );
    }

    /// Extending `P_y` by `x`.
    fn check_even(&self, y: usize, x: usize, accepted: bool) {
        let arc = if self.from_source {
            self.graph.has_arc(y, x)
        } else {
            self.graph.has_arc(x, y)
        };
        assert_eq!(
            accepted, arc,
            "even-round test for ({y},{x}) disagrees with D'[I]"
        );
    }
}

fn sorted_labels(labels: &[Option<Costed>], side: SubsetMask) -> Vec<Costed> {
    let mut out: Vec<Costed> = side.iter().filter_map(|e| labels[e].clone()).collect();
    out.sort_by(|a, b| a.rank_cmp(b));
    out
}

/// Shortest cheapest path from `s` to the far side, for `i` w-maximal at its
/// size and `s` a source or sink of `i`. For a sink the sequence runs against
/// the arcs of the exchange graph.
pub fn emulating_bellman_ford<C: SumQueryCapability + ?Sized>(
    cap: &mut C,
    w: &Weighting,
    i: SubsetMask,
    s: usize,
) -> BellmanFordOutcome {
    let n = w.len();
    let costs = element_costs(w, i);
    let audit = cap.audit().map(|pair| Audit::new(pair, i, s));
    let outside = i.complement(n);

    let growth: Vec<Growth> = (0..n)
        .map(|x| {
            if !outside.contains(x) {
                Growth::Two
            } else if cap.shape_a(i, x) {
                Growth::Zero
            } else if cap.shape_b(i, x) {
                Growth::One
            } else {
                Growth::Two
            }
        })
        .collect();

    let mut labels: Vec<Option<Costed>> = vec![None; n];
    labels[s] = Some(Costed::new(PathSeq::single(s), &costs));

    for round in 1..n {
        let mut changed = false;
        if round % 2 == 1 {
            let candidates = sorted_labels(&labels, outside);
            for y in i.iter() {
                for cand in &candidates {
                    if cand.path.contains(y) {
                        continue;
                    }
                    let cost = cand.cost + costs[y];
                    if !strictly_cheaper(cost, &labels[y]) {
                        break;
                    }
                    let x = cand.path.last();
                    let extended = cand.path.extended(y);
                    let accepted = cap.shape_b(i ^ cand.path.prefix_set(), x)
                        && cap.shape_d(i ^ extended.as_set());
                    if let Some(audit) = &audit {
                        audit.check_odd(x, y, accepted);
                    }
                    if accepted {
                        if let Some(audit) = &audit {
                            audit.check_label(&extended);
                        }
                        labels[y] = Some(Costed {
                            cost,
                            path: extended,
                        });
                        changed = true;
                        break;
                    }
                }
            }
        } else {
            let candidates = sorted_labels(&labels, i);
            for x in outside.iter() {
                for cand in &candidates {
                    if cand.path.contains(x) {
                        continue;
                    }
                    let cost = cand.cost + costs[x];
                    if !strictly_cheaper(cost, &labels[x]) {
                        break;
                    }
                    let y = cand.path.last();
                    let prefix = i ^ cand.path.as_set();
                    let accepted = match growth[x] {
                        Growth::Zero => cap.shape_b(prefix, x),
                        Growth::One => cap.shape_c(prefix, x),
                        Growth::Two => false,
                    };
                    if let Some(audit) = &audit {
                        audit.check_even(y, x, accepted);
                    }
                    if accepted {
                        let extended = cand.path.extended(x);
                        if let Some(audit) = &audit {
                            audit.check_label(&extended);
                        }
                        labels[x] = Some(Costed {
                            cost,
                            path: extended,
                        });
                        changed = true;
                        break;
                    }
                }
            }
        }
        // a round without updates is a fixpoint
        if !changed {
            break;
        }
    }

    let path = sorted_labels(&labels, outside)
        .into_iter()
        .find(|cand| cap.shape_c(i ^ cand.path.prefix_set(), cand.path.last()))
        .map(|cand| cand.path);
    BellmanFordOutcome {
        path,
        labels: labels.into_iter().map(|l| l.map(|c| c.path)).collect(),
    }
}

/// One weighted augmentation for `i` w-maximal at its size: the cheapest,
/// then shortest, then lexicographically first path over every source and sink.
pub fn cheapest_path_augment_rank_sum<C: SumQueryCapability + ?Sized>(
    cap: &mut C,
    w: &Weighting,
    i: SubsetMask,
) -> Option<AugmentingPath> {
    let costs = element_costs(w, i);
    let terminals: Vec<usize> = i
        .complement(w.len())
        .iter()
        .filter(|&s| cap.expands(i, s))
        .collect();
    let mut best: Option<Costed> = None;
    for s in terminals {
        if let Some(path) = emulating_bellman_ford(cap, w, i, s).path {
            let found = Costed::new(path, &costs);
            if best
                .as_ref()
                .is_none_or(|b| found.rank_cmp(b) == std::cmp::Ordering::Less)
            {
                best = Some(found);
            }
        }
    }
    best.map(|c| AugmentingPath {
        set: i ^ c.path.as_set(),
        path: c.path,
    })
}

/// Augments from the empty set until no path remains.
pub fn solve_shapes(mut shapes: ShapeOracle<'_>, w: Option<&Weighting>) -> Result<SolveReport> {
    let n = shapes.oracle().n();
    let weights = super::weights_or_zero(w, n)?;
    let solver = match shapes.oracle().kind() {
        OracleKind::CiPlusMax => SolverKind::CiMax,
        _ => SolverKind::Sum,
    };
    let mut chain = vec![SubsetMask::EMPTY];
    let mut current = SubsetMask::EMPTY;
    while let Some(step) = cheapest_path_augment_rank_sum(&mut shapes, &weights, current) {
        current = step.set;
        chain.push(current);
    }
    let stats = SolveStats {
        oracle_kind: shapes.oracle().kind(),
        queries: shapes.oracle().counts(),
        shape_queries: Some(shapes.shape_counts()),
        augmentations: chain.len() - 1,
        n,
    };
    Ok(SolveReport::from_chain(
        solver,
        &weights,
        w.is_some(),
        &chain,
        None,
        stats,
    ))
}

/// Rank-sum solver. Accepts `Sum` or `FullPair`.
pub fn solve_rank_sum(oracle: RestrictedOracle<'_>, w: Option<&Weighting>) -> Result<SolveReport> {
    if !matches!(oracle.kind(), OracleKind::Sum | OracleKind::FullPair) {
        return Err(Error::Capability {
            kind: oracle.kind(),
            query: "sum",
        });
    }
    solve_shapes(ShapeOracle::new(oracle)?, w)
}

/// The rank-sum solver with shapes answered by `CI` and `Max`. Accepts `CiPlusMax`.
pub fn solve_ci_max(oracle: RestrictedOracle<'_>, w: Option<&Weighting>) -> Result<SolveReport> {
    if oracle.kind() != OracleKind::CiPlusMax {
        return Err(Error::Capability {
            kind: oracle.kind(),
            query: "ci-plus-max",
        });
    }
    solve_shapes(ShapeOracle::new(oracle)?, w)
}
