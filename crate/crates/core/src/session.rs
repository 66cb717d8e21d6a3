//! End-to-end runs on an [`Instance`]: compatibility checks, solving and
//! verification against brute force. The CLI and the acceptance suite both
//! go through here.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::oracles::{RestrictedOracle, ShapeOracle};
use crate::refgraph::{self, certificate_value, Augmentation};
use crate::solvers::{self, SolveReport, SolverKind};
use crate::subset::SubsetMask;
use crate::verify::{brute_force, BruteForceResult};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub weighted: bool,
    /// Check the rank-sum search invariants against full access as it runs.
    pub audit: bool,
}

/// Rejects solver and instance combinations the restricted oracle could not
/// detect on its own.
pub fn check_compatibility(instance: &Instance, solver: SolverKind, weighted: bool) -> Result<()> {
    if weighted && !solver.supports_weights() {
        return Err(Error::Usage(format!(
            "{solver} solves the cardinality problem only"
        )));
    }
    match solver {
        SolverKind::CiPartition if !instance.m1.is_all_one_partition() => {
            Err(Error::Usage(format!(
                "{solver} needs m1 to be an all-one partition record, found {}",
                instance.m1.kind_name()
            )))
        }
        SolverKind::CiSplit if !instance.m1.is_elementary_split() => Err(Error::Usage(format!(
            "{solver} needs m1 to be a split record, found {}",
            instance.m1.kind_name()
        ))),
        _ => Ok(()),
    }
}

pub fn solve_instance(
    instance: &Instance,
    solver: SolverKind,
    options: SolveOptions,
) -> Result<SolveReport> {
    check_compatibility(instance, solver, options.weighted)?;
    let pair = instance.pair();
    let oracle = RestrictedOracle::new(pair, solver.oracle_kind());
    let w = options.weighted.then_some(&instance.weights);
    match solver {
        SolverKind::Sum | SolverKind::CiMax if options.audit => {
            solvers::solve_shapes(ShapeOracle::new(oracle)?.with_audit(pair), w)
        }
        SolverKind::Sum => solvers::solve_rank_sum(oracle, w),
        SolverKind::CiMax => solvers::solve_ci_max(oracle, w),
        SolverKind::CiPartition => solvers::solve_ci_partition(oracle),
        SolverKind::CiSplit => solvers::solve_ci_split(oracle, w),
        SolverKind::Full => solvers::solve_full(oracle, w),
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub report: SolveReport,
    pub brute: BruteForceResult,
    /// The solver's certificate, or one built on its maximum set.
    pub certificate: SubsetMask,
    pub certificate_value: usize,
    pub issues: Vec<String>,
}

impl Verification {
    pub fn agrees(&self) -> bool {
        self.issues.is_empty()
    }
}

/// `Z` with `r_1(Z) + r_2(E - Z) = |i|`, if `i` is a maximum common independent set.
pub fn certificate_for(instance: &Instance, i: SubsetMask) -> Result<Option<SubsetMask>> {
    match refgraph::augment_unweighted(&instance.pair(), i)? {
        Augmentation::Exhausted { certificate } => Ok(Some(certificate)),
        Augmentation::Augmented { .. } => Ok(None),
    }
}

pub fn verify_instance(
    instance: &Instance,
    solver: SolverKind,
    options: SolveOptions,
) -> Result<Verification> {
    let report = solve_instance(instance, solver, options)?;
    let pair = instance.pair();
    let brute = brute_force(&pair, &instance.weights)?;
    let mut issues = brute.compare(&pair, &report);

    let certificate = match report.certificate {
        Some(z) => z,
        None => match certificate_for(instance, report.max_cardinality_set())? {
            Some(z) => z,
            None => {
                issues.push(format!(
                    "{} can still be augmented",
                    report.max_cardinality_set()
                ));
                SubsetMask::EMPTY
            }
        },
    };
    let value = certificate_value(&pair, certificate);
    if value != report.max_cardinality {
        issues.push(format!(
            "certificate {certificate} has value {value}, max cardinality is {}",
            report.max_cardinality
        ));
    }
    if brute.duality_min != brute.max_cardinality {
        issues.push(format!(
            "duality minimum {} differs from brute-force max cardinality {}",
            brute.duality_min, brute.max_cardinality
        ));
    }
    Ok(Verification {
        report,
        brute,
        certificate,
        certificate_value: value,
        issues,
    })
}

/// Solvers that accept this instance, by [`check_compatibility`].
pub fn compatible_solvers(instance: &Instance, weighted: bool) -> Vec<SolverKind> {
    SolverKind::ALL
        .into_iter()
        .filter(|&s| check_compatibility(instance, s, weighted).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_instance;

    const K22: &str = r#"{"n": 4, "weights": [5, 1, 1, 4],
        "m1": {"kind": "partition", "classes": [[0, 1], [2, 3]], "capacities": [1, 1]},
        "m2": {"kind": "partition", "classes": [[0, 2], [1, 3]], "capacities": [1, 1]}}"#;

    #[test]
    fn every_solver_on_k22() {
        let inst = parse_instance(K22).unwrap();
        for weighted in [false, true] {
            for solver in compatible_solvers(&inst, weighted) {
                let v = verify_instance(
                    &inst,
                    solver,
                    SolveOptions {
                        weighted,
                        audit: true,
                    },
                )
                .unwrap();
                assert!(v.agrees(), "{solver}: {:?}", v.issues);
                assert_eq!(v.report.max_cardinality, 2);
                if weighted {
                    assert_eq!(v.report.best.weight, 9);
                }
            }
        }
        assert_eq!(compatible_solvers(&inst, true).len(), 3);
    }

    #[test]
    fn compatibility_errors() {
        let text = r#"{"n": 3, "weights": [1, 1, 1],
            "m1": {"kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]},
            "m2": {"kind": "uniform", "rank": 2}}"#;
        let inst = parse_instance(text).unwrap();
        for solver in [SolverKind::CiPartition, SolverKind::CiSplit] {
            assert!(matches!(
                solve_instance(&inst, solver, SolveOptions::default()),
                Err(Error::Usage(_))
            ));
        }
        let k22 = parse_instance(K22).unwrap();
        let weighted = SolveOptions {
            weighted: true,
            audit: false,
        };
        assert!(matches!(
            solve_instance(&k22, SolverKind::CiPartition, weighted),
            Err(Error::Usage(_))
        ));
    }
}
