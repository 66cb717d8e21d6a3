//! Fixtures shared by the benchmarks: seeded instance batches and a runner
//! that solves a batch with one solver.

use rmi_core::generate::{generate, GeneratorConfig, Mix};
use rmi_core::instance::Instance;
use rmi_core::session::{self, SolveOptions};
use rmi_core::SolverKind;

/// `count` instances on `n` elements, seeds `0..count`.
pub fn batch(mix: Mix, n: usize, count: u64) -> Vec<Instance> {
    (0..count)
        .map(|seed| generate(&GeneratorConfig::new(seed, n, mix)))
        .collect()
}

/// The mix each solver is meant for.
pub fn mix_for(solver: SolverKind) -> Mix {
    match solver {
        SolverKind::CiPartition => Mix::PartitionM1,
        SolverKind::CiSplit => Mix::SplitM1,
        SolverKind::Sum | SolverKind::CiMax | SolverKind::Full => Mix::Mixed,
    }
}

/// Solves every instance and returns the total number of oracle queries.
pub fn solve_batch(instances: &[Instance], solver: SolverKind) -> u64 {
    let options = SolveOptions {
        weighted: solver.supports_weights(),
        audit: false,
    };
    instances
        .iter()
        .map(|inst| {
            session::solve_instance(inst, solver, options)
                .expect("batch instances match the solver")
                .stats
                .queries
                .total()
        })
        .sum()
}
