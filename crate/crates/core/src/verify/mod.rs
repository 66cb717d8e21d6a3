//! Full-access ground truth: brute force, duality checks and separation witnesses.

pub mod brute;
pub mod witness;

pub use brute::{brute_force, brute_force_with_budget, rank_table, BruteForceResult};
pub use witness::{
    check_free_matroid_blindness, find_separation_witness, presets, search_space, SearchSpace,
    SeparationWitness, WitnessQuery,
};
