//! Shared fixtures for the integration tests: a fixed matroid zoo, weight
//! vectors and the seeded corpora.

#![allow(dead_code)]

use rmi_core::generate::{generate, GeneratorConfig, Mix};
use rmi_core::instance::Instance;
use rmi_core::zoo::{self, GraphRepresentation, PartitionRepresentation, SplitRepresentation};
use rmi_core::{MatroidSpec, SubsetMask, Weighting};

fn set(elements: impl IntoIterator<Item = usize>) -> SubsetMask {
    SubsetMask::from_elements(elements)
}

/// Twelve named matroids on `n >= 4` elements covering every zoo kind.
pub fn zoo(n: usize) -> Vec<(&'static str, MatroidSpec)> {
    assert!(n >= 4, "the fixed zoo needs at least 4 elements");
    let pairs: Vec<SubsetMask> = (0..n).step_by(2).map(|a| set(a..(a + 2).min(n))).collect();
    let triangle_path = GraphRepresentation {
        vertices: n,
        edges: [(0, 1), (1, 2), (0, 2)]
            .into_iter()
            .chain((3..n).map(|i| (i - 1, i)))
            .collect(),
    };
    let doubled = GraphRepresentation {
        vertices: n / 2 + 2,
        edges: (0..n).map(|i| (i / 2, i / 2 + 1)).collect(),
    };
    let cycle = GraphRepresentation {
        vertices: n,
        edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
    };
    vec![
        ("U(1,n)", zoo::uniform(n, 1).unwrap()),
        ("U(2,n)", zoo::uniform(n, 2).unwrap()),
        ("U(n-1,n)", zoo::uniform(n, n - 1).unwrap()),
        ("free", zoo::free(n).unwrap()),
        (
            "pairs",
            zoo::partition(n, PartitionRepresentation::all_one(pairs)).unwrap(),
        ),
        (
            "partition-2-1",
            zoo::partition(
                n,
                PartitionRepresentation {
                    classes: vec![set(0..3), set(3..n)],
                    capacities: vec![2, 1],
                },
            )
            .unwrap(),
        ),
        ("triangle-path", zoo::graphic(triangle_path).unwrap()),
        ("doubled-path", zoo::graphic(doubled).unwrap()),
        (
            "split-one",
            zoo::split(
                n,
                SplitRepresentation {
                    rank: n - 2,
                    hyperedges: vec![set(0..3)],
                    bounds: vec![1],
                },
            )
            .unwrap(),
        ),
        (
            "split-two",
            zoo::split(
                n,
                SplitRepresentation {
                    rank: 2,
                    hyperedges: vec![set([0, 1]), set([2, 3])],
                    bounds: vec![1, 1],
                },
            )
            .unwrap(),
        ),
        (
            "cycle-truncated",
            zoo::truncate(&zoo::graphic(cycle).unwrap(), 2).unwrap(),
        ),
        (
            "U(1,2)+U(2,n-2)",
            zoo::direct_sum(
                &zoo::uniform(2, 1).unwrap(),
                &zoo::uniform(n - 2, 2).unwrap(),
            )
            .unwrap(),
        ),
    ]
}

/// Three weight vectors: constant, increasing, and mixed-sign.
pub fn weight_vectors(n: usize) -> Vec<Weighting> {
    vec![
        Weighting::new(vec![1; n]).unwrap(),
        Weighting::new((1..=n as i64).collect()).unwrap(),
        Weighting::new((0..n as i64).map(|i| (7 * i + 3) % 11 - 4).collect()).unwrap(),
    ]
}

/// Every ordered zoo pair on `n` elements with every weight vector.
pub fn zoo_corpus(n: usize) -> Vec<Instance> {
    let z = zoo(n);
    let mut out = Vec::new();
    for (_, a) in &z {
        for (_, b) in &z {
            for w in weight_vectors(n) {
                out.push(Instance::new(a.clone(), b.clone(), w).unwrap());
            }
        }
    }
    out
}

/// `count` generated instances from `first_seed`, sizes cycling through `1..=max_n`.
pub fn seeded(first_seed: u64, count: u64, max_n: usize, mix: Mix) -> Vec<(u64, Instance)> {
    (first_seed..first_seed + count)
        .map(|seed| {
            let n = 1 + seed as usize % max_n;
            (seed, generate(&GeneratorConfig::new(seed, n, mix)))
        })
        .collect()
}
