//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::instance::Instance;
use crate::subset::{SubsetMask, Weighting};
use crate::zoo::{
    self, GraphRepresentation, MatroidSpec, PartitionRepresentation, SplitRepresentation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mix {
    /// Both matroids drawn from every zoo kind.
    Mixed,
    /// First matroid an all-one partition; a third of the time both are, as a
    /// bipartite matching.
    PartitionM1,
    /// First matroid an elementary split matroid.
    SplitM1,
}

impl std::str::FromStr for Mix {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mixed" => Ok(Mix::Mixed),
            "partition-m1" => Ok(Mix::PartitionM1),
            "split-m1" => Ok(Mix::SplitM1),
            _ => Err(format!("unknown mix `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub mix: Mix,
    /// Inclusive weight bounds.
    pub weight_range: (i64, i64),
}

impl GeneratorConfig {
    pub fn new(seed: u64, n: usize, mix: Mix) -> Self {
        GeneratorConfig {
            seed,
            n,
            mix,
            weight_range: (-5, 20),
        }
    }
}

/// Panics if `n` is outside `1..=64` or the weight range is empty or too wide.
pub fn generate(config: &GeneratorConfig) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.n;
    let (m1, m2) = match config.mix {
        Mix::Mixed => (
            random_matroid(&mut rng, n, 2),
            random_matroid(&mut rng, n, 2),
        ),
        Mix::PartitionM1 => {
            if rng.gen_ratio(1, 3) {
                bipartite_matching(&mut rng, n)
            } else {
                (
                    random_all_one_partition(&mut rng, n),
                    random_matroid(&mut rng, n, 2),
                )
            }
        }
        Mix::SplitM1 => (random_split(&mut rng, n), random_matroid(&mut rng, n, 2)),
    };
    let (lo, hi) = config.weight_range;
    let weights = Weighting::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .expect("weight range within bounds");
    Instance::new(m1, m2, weights).expect("both matroids share the ground set")
}

fn random_matroid(rng: &mut ChaCha8Rng, n: usize, depth: usize) -> MatroidSpec {
    let kinds = if depth > 0 && n >= 2 {
        6
    } else if depth > 0 {
        5
    } else {
        4
    };
    match rng.gen_range(0..kinds) {
        0 => zoo::uniform(n, rng.gen_range(1..=n)).expect("rank in range"),
        1 => random_partition(rng, n),
        2 => random_graphic(rng, n),
        3 => random_split(rng, n),
        4 => {
            let inner = random_matroid(rng, n, depth - 1);
            zoo::truncate(&inner, rng.gen_range(1..=n)).expect("k positive")
        }
        _ => {
            let offset = rng.gen_range(1..n);
            let left = random_matroid(rng, offset, depth - 1);
            let right = random_matroid(rng, n - offset, depth - 1);
            zoo::direct_sum(&left, &right).expect("sizes add up")
        }
    }
}

fn random_classes(rng: &mut ChaCha8Rng, n: usize) -> Vec<SubsetMask> {
    let q = rng.gen_range(1..=n);
    let mut labels: Vec<usize> = (0..n)
        .map(|e| if e < q { e } else { rng.gen_range(0..q) })
        .collect();
    labels.shuffle(rng);
    (0..q)
        .map(|c| (0..n).filter(|&e| labels[e] == c).collect())
        .collect()
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let classes = random_classes(rng, n);
    let capacities = classes.iter().map(|c| rng.gen_range(1..=c.len())).collect();
    zoo::partition(
        n,
        PartitionRepresentation {
            classes,
            capacities,
        },
    )
    .expect("classes partition E")
}

fn random_all_one_partition(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    zoo::partition(n, PartitionRepresentation::all_one(random_classes(rng, n)))
        .expect("classes partition E")
}

fn random_graphic(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let vertices = rng.gen_range(2..=n + 1);
    let edges = (0..n)
        .map(|_| {
            let u = rng.gen_range(0..vertices);
            let v = (u + rng.gen_range(1..vertices)) % vertices;
            (u, v)
        })
        .collect();
    zoo::graphic(GraphRepresentation { vertices, edges }).expect("no self-loops")
}

/// Rejection sampling on (H1) and (H2); falls back to no hyperedges.
fn random_split(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let rank = rng.gen_range(1..=n);
    for _ in 0..64 {
        let q = rng.gen_range(0..=3usize);
        let hyperedges: Vec<SubsetMask> = (0..q)
            .map(|_| {
                let mut h = SubsetMask::EMPTY;
                while h.is_empty() {
                    h = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                }
                h
            })
            .collect();
        let bounds = hyperedges
            .iter()
            .map(|h| rng.gen_range(1..=h.len().min(rank)))
            .collect();
        let rep = SplitRepresentation {
            rank,
            hyperedges,
            bounds,
        };
        if rep.validate(n).is_ok() {
            return zoo::split(n, rep).expect("validated");
        }
    }
    zoo::split(
        n,
        SplitRepresentation {
            rank,
            hyperedges: Vec::new(),
            bounds: Vec::new(),
        },
    )
    .expect("no hyperedges")
}

/// Edges of a random bipartite multigraph; each side's incidence classes
/// form one all-one partition matroid.
fn bipartite_matching(rng: &mut ChaCha8Rng, n: usize) -> (MatroidSpec, MatroidSpec) {
    let left = rng.gen_range(1..=n.min(5));
    let right = rng.gen_range(1..=n.min(5));
    let edges: Vec<(usize, usize)> = (0..n)
        .map(|_| (rng.gen_range(0..left), rng.gen_range(0..right)))
        .collect();
    let side = |pick: &dyn Fn(&(usize, usize)) -> usize, count: usize| {
        let classes: Vec<SubsetMask> = (0..count)
            .map(|v| {
                (0..n)
                    .filter(|&e| pick(&edges[e]) == v)
                    .collect::<SubsetMask>()
            })
            .filter(|c| !c.is_empty())
            .collect();
        zoo::partition(n, PartitionRepresentation::all_one(classes)).expect("incidence classes")
    };
    (side(&|e| e.0, left), side(&|e| e.1, right))
}
