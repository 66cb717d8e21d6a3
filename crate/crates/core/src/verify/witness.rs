//! Oracle-separation witnesses: two instances that a set of oracles cannot
//! tell apart on any subset, while another oracle can.
//!
//! The search runs over labelled graphic matroids of 4-edge multigraphs on at
//! most five vertices, optionally 3-truncated, in canonical edge-list order.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::instance::{instance_value, parse_instance_value, Instance};
use crate::matroid::Matroid;
use crate::oracles::{MatroidPair, OracleKind};
use crate::subset::{SubsetMask, Weighting};
use crate::zoo::{self, GraphRepresentation, MatroidSpec};

pub const WITNESS_GROUND: usize = 4;
const VERTICES: usize = 5;
const SUBSETS: usize = 1 << WITNESS_GROUND;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchSpace {
    Graphic,
    /// 3-truncations of the graphic space.
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessQuery {
    pub target: OracleKind,
    pub agreeing: Vec<OracleKind>,
    pub space: SearchSpace,
    /// Required target values at the full ground set, first instance first.
    pub values: Option<(usize, usize)>,
}

/// The named configurations searched by `rmi witness`.
pub fn presets() -> Vec<(&'static str, WitnessQuery)> {
    use OracleKind::*;
    let q = |target, agreeing: &[OracleKind], space, values| WitnessQuery {
        target,
        agreeing: agreeing.to_vec(),
        space,
        values,
    };
    vec![
        (
            "min-vs-sum-ci",
            q(Min, &[Sum, Ci], SearchSpace::Graphic, Some((2, 3))),
        ),
        (
            "min-vs-ci-max",
            q(Min, &[Ci, Max], SearchSpace::Truncated, Some((2, 3))),
        ),
        (
            "sum-vs-ci-max",
            q(Sum, &[Ci, Max], SearchSpace::Truncated, Some((5, 6))),
        ),
        (
            "max-vs-sum",
            q(Max, &[Sum], SearchSpace::Graphic, Some((4, 3))),
        ),
        (
            "sum-vs-min-ci",
            q(Sum, &[Min, Ci], SearchSpace::Graphic, None),
        ),
        (
            "max-vs-min-ci",
            q(Max, &[Min, Ci], SearchSpace::Graphic, None),
        ),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeparationWitness {
    pub query: WitnessQuery,
    pub first: (MatroidSpec, MatroidSpec),
    pub second: (MatroidSpec, MatroidSpec),
    /// A subset on which the target oracle answers differently.
    pub subset: SubsetMask,
    pub values: (usize, usize),
}

fn answers(pair: &MatroidPair<'_>, kind: OracleKind) -> [u8; SUBSETS] {
    let mut out = [0u8; SUBSETS];
    for (bits, slot) in out.iter_mut().enumerate() {
        *slot = pair.answer(kind, SubsetMask::from_bits(bits as u64)) as u8;
    }
    out
}

impl SeparationWitness {
    /// Exhaustive re-check over every subset of the ground set.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let a = MatroidPair::new(&self.first.0, &self.first.1).map_err(|e| e.to_string())?;
        let b = MatroidPair::new(&self.second.0, &self.second.1).map_err(|e| e.to_string())?;
        if a.n() != WITNESS_GROUND || b.n() != WITNESS_GROUND {
            return Err(format!(
                "witness ground sets must have {WITNESS_GROUND} elements"
            ));
        }
        for &kind in &self.query.agreeing {
            let (x, y) = (answers(&a, kind), answers(&b, kind));
            if let Some(bits) = (0..SUBSETS).find(|&s| x[s] != y[s]) {
                return Err(format!(
                    "{kind} distinguishes the instances at {}",
                    SubsetMask::from_bits(bits as u64)
                ));
            }
        }
        let found = (
            a.answer(self.query.target, self.subset),
            b.answer(self.query.target, self.subset),
        );
        if found != self.values || found.0 == found.1 {
            return Err(format!(
                "{} at {} answers {found:?}, expected {:?}",
                self.query.target, self.subset, self.values
            ));
        }
        if let Some(required) = self.query.values {
            if self.subset != SubsetMask::full(WITNESS_GROUND) || required != found {
                return Err(format!(
                    "required values {required:?} at E, found {found:?}"
                ));
            }
        }
        Ok(())
    }

    pub fn annotation(&self) -> serde_json::Value {
        json!({
            "target": self.query.target,
            "agreeing": self.query.agreeing,
            "space": self.query.space,
            "subset": self.subset,
            "values": [self.values.0, self.values.1],
        })
    }

    /// `{annotation, first, second}` with each side in the instance format.
    pub fn to_json(&self) -> serde_json::Value {
        let side = |(m1, m2): &(MatroidSpec, MatroidSpec)| {
            let inst = Instance::new(m1.clone(), m2.clone(), Weighting::zeros(WITNESS_GROUND))
                .expect("witness sides share a ground set");
            instance_value(&inst)
        };
        json!({
            "annotation": self.annotation(),
            "first": side(&self.first),
            "second": side(&self.second),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let field = |name: &str| {
            value
                .get(name)
                .cloned()
                .ok_or_else(|| Error::schema(name, "missing"))
        };
        #[derive(Deserialize)]
        struct Annotation {
            target: OracleKind,
            agreeing: Vec<OracleKind>,
            space: SearchSpace,
            subset: SubsetMask,
            values: (usize, usize),
        }
        let note: Annotation = serde_json::from_value(field("annotation")?)
            .map_err(|e| Error::schema("annotation", e.to_string()))?;
        let first = parse_instance_value(field("first")?).map_err(|e| e.within("first"))?;
        let second = parse_instance_value(field("second")?).map_err(|e| e.within("second"))?;
        let full = note.subset == SubsetMask::full(WITNESS_GROUND);
        Ok(SeparationWitness {
            query: WitnessQuery {
                target: note.target,
                agreeing: note.agreeing,
                space: note.space,
                values: full.then_some(note.values),
            },
            first: (first.m1, first.m2),
            second: (second.m1, second.m2),
            subset: note.subset,
            values: note.values,
        })
    }
}

fn independence_signature(m: &MatroidSpec) -> u16 {
    (0..SUBSETS).fold(0u16, |sig, bits| {
        if m.is_independent(SubsetMask::from_bits(bits as u64)) {
            sig | 1 << bits
        } else {
            sig
        }
    })
}

/// Distinct labelled matroids of the space, each with its first graph in
/// lexicographic edge-list order.
pub fn search_space(space: SearchSpace) -> Vec<MatroidSpec> {
    let pairs: Vec<(usize, usize)> = (0..VERTICES)
        .flat_map(|u| (u + 1..VERTICES).map(move |v| (u, v)))
        .collect();
    let mut seen: HashMap<u16, ()> = HashMap::new();
    let mut out = Vec::new();
    let p = pairs.len();
    for code in 0..p.pow(WITNESS_GROUND as u32) {
        let edges: Vec<(usize, usize)> = (0..WITNESS_GROUND)
            .map(|slot| pairs[code / p.pow((WITNESS_GROUND - 1 - slot) as u32) % p])
            .collect();
        let graphic = zoo::graphic(GraphRepresentation {
            vertices: VERTICES,
            edges,
        })
        .expect("pairs have distinct endpoints");
        let m = match space {
            SearchSpace::Graphic => graphic,
            SearchSpace::Truncated => zoo::truncate(&graphic, 3).expect("k = 3 is positive"),
        };
        if seen.insert(independence_signature(&m), ()).is_none() {
            out.push(m);
        }
    }
    out
}

pub fn find_separation_witness(query: &WitnessQuery) -> Option<SeparationWitness> {
    let matroids = search_space(query.space);
    let instances: Vec<(usize, usize)> = (0..matroids.len())
        .flat_map(|a| (0..matroids.len()).map(move |b| (a, b)))
        .collect();
    let full = SubsetMask::full(WITNESS_GROUND);

    let mut groups: BTreeMap<Vec<[u8; SUBSETS]>, Vec<usize>> = BTreeMap::new();
    let mut target: Vec<[u8; SUBSETS]> = Vec::with_capacity(instances.len());
    for (idx, &(a, b)) in instances.iter().enumerate() {
        let pair = MatroidPair::new(&matroids[a], &matroids[b]).expect("same ground set");
        let key: Vec<_> = query.agreeing.iter().map(|&k| answers(&pair, k)).collect();
        groups.entry(key).or_default().push(idx);
        target.push(answers(&pair, query.target));
    }
    let mut group_of = vec![0usize; instances.len()];
    let members: Vec<Vec<usize>> = groups.into_values().collect();
    for (g, list) in members.iter().enumerate() {
        for &idx in list {
            group_of[idx] = g;
        }
    }

    for x in 0..instances.len() {
        for &y in &members[group_of[x]] {
            let found = match query.values {
                Some(values) => {
                    let at_full = (
                        target[x][full.bits() as usize] as usize,
                        target[y][full.bits() as usize] as usize,
                    );
                    (at_full == values).then_some((full, values))
                }
                None => (0..SUBSETS)
                    .find(|&s| target[x][s] != target[y][s])
                    .map(|s| {
                        (
                            SubsetMask::from_bits(s as u64),
                            (target[x][s] as usize, target[y][s] as usize),
                        )
                    }),
            };
            if let Some((subset, values)) = found {
                if values.0 == values.1 {
                    continue;
                }
                let (a, b) = instances[x];
                let (c, d) = instances[y];
                return Some(SeparationWitness {
                    query: query.clone(),
                    first: (matroids[a].clone(), matroids[b].clone()),
                    second: (matroids[c].clone(), matroids[d].clone()),
                    subset,
                    values,
                });
            }
        }
    }
    None
}

/// With a free first matroid, `Max` answers `|X|` whatever the second
/// matroid is, while `CI` still tells `U(1,4)` from the free matroid.
pub fn check_free_matroid_blindness() -> bool {
    let free = zoo::free(WITNESS_GROUND).expect("valid size");
    let single = zoo::uniform(WITNESS_GROUND, 1).expect("valid rank");
    let with_single = MatroidPair::new(&free, &single).expect("same ground set");
    let with_free = MatroidPair::new(&free, &free).expect("same ground set");
    let all = SubsetMask::full(WITNESS_GROUND);
    let blind = all
        .subsets()
        .all(|x| with_single.rank_max(x) == x.len() && with_free.rank_max(x) == x.len());
    let ci_differs = all
        .subsets()
        .filter(|x| x.len() == 2)
        .all(|x| with_single.is_common_independent(x) != with_free.is_common_independent(x));
    blind && ci_differs
}
