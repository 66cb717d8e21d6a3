//! The JSON instance format.
//!
//! ```json
//! {"n": 4, "weights": [5, 1, 1, 4],
//!  "m1": {"kind": "partition", "classes": [[0, 1], [2, 3]], "capacities": [1, 1]},
//!  "m2": {"kind": "uniform", "rank": 2}}
//! ```
//!
//! Record kinds are `uniform`, `partition`, `graphic`, `split`,
//! `truncation-of` and `direct-sum-of`. The canonical text has sorted keys.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracles::MatroidPair;
use crate::subset::{GroundSet, SubsetMask, Weighting};
use crate::zoo::{
    self, GraphRepresentation, MatroidKind, MatroidSpec, PartitionRepresentation,
    SplitRepresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MatroidRecord {
    Uniform {
        rank: usize,
    },
    Partition {
        classes: Vec<SubsetMask>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Split {
        rank: usize,
        hyperedges: Vec<SubsetMask>,
        bounds: Vec<usize>,
    },
    TruncationOf {
        k: usize,
        inner: Box<MatroidRecord>,
    },
    /// `right` is shifted up by `offset`, the ground size of `left`.
    DirectSumOf {
        offset: usize,
        left: Box<MatroidRecord>,
        right: Box<MatroidRecord>,
    },
}

impl MatroidRecord {
    pub fn from_spec(m: &MatroidSpec) -> Self {
        match m.kind() {
            MatroidKind::Uniform { rank } => MatroidRecord::Uniform { rank: *rank },
            MatroidKind::Partition(rep) => MatroidRecord::Partition {
                classes: rep.classes.clone(),
                capacities: rep.capacities.clone(),
            },
            MatroidKind::Graphic(rep) => MatroidRecord::Graphic {
                vertices: rep.vertices,
                edges: rep.edges.clone(),
            },
            MatroidKind::Split(rep) => MatroidRecord::Split {
                rank: rep.rank,
                hyperedges: rep.hyperedges.clone(),
                bounds: rep.bounds.clone(),
            },
            MatroidKind::Truncation { inner, k } => MatroidRecord::TruncationOf {
                k: *k,
                inner: Box::new(MatroidRecord::from_spec(inner)),
            },
            MatroidKind::DirectSum { left, right } => MatroidRecord::DirectSumOf {
                offset: left.ground_size(),
                left: Box::new(MatroidRecord::from_spec(left)),
                right: Box::new(MatroidRecord::from_spec(right)),
            },
        }
    }

    /// Builds the matroid on a ground set of size `n`. Errors name the
    /// offending field below `path`.
    pub fn to_spec(&self, n: usize, path: &str) -> Result<MatroidSpec> {
        GroundSet::new(n).map_err(|e| e.within(path))?;
        let built = match self {
            MatroidRecord::Uniform { rank } => zoo::uniform(n, *rank),
            MatroidRecord::Partition {
                classes,
                capacities,
            } => zoo::partition(
                n,
                PartitionRepresentation {
                    classes: classes.clone(),
                    capacities: capacities.clone(),
                },
            ),
            MatroidRecord::Graphic { vertices, edges } => {
                if edges.len() != n {
                    return Err(Error::schema(
                        format!("{path}.edges"),
                        format!("{} edges for a ground set of size {n}", edges.len()),
                    ));
                }
                zoo::graphic(GraphRepresentation {
                    vertices: *vertices,
                    edges: edges.clone(),
                })
            }
            MatroidRecord::Split {
                rank,
                hyperedges,
                bounds,
            } => zoo::split(
                n,
                SplitRepresentation {
                    rank: *rank,
                    hyperedges: hyperedges.clone(),
                    bounds: bounds.clone(),
                },
            ),
            MatroidRecord::TruncationOf { k, inner } => {
                let inner = inner.to_spec(n, &format!("{path}.inner"))?;
                zoo::truncate(&inner, *k)
            }
            MatroidRecord::DirectSumOf {
                offset,
                left,
                right,
            } => {
                if *offset == 0 || *offset >= n {
                    return Err(Error::schema(
                        format!("{path}.offset"),
                        format!("offset {offset} must split a ground set of size {n}"),
                    ));
                }
                let left = left.to_spec(*offset, &format!("{path}.left"))?;
                let right = right.to_spec(n - offset, &format!("{path}.right"))?;
                zoo::direct_sum(&left, &right)
            }
        };
        built.map_err(|e| e.within(path))
    }
}

/// Two matroids on a common ground set with integer weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub m1: MatroidSpec,
    pub m2: MatroidSpec,
    pub weights: Weighting,
    pub annotation: Option<Value>,
}

impl Instance {
    pub fn new(m1: MatroidSpec, m2: MatroidSpec, weights: Weighting) -> Result<Self> {
        MatroidPair::new(&m1, &m2)?;
        if weights.len() != m1.ground_size() {
            return Err(Error::schema(
                "weights",
                format!("{} weights for n = {}", weights.len(), m1.ground_size()),
            ));
        }
        Ok(Instance {
            m1,
            m2,
            weights,
            annotation: None,
        })
    }

    pub fn with_annotation(mut self, annotation: Value) -> Self {
        self.annotation = Some(annotation);
        self
    }

    pub fn n(&self) -> usize {
        self.m1.ground_size()
    }

    pub fn pair(&self) -> MatroidPair<'_> {
        MatroidPair {
            m1: &self.m1,
            m2: &self.m2,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: usize,
    weights: Vec<i64>,
    m1: MatroidRecord,
    m2: MatroidRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    annotation: Option<Value>,
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| {
        Error::schema(
            "<document>",
            format!("line {} column {}: {e}", e.line(), e.column()),
        )
    })?;
    instance_from_file(file)
}

pub fn parse_instance_value(value: Value) -> Result<Instance> {
    let file: InstanceFile =
        serde_json::from_value(value).map_err(|e| Error::schema("<document>", e.to_string()))?;
    instance_from_file(file)
}

fn instance_from_file(file: InstanceFile) -> Result<Instance> {
    let n = file.n;
    let m1 = file.m1.to_spec(n, "m1")?;
    let m2 = file.m2.to_spec(n, "m2")?;
    let weights = Weighting::new(file.weights).map_err(|e| e.within("weights"))?;
    let mut instance = Instance::new(m1, m2, weights)?;
    instance.annotation = file.annotation;
    Ok(instance)
}

pub fn instance_value(instance: &Instance) -> Value {
    let file = InstanceFile {
        n: instance.n(),
        weights: instance.weights.as_slice().to_vec(),
        m1: MatroidRecord::from_spec(&instance.m1),
        m2: MatroidRecord::from_spec(&instance.m2),
        annotation: instance.annotation.clone(),
    };
    // Value maps are ordered, which sorts the keys
    serde_json::to_value(file).expect("instance records serialize")
}

/// Canonical text: sorted keys, two-space indentation, trailing newline.
pub fn emit_instance(instance: &Instance) -> String {
    let mut text =
        serde_json::to_string_pretty(&instance_value(instance)).expect("values serialize");
    text.push('\n');
    text
}
