//! Concrete matroid constructions.
//!
//! Every constructor validates its payload and rejects anything that would
//! produce a loop: all matroids in this crate are loopless.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, SubsetMask};

/// Disjoint classes covering the ground set, each with an upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRepresentation {
    pub classes: Vec<SubsetMask>,
    pub capacities: Vec<usize>,
}

impl PartitionRepresentation {
    /// Every class has capacity one.
    pub fn all_one(classes: Vec<SubsetMask>) -> Self {
        let capacities = vec![1; classes.len()];
        PartitionRepresentation {
            classes,
            capacities,
        }
    }

    pub fn is_all_one(&self) -> bool {
        self.capacities.iter().all(|&c| c == 1)
    }
}

/// A multigraph whose `i`-th edge is ground element `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRepresentation {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Hypergraph representation of an elementary split matroid: `X` is
/// independent iff `|X| <= rank` and `|X & H_i| <= bounds[i]` for every hyperedge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitRepresentation {
    pub rank: usize,
    pub hyperedges: Vec<SubsetMask>,
    pub bounds: Vec<usize>,
}

impl SplitRepresentation {
    /// `min(r, |Z|, min_i |Z - H_i| + r_i)`.
    pub fn rank_formula(&self, z: SubsetMask) -> usize {
        self.hyperedges
            .iter()
            .zip(&self.bounds)
            .map(|(&h, &b)| (z - h).len() + b)
            .fold(self.rank.min(z.len()), usize::min)
    }

    /// Checks (H1), (H2) and the ranges of every field against a ground set of size `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.hyperedges.len() != self.bounds.len() {
            return Err(Error::Representation(format!(
                "{} hyperedges but {} bounds",
                self.hyperedges.len(),
                self.bounds.len()
            )));
        }
        if self.rank > n {
            return Err(Error::Representation(format!(
                "split rank {} exceeds ground set size {n}",
                self.rank
            )));
        }
        if self.rank == 0 {
            return Err(Error::Loop("split matroid of rank 0".into()));
        }
        let ground = GroundSet::new(n)?;
        for (i, (&h, &b)) in self.hyperedges.iter().zip(&self.bounds).enumerate() {
            ground.check(h)?;
            if b == 0 && !h.is_empty() {
                return Err(Error::Loop(format!("hyperedge {i} has bound 0")));
            }
        }
        let rank = self.rank as i64;
        for i in 0..self.hyperedges.len() {
            for j in i + 1..self.hyperedges.len() {
                let overlap = (self.hyperedges[i] & self.hyperedges[j]).len();
                let limit = self.bounds[i] as i64 + self.bounds[j] as i64 - rank;
                if overlap as i64 > limit {
                    return Err(Error::SplitH1 {
                        i,
                        j,
                        overlap,
                        limit,
                    });
                }
            }
        }
        for (i, (&h, &b)) in self.hyperedges.iter().zip(&self.bounds).enumerate() {
            let value = n - h.len() + b;
            if value < self.rank {
                return Err(Error::SplitH2 {
                    i,
                    value,
                    rank: self.rank,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidKind {
    Uniform {
        rank: usize,
    },
    Partition(PartitionRepresentation),
    Graphic(GraphRepresentation),
    Split(SplitRepresentation),
    Truncation {
        inner: Box<MatroidSpec>,
        k: usize,
    },
    DirectSum {
        left: Box<MatroidSpec>,
        right: Box<MatroidSpec>,
    },
}

/// A validated, immutable matroid on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidSpec {
    ground: GroundSet,
    kind: MatroidKind,
}

impl MatroidSpec {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    /// True for a partition record whose capacities are all one.
    pub fn is_all_one_partition(&self) -> bool {
        matches!(&self.kind, MatroidKind::Partition(rep) if rep.is_all_one())
    }

    pub fn is_elementary_split(&self) -> bool {
        matches!(self.kind, MatroidKind::Split(_))
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            MatroidKind::Uniform { .. } => "uniform",
            MatroidKind::Partition(_) => "partition",
            MatroidKind::Graphic(_) => "graphic",
            MatroidKind::Split(_) => "split",
            MatroidKind::Truncation { .. } => "truncation-of",
            MatroidKind::DirectSum { .. } => "direct-sum-of",
        }
    }
}

impl Matroid for MatroidSpec {
    fn ground_size(&self) -> usize {
        self.ground.len()
    }

    fn is_independent(&self, x: SubsetMask) -> bool {
        debug_assert!(self.ground.contains(x), "{x} outside ground set");
        match &self.kind {
            MatroidKind::Uniform { rank } => x.len() <= *rank,
            MatroidKind::Partition(rep) => rep
                .classes
                .iter()
                .zip(&rep.capacities)
                .all(|(&class, &cap)| (x & class).len() <= cap),
            MatroidKind::Graphic(rep) => is_forest(rep, x),
            MatroidKind::Split(rep) => {
                x.len() <= rep.rank
                    && rep
                        .hyperedges
                        .iter()
                        .zip(&rep.bounds)
                        .all(|(&h, &b)| (x & h).len() <= b)
            }
            MatroidKind::Truncation { inner, k } => x.len() <= *k && inner.is_independent(x),
            MatroidKind::DirectSum { left, right } => {
                let offset = left.ground_size();
                let low = x & SubsetMask::full(offset);
                let high = SubsetMask::from_bits(x.bits() >> offset);
                left.is_independent(low) && right.is_independent(high)
            }
        }
    }
}

impl fmt::Display for MatroidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MatroidKind::Uniform { rank } => write!(f, "U({rank},{})", self.ground.len()),
            MatroidKind::Partition(rep) => {
                write!(f, "partition[")?;
                for (idx, (c, cap)) in rep.classes.iter().zip(&rep.capacities).enumerate() {
                    if idx > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{c}:{cap}")?;
                }
                f.write_str("]")
            }
            MatroidKind::Graphic(rep) => write!(f, "graphic{:?}", rep.edges),
            MatroidKind::Split(rep) => write!(
                f,
                "split(r={}, H={:?}, b={:?})",
                rep.rank, rep.hyperedges, rep.bounds
            ),
            MatroidKind::Truncation { inner, k } => write!(f, "({inner})_{k}"),
            MatroidKind::DirectSum { left, right } => write!(f, "{left} + {right}"),
        }
    }
}

fn is_forest(rep: &GraphRepresentation, x: SubsetMask) -> bool {
    let mut parent: Vec<usize> = (0..rep.vertices).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for e in x.iter() {
        let (u, v) = rep.edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// `U(r, n)`: sets of size at most `r` are independent.
pub fn uniform(n: usize, r: usize) -> Result<MatroidSpec> {
    let ground = GroundSet::new(n)?;
    if r > n {
        return Err(Error::Representation(format!(
            "uniform rank {r} exceeds ground set size {n}"
        )));
    }
    if r == 0 {
        return Err(Error::Loop("uniform matroid of rank 0".into()));
    }
    Ok(MatroidSpec {
        ground,
        kind: MatroidKind::Uniform { rank: r },
    })
}

/// The free matroid on `n` elements.
pub fn free(n: usize) -> Result<MatroidSpec> {
    uniform(n, n)
}

pub fn partition(n: usize, rep: PartitionRepresentation) -> Result<MatroidSpec> {
    let ground = GroundSet::new(n)?;
    if rep.classes.len() != rep.capacities.len() {
        return Err(Error::Representation(format!(
            "{} classes but {} capacities",
            rep.classes.len(),
            rep.capacities.len()
        )));
    }
    let mut covered = SubsetMask::EMPTY;
    for (idx, (&class, &cap)) in rep.classes.iter().zip(&rep.capacities).enumerate() {
        ground.check(class)?;
        if class.is_empty() {
            return Err(Error::Representation(format!(
                "partition class {idx} is empty"
            )));
        }
        if !(covered & class).is_empty() {
            return Err(Error::Representation(format!(
                "partition class {idx} overlaps earlier classes in {}",
                covered & class
            )));
        }
        if cap == 0 {
            return Err(Error::Loop(format!("partition class {idx} has capacity 0")));
        }
        covered = covered | class;
    }
    if covered != ground.full() {
        return Err(Error::Representation(format!(
            "partition classes miss elements {}",
            ground.full() - covered
        )));
    }
    Ok(MatroidSpec {
        ground,
        kind: MatroidKind::Partition(rep),
    })
}

/// Graphic matroid of a multigraph; the ground set is its edge list.
pub fn graphic(rep: GraphRepresentation) -> Result<MatroidSpec> {
    let ground = GroundSet::new(rep.edges.len())?;
    for (idx, &(u, v)) in rep.edges.iter().enumerate() {
        if u >= rep.vertices || v >= rep.vertices {
            return Err(Error::Representation(format!(
                "edge {idx} = ({u},{v}) references a vertex outside 0..{}",
                rep.vertices
            )));
        }
        if u == v {
            return Err(Error::Loop(format!(
                "edge {idx} is a self-loop at vertex {u}"
            )));
        }
    }
    Ok(MatroidSpec {
        ground,
        kind: MatroidKind::Graphic(rep),
    })
}

pub fn split(n: usize, rep: SplitRepresentation) -> Result<MatroidSpec> {
    let ground = GroundSet::new(n)?;
    rep.validate(n)?;
    Ok(MatroidSpec {
        ground,
        kind: MatroidKind::Split(rep),
    })
}

/// `(m)_k`: independent sets of `m` with at most `k` elements.
pub fn truncate(m: &MatroidSpec, k: usize) -> Result<MatroidSpec> {
    if k == 0 {
        return Err(Error::Loop("0-truncation".into()));
    }
    Ok(MatroidSpec {
        ground: m.ground,
        kind: MatroidKind::Truncation {
            inner: Box::new(m.clone()),
            k,
        },
    })
}

/// `m1 + m2` with the elements of `m2` shifted up by `m1`'s ground size.
pub fn direct_sum(m1: &MatroidSpec, m2: &MatroidSpec) -> Result<MatroidSpec> {
    let ground = GroundSet::new(m1.ground_size() + m2.ground_size())?;
    Ok(MatroidSpec {
        ground,
        kind: MatroidKind::DirectSum {
            left: Box::new(m1.clone()),
            right: Box::new(m2.clone()),
        },
    })
}
