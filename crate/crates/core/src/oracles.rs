//! Restricted oracle access to a pair of matroids.
//!
//! A [`RestrictedOracle`] hides two matroids behind exactly one [`OracleKind`]
//! and counts every query it answers. Solvers never see the matroids
//! themselves; only [`OracleKind::FullPair`] hands out a [`MatroidPair`].
//!
//! [`ShapeOracle`] realizes the four rank-sum question shapes used by the
//! rank-sum search, either with one `Sum` query each or with `CI` and `Max`
//! queries combined.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::SubsetMask;
use crate::zoo::MatroidSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    Sum,
    Min,
    Max,
    Ci,
    CiPlusMax,
    FullPair,
}

impl OracleKind {
    pub const ALL: [OracleKind; 6] = [
        OracleKind::Sum,
        OracleKind::Min,
        OracleKind::Max,
        OracleKind::Ci,
        OracleKind::CiPlusMax,
        OracleKind::FullPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Sum => "sum",
            OracleKind::Min => "min",
            OracleKind::Max => "max",
            OracleKind::Ci => "ci",
            OracleKind::CiPlusMax => "ci-plus-max",
            OracleKind::FullPair => "full-pair",
        }
    }

    fn answers_ci(self) -> bool {
        matches!(
            self,
            OracleKind::Ci | OracleKind::CiPlusMax | OracleKind::FullPair
        )
    }

    fn answers_max(self) -> bool {
        matches!(
            self,
            OracleKind::Max | OracleKind::CiPlusMax | OracleKind::FullPair
        )
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OracleKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        OracleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown oracle kind `{s}`"))
    }
}

/// Two matroids on a common ground set, with unrestricted access.
#[derive(Debug, Clone, Copy)]
pub struct MatroidPair<'a> {
    pub m1: &'a MatroidSpec,
    pub m2: &'a MatroidSpec,
}

impl<'a> MatroidPair<'a> {
    pub fn new(m1: &'a MatroidSpec, m2: &'a MatroidSpec) -> Result<Self> {
        if m1.ground_size() != m2.ground_size() {
            return Err(Error::GroundMismatch {
                left: m1.ground_size(),
                right: m2.ground_size(),
            });
        }
        Ok(MatroidPair { m1, m2 })
    }

    pub fn n(&self) -> usize {
        self.m1.ground_size()
    }

    pub fn ranks(&self, x: SubsetMask) -> (usize, usize) {
        (self.m1.rank(x), self.m2.rank(x))
    }

    pub fn rank_sum(&self, x: SubsetMask) -> usize {
        let (r1, r2) = self.ranks(x);
        r1 + r2
    }

    pub fn rank_min(&self, x: SubsetMask) -> usize {
        let (r1, r2) = self.ranks(x);
        r1.min(r2)
    }

    pub fn rank_max(&self, x: SubsetMask) -> usize {
        let (r1, r2) = self.ranks(x);
        r1.max(r2)
    }

    pub fn is_common_independent(&self, x: SubsetMask) -> bool {
        self.m1.is_independent(x) && self.m2.is_independent(x)
    }

    /// Answer of a single-valued oracle. `Ci` answers 1 for "Yes".
    /// Panics for the combined kinds, which answer two values.
    pub fn answer(&self, kind: OracleKind, x: SubsetMask) -> usize {
        match kind {
            OracleKind::Sum => self.rank_sum(x),
            OracleKind::Min => self.rank_min(x),
            OracleKind::Max => self.rank_max(x),
            OracleKind::Ci => self.is_common_independent(x) as usize,
            OracleKind::CiPlusMax | OracleKind::FullPair => {
                panic!("{kind} is not a single-valued oracle")
            }
        }
    }
}

/// Calls answered, per query type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryCounts {
    pub sum: u64,
    pub min: u64,
    pub max: u64,
    pub ci: u64,
}

impl QueryCounts {
    pub fn total(&self) -> u64 {
        self.sum + self.min + self.max + self.ci
    }
}

/// Simulated rank-sum shape questions, counted separately from the raw
/// queries that answered them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCounts {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub expands: u64,
}

pub struct RestrictedOracle<'a> {
    pair: MatroidPair<'a>,
    kind: OracleKind,
    counts: QueryCounts,
}

impl<'a> RestrictedOracle<'a> {
    pub fn new(pair: MatroidPair<'a>, kind: OracleKind) -> Self {
        RestrictedOracle {
            pair,
            kind,
            counts: QueryCounts::default(),
        }
    }

    pub fn kind(&self) -> OracleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn counts(&self) -> QueryCounts {
        self.counts
    }

    fn require(&self, allowed: bool, query: &'static str) -> Result<()> {
        if allowed {
            Ok(())
        } else {
            Err(Error::Capability {
                kind: self.kind,
                query,
            })
        }
    }

    pub fn query_sum(&mut self, x: SubsetMask) -> Result<usize> {
        self.require(
            matches!(self.kind, OracleKind::Sum | OracleKind::FullPair),
            "sum",
        )?;
        self.counts.sum += 1;
        Ok(self.pair.rank_sum(x))
    }

    pub fn query_min(&mut self, x: SubsetMask) -> Result<usize> {
        self.require(
            matches!(self.kind, OracleKind::Min | OracleKind::FullPair),
            "min",
        )?;
        self.counts.min += 1;
        Ok(self.pair.rank_min(x))
    }

    pub fn query_max(&mut self, x: SubsetMask) -> Result<usize> {
        self.require(self.kind.answers_max(), "max")?;
        self.counts.max += 1;
        Ok(self.pair.rank_max(x))
    }

    pub fn query_ci(&mut self, x: SubsetMask) -> Result<bool> {
        self.require(self.kind.answers_ci(), "ci")?;
        self.counts.ci += 1;
        Ok(self.pair.is_common_independent(x))
    }

    /// Unrestricted access, granted only to [`OracleKind::FullPair`].
    pub fn full_pair(&self) -> Result<MatroidPair<'a>> {
        self.require(self.kind == OracleKind::FullPair, "full-pair")?;
        Ok(self.pair)
    }
}

/// The rank-sum questions asked by the rank-sum search. For `base` a common
/// independent set and `x` outside it:
///
/// * (a) `r_sum(base + x) = 2|base|`
/// * (b) `r_sum(base + x) = 2|base| + 1`
/// * (c) `r_sum(base + x) = 2|base| + 2`
/// * (d) `r_sum(set) = 2|set|`, for any `set`
///
/// plus `expands`, the source-or-sink test `r_sum(base + x) >= 2|base| + 1`.
pub trait SumQueryCapability {
    fn shape_a(&mut self, base: SubsetMask, x: usize) -> bool;
    fn shape_b(&mut self, base: SubsetMask, x: usize) -> bool;
    fn shape_c(&mut self, base: SubsetMask, x: usize) -> bool;
    fn shape_d(&mut self, set: SubsetMask) -> bool;
    fn expands(&mut self, base: SubsetMask, x: usize) -> bool;

    /// Full access for test-build assertions, when the caller supplied it.
    fn audit(&self) -> Option<MatroidPair<'_>> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Backend {
    Sum,
    CiMax,
}

/// Shape questions answered by a `Sum` oracle, or by `CI` and `Max` together.
pub struct ShapeOracle<'a> {
    oracle: RestrictedOracle<'a>,
    backend: Backend,
    shapes: ShapeCounts,
    audit: Option<MatroidPair<'a>>,
}

impl<'a> ShapeOracle<'a> {
    /// `Sum` and `FullPair` answer with rank-sum queries, `CiPlusMax` with
    /// `CI` and `Max` queries. Any other kind is a capability error.
    pub fn new(oracle: RestrictedOracle<'a>) -> Result<Self> {
        let backend = match oracle.kind() {
            OracleKind::Sum | OracleKind::FullPair => Backend::Sum,
            OracleKind::CiPlusMax => Backend::CiMax,
            kind => {
                return Err(Error::Capability {
                    kind,
                    query: "rank-sum shape",
                })
            }
        };
        Ok(ShapeOracle {
            oracle,
            backend,
            shapes: ShapeCounts::default(),
            audit: None,
        })
    }

    /// Attach full access used only to assert shape preconditions and the
    /// path invariants of the search.
    pub fn with_audit(mut self, pair: MatroidPair<'a>) -> Self {
        self.audit = Some(pair);
        self
    }

    pub fn oracle(&self) -> &RestrictedOracle<'a> {
        &self.oracle
    }

    pub fn into_oracle(self) -> RestrictedOracle<'a> {
        self.oracle
    }

    pub fn shape_counts(&self) -> ShapeCounts {
        self.shapes
    }

    fn sum(&mut self, x: SubsetMask) -> usize {
        self.oracle
            .query_sum(x)
            .expect("backend chosen from the oracle kind")
    }

    fn ci(&mut self, x: SubsetMask) -> bool {
        self.oracle
            .query_ci(x)
            .expect("backend chosen from the oracle kind")
    }

    fn max(&mut self, x: SubsetMask) -> usize {
        self.oracle
            .query_max(x)
            .expect("backend chosen from the oracle kind")
    }

    fn check_base(&self, base: SubsetMask, x: usize) {
        if let Some(pair) = self.audit {
            assert!(
                pair.is_common_independent(base),
                "shape query on {base}, which is not common independent"
            );
            assert!(!base.contains(x), "shape query element {x} lies in {base}");
        }
    }

    fn check_answer(&self, set: SubsetMask, target: usize, answer: bool) {
        if let Some(pair) = self.audit {
            assert_eq!(
                pair.rank_sum(set) == target,
                answer,
                "shape answer for {set} disagrees with r_sum"
            );
        }
    }

    /// Compares `r_sum(base + x)` against `2|base| + offset`.
    fn shape(&mut self, base: SubsetMask, x: usize, offset: usize) -> bool {
        self.check_base(base, x);
        let k = base.len();
        let grown = base.with(x);
        let answer = match (self.backend, offset) {
            (Backend::Sum, _) => self.sum(grown) == 2 * k + offset,
            (Backend::CiMax, 2) => self.ci(grown),
            (Backend::CiMax, _) => !self.ci(grown) && self.max(grown) == k + offset,
        };
        self.check_answer(grown, 2 * k + offset, answer);
        answer
    }
}

impl SumQueryCapability for ShapeOracle<'_> {
    fn shape_a(&mut self, base: SubsetMask, x: usize) -> bool {
        self.shapes.a += 1;
        self.shape(base, x, 0)
    }

    fn shape_b(&mut self, base: SubsetMask, x: usize) -> bool {
        self.shapes.b += 1;
        self.shape(base, x, 1)
    }

    fn shape_c(&mut self, base: SubsetMask, x: usize) -> bool {
        self.shapes.c += 1;
        self.shape(base, x, 2)
    }

    fn shape_d(&mut self, set: SubsetMask) -> bool {
        self.shapes.d += 1;
        let answer = match self.backend {
            Backend::Sum => self.sum(set) == 2 * set.len(),
            Backend::CiMax => self.ci(set),
        };
        self.check_answer(set, 2 * set.len(), answer);
        answer
    }

    fn expands(&mut self, base: SubsetMask, x: usize) -> bool {
        self.shapes.expands += 1;
        self.check_base(base, x);
        let k = base.len();
        let grown = base.with(x);
        let answer = match self.backend {
            Backend::Sum => self.sum(grown) > 2 * k,
            Backend::CiMax => self.ci(grown) || self.max(grown) == k + 1,
        };
        if let Some(pair) = self.audit {
            assert_eq!(pair.rank_sum(grown) > 2 * k, answer);
        }
        answer
    }

    fn audit(&self) -> Option<MatroidPair<'_>> {
        self.audit
    }
}

/// Common-independence queries, from a `CI`, `CiPlusMax` or `FullPair` oracle.
pub struct CiOracle<'a> {
    oracle: RestrictedOracle<'a>,
}

impl<'a> CiOracle<'a> {
    pub fn new(oracle: RestrictedOracle<'a>) -> Result<Self> {
        if !oracle.kind().answers_ci() {
            return Err(Error::Capability {
                kind: oracle.kind(),
                query: "ci",
            });
        }
        Ok(CiOracle { oracle })
    }

    pub fn n(&self) -> usize {
        self.oracle.n()
    }

    pub fn is_common_independent(&mut self, x: SubsetMask) -> bool {
        self.oracle
            .query_ci(x)
            .expect("kind checked at construction")
    }

    pub fn oracle(&self) -> &RestrictedOracle<'a> {
        &self.oracle
    }

    pub fn into_oracle(self) -> RestrictedOracle<'a> {
        self.oracle
    }
}
