//! Ground sets, subsets and integer weights.
//!
//! Elements of a ground set of size `n` are the indices `0..n`; every subset is a
//! single 64-bit mask, so ground sets are capped at 64 elements.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Index, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// Largest supported absolute weight. Sums over 64 elements stay well inside `i64`.
pub const MAX_WEIGHT: i64 = 1 << 56;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        Ok(GroundSet { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false: ground sets have at least one element.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    pub fn contains(&self, x: SubsetMask) -> bool {
        x.is_subset(self.full())
    }

    pub fn check(&self, x: SubsetMask) -> Result<()> {
        match x.iter().find(|&e| e >= self.n) {
            Some(element) => Err(Error::ElementOutOfRange { element, n: self.n }),
            None => Ok(()),
        }
    }

    /// All `2^n` subsets in increasing mask order. Only sensible for small `n`.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        assert!(self.n < 32, "subset enumeration over {} elements", self.n);
        (0..1u64 << self.n).map(SubsetMask)
    }
}

/// A subset of a ground set, stored as a bitmask.
///
/// Serialized as the sorted list of its elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_GROUND);
        SubsetMask(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(SubsetMask::EMPTY, |acc, e| acc.with(e))
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        SubsetMask(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 ^ other.0)
    }

    /// Complement within a ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        SubsetMask::full(n).difference(self)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(SubsetMask(cur))
        })
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_elements(iter)
    }
}

impl From<SubsetMask> for Vec<usize> {
    fn from(mask: SubsetMask) -> Self {
        mask.to_vec()
    }
}

impl TryFrom<Vec<usize>> for SubsetMask {
    type Error = String;

    fn try_from(elements: Vec<usize>) -> Result<Self, String> {
        let mut mask = SubsetMask::EMPTY;
        for e in elements {
            if e >= MAX_GROUND {
                return Err(format!("element {e} exceeds the 64-element limit"));
            }
            if mask.contains(e) {
                return Err(format!("element {e} listed twice"));
            }
            mask = mask.with(e);
        }
        Ok(mask)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersection(rhs)
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        self.symmetric_difference(rhs)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        self.difference(rhs)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, e) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Integer weight per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weighting(Vec<i64>);

impl Weighting {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if let Some((element, &weight)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| w.unsigned_abs() > MAX_WEIGHT as u64)
        {
            return Err(Error::WeightRange { element, weight });
        }
        Ok(Weighting(weights))
    }

    pub fn zeros(n: usize) -> Self {
        Weighting(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self, x: SubsetMask) -> i64 {
        x.iter().map(|e| self.0[e]).sum()
    }
}

impl Index<usize> for Weighting {
    type Output = i64;
    fn index(&self, e: usize) -> &i64 {
        &self.0[e]
    }
}

impl TryFrom<Vec<i64>> for Weighting {
    type Error = Error;
    fn try_from(weights: Vec<i64>) -> Result<Self> {
        Weighting::new(weights)
    }
}

impl From<Weighting> for Vec<i64> {
    fn from(w: Weighting) -> Self {
        w.0
    }
}
