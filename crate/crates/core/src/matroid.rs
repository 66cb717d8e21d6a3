//! The matroid abstraction. Implementors supply only an independence predicate;
//! rank, closure and fundamental circuits are derived from it.

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

pub trait Matroid {
    fn ground_size(&self) -> usize;

    /// Whether `x` is independent. `x` must lie inside the ground set.
    fn is_independent(&self, x: SubsetMask) -> bool;

    /// Size of a maximum independent subset of `x`, by the greedy scan.
    fn rank(&self, x: SubsetMask) -> usize {
        let mut basis = SubsetMask::EMPTY;
        for e in x.iter() {
            let grown = basis.with(e);
            if self.is_independent(grown) {
                basis = grown;
            }
        }
        basis.len()
    }

    /// `{e : r(x + e) = r(x)}`.
    fn closure(&self, x: SubsetMask) -> SubsetMask {
        let r = self.rank(x);
        (0..self.ground_size())
            .filter(|&e| x.contains(e) || self.rank(x.with(e)) == r)
            .collect()
    }

    /// `{y in i : i + x - y independent}` for independent `i` and `x` spanned by `i`.
    fn fundamental_circuit(&self, i: SubsetMask, x: usize) -> Result<SubsetMask> {
        if !self.is_independent(i) {
            return Err(Error::Contract(format!(
                "fundamental circuit base {i} is not independent"
            )));
        }
        if x >= self.ground_size() || i.contains(x) {
            return Err(Error::Contract(format!(
                "element {x} must lie outside {i} in the ground set"
            )));
        }
        let grown = i.with(x);
        if self.is_independent(grown) {
            return Err(Error::Contract(format!(
                "element {x} is not spanned by {i}"
            )));
        }
        Ok(i.iter()
            .filter(|&y| self.is_independent(grown.without(y)))
            .collect())
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, x: SubsetMask) -> bool {
        (**self).is_independent(x)
    }

    fn rank(&self, x: SubsetMask) -> usize {
        (**self).rank(x)
    }
}
