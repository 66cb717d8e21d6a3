//! Element sequences `P_e` built by the search emulations.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::subset::SubsetMask;

/// An ordered sequence of distinct elements. The null state of a label is
/// `None` in an `Option<PathSeq>` and costs more than any sequence.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<usize>")]
pub struct PathSeq {
    elements: Vec<usize>,
    #[serde(skip)]
    set: SubsetMask,
}

impl PathSeq {
    pub fn single(e: usize) -> Self {
        PathSeq {
            elements: vec![e],
            set: SubsetMask::singleton(e),
        }
    }

    /// Panics if `elements` repeats an element.
    pub fn from_elements(elements: Vec<usize>) -> Self {
        let set = SubsetMask::from_elements(elements.iter().copied());
        assert_eq!(
            set.len(),
            elements.len(),
            "repeated element in {elements:?}"
        );
        PathSeq { elements, set }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn as_set(&self) -> SubsetMask {
        self.set
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn first(&self) -> usize {
        self.elements[0]
    }

    pub fn last(&self) -> usize {
        self.elements[self.elements.len() - 1]
    }

    pub fn contains(&self, e: usize) -> bool {
        self.set.contains(e)
    }

    /// `P + e`. Panics if `e` is already present.
    pub fn extended(&self, e: usize) -> PathSeq {
        assert!(!self.contains(e), "{e} already on {self}");
        let mut elements = self.elements.clone();
        elements.push(e);
        PathSeq {
            elements,
            set: self.set.with(e),
        }
    }

    /// The element set without the final element.
    pub fn prefix_set(&self) -> SubsetMask {
        self.set.without(self.last())
    }

    pub fn cost(&self, costs: &[i64]) -> i64 {
        self.elements.iter().map(|&e| costs[e]).sum()
    }

    pub fn reversed(&self) -> PathSeq {
        PathSeq {
            elements: self.elements.iter().rev().copied().collect(),
            set: self.set,
        }
    }
}

impl From<PathSeq> for Vec<usize> {
    fn from(p: PathSeq) -> Self {
        p.elements
    }
}

impl fmt::Display for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, e) in self.elements.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A non-null label together with its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Costed {
    pub cost: i64,
    pub path: PathSeq,
}

impl Costed {
    pub fn new(path: PathSeq, costs: &[i64]) -> Self {
        Costed {
            cost: path.cost(costs),
            path,
        }
    }

    /// `(cost, length, sequence)`.
    pub fn rank_cmp(&self, other: &Costed) -> Ordering {
        (self.cost, self.path.len(), self.path.elements()).cmp(&(
            other.cost,
            other.path.len(),
            other.path.elements(),
        ))
    }
}

/// Cost of a possibly null label, with `None` as infinity.
pub(crate) fn strictly_cheaper(cost: i64, label: &Option<Costed>) -> bool {
    label.as_ref().is_none_or(|cur| cost < cur.cost)
}
