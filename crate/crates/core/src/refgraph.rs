//! Explicit exchangeability graphs and the classical augmenting-path
//! algorithms built on them. Everything here needs full access to both
//! matroids; it is the reference the restricted solvers are checked against.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracles::MatroidPair;
use crate::subset::{SubsetMask, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphVariant {
    /// `D[I]`.
    Full,
    /// `D'[I]`: `D[I]` without arcs entering a source or leaving a sink.
    Pruned,
}

/// Bipartite digraph on `(E - I, I)`.
///
/// Arcs `y -> x` (with `y` in `I`) come from the first matroid, arcs `x -> y`
/// from the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    base: SubsetMask,
    sources: SubsetMask,
    sinks: SubsetMask,
    out: Vec<SubsetMask>,
    variant: GraphVariant,
}

impl ExchangeGraph {
    pub fn n(&self) -> usize {
        self.out.len()
    }

    /// The common independent set `I` the graph was built on.
    pub fn base(&self) -> SubsetMask {
        self.base
    }

    pub fn sources(&self) -> SubsetMask {
        self.sources
    }

    pub fn sinks(&self) -> SubsetMask {
        self.sinks
    }

    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    pub fn successors(&self, v: usize) -> SubsetMask {
        self.out[v]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out[from].contains(to)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Whether `vertices` is a path of this graph.
    pub fn is_path(&self, vertices: &[usize]) -> bool {
        let distinct = SubsetMask::from_elements(vertices.iter().copied()).len() == vertices.len();
        distinct && vertices.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    /// Vertex costs: `w(e)` on `I`, `-w(e)` off `I`.
    pub fn costs(&self, w: &Weighting) -> Vec<i64> {
        element_costs(w, self.base)
    }
}

pub fn element_costs(w: &Weighting, base: SubsetMask) -> Vec<i64> {
    (0..w.len())
        .map(|e| if base.contains(e) { w[e] } else { -w[e] })
        .collect()
}

/// All pairs `(y, x)` with `y` in `i`, `x` outside, and `i - y + x` independent in `m`.
pub fn swap_pairs<M: Matroid + ?Sized>(m: &M, i: SubsetMask) -> Vec<(usize, usize)> {
    let outside = i.complement(m.ground_size());
    let mut pairs = Vec::new();
    for y in i.iter() {
        for x in outside.iter() {
            if m.is_independent(i.without(y).with(x)) {
                pairs.push((y, x));
            }
        }
    }
    pairs
}

pub fn build_exchange_graph(
    pair: &MatroidPair<'_>,
    i: SubsetMask,
    variant: GraphVariant,
) -> Result<ExchangeGraph> {
    if !pair.is_common_independent(i) {
        return Err(Error::Contract(format!("{i} is not common independent")));
    }
    let n = pair.n();
    let outside = i.complement(n);
    let sources: SubsetMask = outside
        .iter()
        .filter(|&s| pair.m1.is_independent(i.with(s)))
        .collect();
    let sinks: SubsetMask = outside
        .iter()
        .filter(|&t| pair.m2.is_independent(i.with(t)))
        .collect();
    let pruned = variant == GraphVariant::Pruned;
    let mut out = vec![SubsetMask::EMPTY; n];
    for (y, x) in swap_pairs(pair.m1, i) {
        if !(pruned && sources.contains(x)) {
            out[y] = out[y].with(x);
        }
    }
    for (y, x) in swap_pairs(pair.m2, i) {
        if !(pruned && sinks.contains(x)) {
            out[x] = out[x].with(y);
        }
    }
    Ok(ExchangeGraph {
        base: i,
        sources,
        sinks,
        out,
        variant,
    })
}

/// A path with its vertex cost. Its length is the number of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostedPath {
    pub vertices: Vec<usize>,
    pub cost: i64,
}

impl CostedPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> SubsetMask {
        SubsetMask::from_elements(self.vertices.iter().copied())
    }

    /// Order by cost, then length, then vertex sequence.
    pub fn rank_cmp(&self, other: &CostedPath) -> Ordering {
        (self.cost, self.vertices.len(), &self.vertices).cmp(&(
            other.cost,
            other.vertices.len(),
            &other.vertices,
        ))
    }
}

/// Bellman–Ford over vertex costs, started from every vertex at once.
pub fn has_negative_cycle(g: &ExchangeGraph, w: &Weighting) -> bool {
    let cost = g.costs(w);
    let n = g.n();
    let mut dist = cost.clone();
    for _ in 0..n {
        let mut changed = false;
        for u in 0..n {
            for v in g.successors(u).iter() {
                let through = dist[u] + cost[v];
                if through < dist[v] {
                    dist[v] = through;
                    changed = true;
                }
            }
        }
        if !changed {
            return false;
        }
    }
    true
}

/// Minimum `(cost, length, vertex sequence)` path from `from` to `to`.
pub fn shortest_cheapest_path(
    g: &ExchangeGraph,
    w: &Weighting,
    from: SubsetMask,
    to: SubsetMask,
) -> Result<Option<CostedPath>> {
    if has_negative_cycle(g, w) {
        return Err(Error::Contract(format!(
            "exchange graph on {} has a negative-cost cycle",
            g.base()
        )));
    }
    let cost = g.costs(w);
    let n = g.n();
    let mut labels: Vec<Option<CostedPath>> = vec![None; n];
    for s in from.iter() {
        labels[s] = Some(CostedPath {
            vertices: vec![s],
            cost: cost[s],
        });
    }
    for _ in 0..=n {
        let mut changed = false;
        for u in 0..n {
            let Some(head) = labels[u].clone() else {
                continue;
            };
            let visited = head.vertex_set();
            for v in (g.successors(u) - visited).iter() {
                let mut vertices = head.vertices.clone();
                vertices.push(v);
                let candidate = CostedPath {
                    vertices,
                    cost: head.cost + cost[v],
                };
                let better = labels[v]
                    .as_ref()
                    .is_none_or(|cur| candidate.rank_cmp(cur) == Ordering::Less);
                if better {
                    labels[v] = Some(candidate);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(to
        .iter()
        .filter_map(|t| labels[t].take())
        .min_by(|a, b| a.rank_cmp(b)))
}

/// Number of vertices on a shortest path from `s` to each vertex.
pub fn bfs_distances(g: &ExchangeGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(1);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in g.successors(u).iter() {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// A fewest-vertex path from `from` to `to`, exploring in ascending vertex order.
pub fn shortest_path(g: &ExchangeGraph, from: SubsetMask, to: SubsetMask) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = from;
    let mut queue: VecDeque<usize> = from.iter().collect();
    while let Some(u) = queue.pop_front() {
        if to.contains(u) {
            let mut path = vec![u];
            let mut cur = u;
            while let Some(p) = parent[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for v in (g.successors(u) - seen).iter() {
            seen = seen.with(v);
            parent[v] = Some(u);
            queue.push_back(v);
        }
    }
    None
}

/// Vertices that can reach some vertex of `targets`.
pub fn reaching(g: &ExchangeGraph, targets: SubsetMask) -> SubsetMask {
    let mut reach = targets;
    loop {
        let grown: SubsetMask = (0..g.n())
            .filter(|&v| reach.contains(v) || !(g.successors(v) & reach).is_empty())
            .collect();
        if grown == reach {
            return reach;
        }
        reach = grown;
    }
}

/// `r_1(Z) + r_2(E - Z)`.
pub fn certificate_value(pair: &MatroidPair<'_>, z: SubsetMask) -> usize {
    pair.m1.rank(z) + pair.m2.rank(z.complement(pair.n()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Augmentation {
    /// `I` symmetric-difference an augmenting path.
    Augmented { set: SubsetMask, path: Vec<usize> },
    /// No augmenting path; `r_1(Z) + r_2(E - Z) = |I|`.
    Exhausted { certificate: SubsetMask },
}

fn exhausted(pair: &MatroidPair<'_>, i: SubsetMask) -> Result<Augmentation> {
    let full = build_exchange_graph(pair, i, GraphVariant::Full)?;
    Ok(Augmentation::Exhausted {
        certificate: reaching(&full, full.sinks()),
    })
}

/// One step of the cardinality algorithm: a shortest source–sink path in `D[I]`.
pub fn augment_unweighted(pair: &MatroidPair<'_>, i: SubsetMask) -> Result<Augmentation> {
    let g = build_exchange_graph(pair, i, GraphVariant::Full)?;
    match shortest_path(&g, g.sources(), g.sinks()) {
        Some(path) => Ok(Augmentation::Augmented {
            set: i ^ SubsetMask::from_elements(path.iter().copied()),
            path,
        }),
        None => Ok(Augmentation::Exhausted {
            certificate: reaching(&g, g.sinks()),
        }),
    }
}

/// One step of the weighted algorithm, for `i` w-maximal at its size: the
/// shortest cheapest source–sink path, searched in `D'[I]`.
pub fn cheapest_path_augment(
    pair: &MatroidPair<'_>,
    w: &Weighting,
    i: SubsetMask,
) -> Result<Augmentation> {
    let full = build_exchange_graph(pair, i, GraphVariant::Full)?;
    if has_negative_cycle(&full, w) {
        return Err(Error::Contract(format!(
            "{i} is not w-maximal at size {}: D[I] has a negative cycle",
            i.len()
        )));
    }
    let g = build_exchange_graph(pair, i, GraphVariant::Pruned)?;
    match shortest_cheapest_path(&g, w, g.sources(), g.sinks())? {
        Some(path) => Ok(Augmentation::Augmented {
            set: i ^ path.vertex_set(),
            path: path.vertices,
        }),
        None => exhausted(pair, i),
    }
}

/// Weighted augmentation from the empty set to exhaustion. Returns the
/// w-maximal set of every size and the final certificate.
pub fn solve_full(pair: &MatroidPair<'_>, w: &Weighting) -> Result<(Vec<SubsetMask>, SubsetMask)> {
    let mut sets = vec![SubsetMask::EMPTY];
    let mut current = SubsetMask::EMPTY;
    loop {
        match cheapest_path_augment(pair, w, current)? {
            Augmentation::Augmented { set, .. } => {
                current = set;
                sets.push(set);
            }
            Augmentation::Exhausted { certificate } => return Ok((sets, certificate)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, MatroidSpec, PartitionRepresentation};

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().copied())
    }

    /// K_{2,2}: element 2i+j is the edge from left i to right j.
    fn k22() -> (MatroidSpec, MatroidSpec) {
        let left = zoo::partition(
            4,
            PartitionRepresentation::all_one(vec![set(&[0, 1]), set(&[2, 3])]),
        )
        .unwrap();
        let right = zoo::partition(
            4,
            PartitionRepresentation::all_one(vec![set(&[0, 2]), set(&[1, 3])]),
        )
        .unwrap();
        (left, right)
    }

    /// Enumerate `i + x - y` independence directly, independent of `swap_pairs`.
    fn enumerated_arcs(pair: &MatroidPair<'_>, i: SubsetMask) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for y in i.iter() {
            for x in i.complement(pair.n()).iter() {
                let swapped = (i - set(&[y])) | set(&[x]);
                if pair.m1.is_independent(swapped) {
                    arcs.push((y, x));
                }
                if pair.m2.is_independent(swapped) {
                    arcs.push((x, y));
                }
            }
        }
        arcs.sort();
        arcs
    }

    #[test]
    fn empty_base_graph() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let g = build_exchange_graph(&pair, SubsetMask::EMPTY, GraphVariant::Full).unwrap();
        assert_eq!(g.arc_count(), 0);
        assert_eq!(g.sources(), SubsetMask::full(4));
        assert_eq!(g.sinks(), SubsetMask::full(4));
    }

    #[test]
    fn k22_arcs_match_enumeration() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let i = set(&[0]);
        let g = build_exchange_graph(&pair, i, GraphVariant::Full).unwrap();
        let mut arcs: Vec<_> = (0..4)
            .flat_map(|u| g.successors(u).iter().map(move |v| (u, v)))
            .collect();
        arcs.sort();
        assert_eq!(arcs, enumerated_arcs(&pair, i));
        assert!(g.has_arc(0, 1));
        assert!(g.has_arc(1, 0));
        assert_eq!(g.sources(), set(&[2, 3]));
        assert_eq!(g.sinks(), set(&[1, 3]));

        let pruned = build_exchange_graph(&pair, i, GraphVariant::Pruned).unwrap();
        // (1,0) leaves a sink; (0,2) enters a source
        assert!(!pruned.has_arc(1, 0));
        assert!(!pruned.has_arc(0, 2));
        assert!(pruned.has_arc(0, 1));
        assert!(pruned.has_arc(2, 0));
    }

    #[test]
    fn common_basis_has_no_terminals() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let g = build_exchange_graph(&pair, set(&[0, 3]), GraphVariant::Full).unwrap();
        assert!(g.sources().is_empty());
        assert!(g.sinks().is_empty());
        assert!(build_exchange_graph(&pair, set(&[0, 1]), GraphVariant::Full).is_err());
    }

    #[test]
    fn unweighted_augmentation() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        match augment_unweighted(&pair, SubsetMask::EMPTY).unwrap() {
            Augmentation::Augmented { set: j, path } => {
                assert_eq!(j.len(), 1);
                assert_eq!(path.len(), 1);
            }
            other => panic!("{other:?}"),
        }
        match augment_unweighted(&pair, set(&[0])).unwrap() {
            Augmentation::Augmented { set: j, .. } => {
                assert_eq!(j.len(), 2);
                assert!(pair.is_common_independent(j));
            }
            other => panic!("{other:?}"),
        }

        let u12 = zoo::uniform(2, 1).unwrap();
        let pair = MatroidPair::new(&u12, &u12).unwrap();
        match augment_unweighted(&pair, set(&[0])).unwrap() {
            Augmentation::Exhausted { certificate } => {
                assert_eq!(certificate_value(&pair, certificate), 1);
                let min = SubsetMask::full(2)
                    .subsets()
                    .map(|z| certificate_value(&pair, z))
                    .min()
                    .unwrap();
                assert_eq!(min, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k22_weighted() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let w = Weighting::new(vec![5, 1, 1, 4]).unwrap();
        let (sets, certificate) = solve_full(&pair, &w).unwrap();
        assert_eq!(sets[1], set(&[0]));
        assert_eq!(sets[2], set(&[0, 3]));
        assert_eq!(w.total(sets[2]), 9);
        assert_eq!(certificate_value(&pair, certificate), 2);
    }

    #[test]
    fn negative_cycles() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let w = Weighting::new(vec![5, 1, 1, 4]).unwrap();
        let empty = build_exchange_graph(&pair, SubsetMask::EMPTY, GraphVariant::Full).unwrap();
        assert!(!has_negative_cycle(&empty, &w));
        let optimal = build_exchange_graph(&pair, set(&[0, 3]), GraphVariant::Full).unwrap();
        assert!(!has_negative_cycle(&optimal, &w));
        let poor = build_exchange_graph(&pair, set(&[1, 2]), GraphVariant::Full).unwrap();
        assert!(has_negative_cycle(&poor, &w));
        assert!(shortest_cheapest_path(&poor, &w, SubsetMask::EMPTY, SubsetMask::EMPTY).is_err());
        assert!(matches!(
            cheapest_path_augment(&pair, &w, set(&[3])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn shortest_cheapest_basics() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let w = Weighting::new(vec![5, 1, 1, 4]).unwrap();
        let g = build_exchange_graph(&pair, SubsetMask::EMPTY, GraphVariant::Pruned).unwrap();
        // overlapping endpoints: cheapest single vertex is -5 at element 0
        let p = shortest_cheapest_path(&g, &w, set(&[0, 1]), set(&[0, 1, 2]))
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0]);
        assert_eq!(p.cost, -5);
        assert!(shortest_cheapest_path(&g, &w, set(&[0]), set(&[1]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn bfs_and_reach() {
        let (a, b) = k22();
        let pair = MatroidPair::new(&a, &b).unwrap();
        let g = build_exchange_graph(&pair, set(&[0]), GraphVariant::Pruned).unwrap();
        let d = bfs_distances(&g, 2);
        assert_eq!(d[2], Some(1));
        assert_eq!(d[0], Some(2));
        assert_eq!(d[1], Some(3));
        let path = shortest_path(&g, g.sources(), g.sinks()).unwrap();
        assert!(g.is_path(&path));
        assert!(reaching(&g, set(&[1])).contains(2));
    }
}
