//! Simple undirected graphs on at most 64 vertices, with adjacency stored as
//! one machine word per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order any [`Graph`] can have: one `u64` word per neighborhood.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64` stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `0..n`.
    #[inline]
    pub const fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub const fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Shortest-path length between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|a| a.is_empty())
    }

    /// BFS distance; `Unreachable` across components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Distance::Finite(0));
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = VertexSet::singleton(u);
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.adj[w]);
            }
            next = next.difference(seen);
            if next.contains(v) {
                return Ok(Distance::Finite(d));
            }
            seen = seen.union(next);
            frontier = next;
        }
        Ok(Distance::Unreachable)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for x in self.adj[w].difference(seen).iter() {
                seen.insert(x);
                queue.push_back(x);
            }
        }
        seen.len() == self.n
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::Input(format!(
                "vertex set {s:?} is not contained in 0..{}",
                self.n
            )));
        }
        let members = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| index[w]).collect())
            .collect();
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::Input(format!("vertex {v} outside 0..{}", self.n)))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn construction_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!((0..3).all(|v| k3.degree(v).unwrap() == 2));

        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert!(k1.is_edgeless());

        let g = Graph::new(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(g.neighbors(2).unwrap().is_empty());
        assert!(g.neighbors(3).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(65, &[]), Err(Error::Capacity { .. })));
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(cycle(5).neighbors(0).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(complete(4).neighbors(2).unwrap().to_vec(), vec![0, 1, 3]);
        assert!(Graph::empty(3).unwrap().neighbors(0).unwrap().is_empty());
        assert!(cycle(5).neighbors(5).is_err());
    }

    #[test]
    fn distance_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(cycle(6).distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(
            Graph::empty(2).unwrap().distance(0, 1).unwrap(),
            Distance::Unreachable
        );
        assert_eq!(cycle(6).distance(4, 4).unwrap(), Distance::Finite(0));
        assert!(cycle(6).distance(0, 6).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let c6 = cycle(6);
        let p3 = c6.induced_subgraph([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c6.induced_subgraph(c6.vertices()).unwrap(), c6);
        let e3 = c6.induced_subgraph([0, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(e3, Graph::empty(3).unwrap());
        assert!(c6.induced_subgraph(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn vertex_set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(a.intersection(b).to_vec(), vec![2]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.complement(6).to_vec(), vec![1, 3, 4]);
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
