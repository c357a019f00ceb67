//! Simple undirected graphs on at most [`MAX_ORDER`] labeled vertices.

use std::fmt;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edges {0:?} and {1:?} share an endpoint, so the edge set is not a matching")]
    NotAMatching((usize, usize), (usize, usize)),
    #[error("invalid order {n} for family {family}")]
    InvalidFamilyOrder { family: &'static str, n: usize },
    #[error("exhaustive enumeration supports at most {max} vertices, got {n}")]
    EnumerationBound { n: usize, max: usize },
    #[error("permutation of length {got} does not match graph order {n}")]
    BadPermutation { n: usize, got: usize },
}

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as one bit set per vertex. Values are immutable once
/// built; every constructor checks that adjacency is symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooManyVertices { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        })
    }

    /// Builds a graph from raw adjacency sets; the caller guarantees symmetry.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .difference(VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).difference(VertexSet::singleton(v)))
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Whether every member of `set` has exactly one neighbor inside `set`,
    /// i.e. the induced subgraph on `set` is a perfect matching of itself.
    pub fn is_one_regular_on(&self, set: VertexSet) -> Result<bool, GraphError> {
        self.check_set(set)?;
        Ok(set.iter().all(|v| self.adj[v].intersection(set).len() == 1))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.adj[v]))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::empty(), |acc, v| acc.union(self.adj[v]));
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen.len() == self.n
    }

    /// True iff this graph is a 4-cycle under some labeling.
    pub fn is_c4(&self) -> bool {
        self.n == 4 && (0..4).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Merges the endpoints of edge `uv` into one vertex. The merged vertex
    /// takes index `min(u, v)`, the larger index is removed and later indices
    /// shift down by one. Parallel edges collapse and no loop is created.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let relabel = |x: usize| if x > gone { x - 1 } else if x == gone { keep } else { x };
        let edges = self
            .edges()
            .map(|(a, b)| (relabel(a), relabel(b)))
            .filter(|(a, b)| a != b);
        Graph::new(self.n - 1, edges)
    }

    /// The graph whose vertex `perm[v]` plays the role of vertex `v` here.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation {
                n: self.n,
                got: perm.len(),
            });
        }
        let image: VertexSet = perm.iter().copied().filter(|&p| p < self.n).collect();
        if image.len() != self.n {
            return Err(GraphError::BadPermutation {
                n: self.n,
                got: perm.len(),
            });
        }
        Graph::new(self.n, self.edges().map(|(a, b)| (perm[a], perm[b])))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<(), GraphError> {
        match set.last() {
            Some(v) if v >= self.n => Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// Symmetric, loop-free and in range.
    pub fn is_well_formed(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                !self.adj[v].contains(v)
                    && self.check_set(self.adj[v]).is_ok()
                    && self.adj[v].iter().all(|u| self.adj[u].contains(v))
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn construction() {
        let g = p3();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let c4 = c(4);
        assert_eq!(c4.size(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let e2 = Graph::new(2, []).unwrap();
        assert_eq!(e2.size(), 0);

        let dup = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::empty(129),
            Err(GraphError::TooManyVertices { .. })
        ));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(c(3).closed_neighborhood(0).unwrap(), VertexSet::from([0, 1, 2]));
        assert_eq!(p3().closed_neighborhood(0).unwrap(), VertexSet::from([0, 1]));
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(e2.closed_neighborhood(0).unwrap(), VertexSet::from([0]));
        assert!(e2.closed_neighborhood(2).is_err());
    }

    #[test]
    fn complements() {
        let c4c = c(4).complement();
        assert_eq!(c4c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        let k3 = Graph::empty(3).unwrap().complement();
        assert_eq!(k3, c(3));
        assert_eq!(Graph::empty(0).unwrap().complement().order(), 0);
    }

    #[test]
    fn isolated() {
        assert_eq!(Graph::empty(2).unwrap().isolated_vertices(), VertexSet::from([0, 1]));
        assert!(c(4).isolated_vertices().is_empty());
        let p2_plus = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(p2_plus.isolated_vertices(), VertexSet::from([2]));
    }

    #[test]
    fn one_regular() {
        assert!(c(6).is_one_regular_on(VertexSet::from([0, 1, 3, 4])).unwrap());
        assert!(!c(3).is_one_regular_on(VertexSet::from([0, 1, 2])).unwrap());
        assert!(c(5).is_one_regular_on(VertexSet::empty()).unwrap());
        assert!(c(3).is_one_regular_on(VertexSet::from([5])).is_err());
    }

    #[test]
    fn c4_recognition() {
        let relabeled = Graph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(relabeled.is_c4());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_c4());
        assert!(!Graph::empty(4).unwrap().complement().is_c4());
        assert!(!c(5).is_c4());
    }

    #[test]
    fn contraction() {
        assert_eq!(p3().contract_edge(0, 1).unwrap(), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(c(3).contract_edge(2, 0).unwrap(), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(c(4).contract_edge(1, 2).unwrap(), c(3));
        assert_eq!(p3().contract_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn relabeling() {
        let g = p3().relabel(&[1, 0, 2]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert!(p3().relabel(&[0, 0, 1]).is_err());
    }
}
