//! Graph constructions that carry a provenance tag for every output vertex.
//!
//! Output vertices are laid out as: originals ascending, then edge-vertices
//! in lexicographic `(i, j)` order, then shadows ascending, then the apex.

use std::fmt;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_ORDER};

/// Role of a vertex in a constructed graph, in 0-based source coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexTag {
    /// Source vertex `v_i`.
    Original(usize),
    /// Vertex standing for source edge `v_i v_j`, `i < j`.
    EdgeVertex(usize, usize),
    /// Mycielskian copy `u_i` of `v_i`.
    Shadow(usize),
    /// Mycielskian apex `w`.
    Apex,
}

/// Renders 1-based, e.g. `v3`, `z(2,5)`, `u4`, `w`.
impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexTag::Original(i) => write!(f, "v{}", i + 1),
            VertexTag::EdgeVertex(i, j) => write!(f, "z({},{})", i + 1, j + 1),
            VertexTag::Shadow(i) => write!(f, "u{}", i + 1),
            VertexTag::Apex => write!(f, "w"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedGraph {
    pub graph: Graph,
    pub tags: Vec<VertexTag>,
    /// Order of the graph this one was built from.
    pub source_n: usize,
}

impl TaggedGraph {
    /// Wraps an untransformed graph, tagging every vertex as an original.
    pub fn identity(graph: Graph) -> Self {
        let n = graph.order();
        TaggedGraph {
            graph,
            tags: (0..n).map(VertexTag::Original).collect(),
            source_n: n,
        }
    }

    pub fn tag(&self, v: usize) -> VertexTag {
        self.tags[v]
    }

    pub fn index_of(&self, tag: VertexTag) -> Option<usize> {
        self.tags.iter().position(|&t| t == tag)
    }

    /// Indices whose tag satisfies `pred`.
    pub fn select(&self, pred: impl Fn(VertexTag) -> bool) -> VertexSet {
        self.tags
            .iter()
            .enumerate()
            .filter(|(_, &t)| pred(t))
            .map(|(v, _)| v)
            .collect()
    }

    pub fn originals(&self) -> VertexSet {
        self.select(|t| matches!(t, VertexTag::Original(_)))
    }

    pub fn edge_vertices(&self) -> VertexSet {
        self.select(|t| matches!(t, VertexTag::EdgeVertex(..)))
    }

    /// Same tags over the complement graph.
    pub fn complement(&self) -> TaggedGraph {
        TaggedGraph {
            graph: self.graph.complement(),
            tags: self.tags.clone(),
            source_n: self.source_n,
        }
    }

    pub fn render(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.tags[v].to_string()).collect()
    }

    /// Tags are unique and one per vertex.
    pub fn is_consistent(&self) -> bool {
        let mut sorted = self.tags.clone();
        sorted.sort();
        sorted.dedup();
        self.tags.len() == self.graph.order() && sorted.len() == self.tags.len()
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_ORDER {
        Err(GraphError::TooManyVertices { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Replaces each edge of `subdivided` (sorted, all edges of `g`) by a 2-path.
fn subdivide_edges(g: &Graph, subdivided: &[(usize, usize)]) -> Result<TaggedGraph, GraphError> {
    let n = g.order();
    check_order(n + subdivided.len())?;
    let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|e| subdivided.binary_search(e).is_err())
        .collect();
    for (k, &(i, j)) in subdivided.iter().enumerate() {
        let z = n + k;
        tags.push(VertexTag::EdgeVertex(i, j));
        edges.push((i, z));
        edges.push((j, z));
    }
    Ok(TaggedGraph {
        graph: Graph::new(n + subdivided.len(), edges)?,
        tags,
        source_n: n,
    })
}

/// `S(G)`: every edge `v_i v_j` becomes the path `v_i - z_ij - v_j`.
pub fn subdivision(g: &Graph) -> Result<TaggedGraph, GraphError> {
    let edges: Vec<_> = g.edges().collect();
    subdivide_edges(g, &edges)
}

/// `S_M(H)`: subdivides only the edges of the matching `matching`.
pub fn subdivide_matching(h: &Graph, matching: &[(usize, usize)]) -> Result<TaggedGraph, GraphError> {
    let mut m: Vec<(usize, usize)> = Vec::with_capacity(matching.len());
    let mut covered = VertexSet::empty();
    for &(u, v) in matching {
        if !h.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let e = (u.min(v), u.max(v));
        if covered.contains(u) || covered.contains(v) {
            let other = *m
                .iter()
                .find(|(a, b)| [*a, *b].iter().any(|&x| x == u || x == v))
                .expect("covered endpoint belongs to an earlier edge");
            return Err(GraphError::NotAMatching(other, e));
        }
        covered.insert(u);
        covered.insert(v);
        m.push(e);
    }
    m.sort_unstable();
    subdivide_edges(h, &m)
}

/// `mu(G)`: originals, shadows `u_i` adjacent to `N_G(v_i)`, and apex `w`
/// adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Result<TaggedGraph, GraphError> {
    let n = g.order();
    check_order(2 * n + 1)?;
    let apex = 2 * n;
    let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
    tags.extend((0..n).map(VertexTag::Shadow));
    tags.push(VertexTag::Apex);
    let mut edges = Vec::with_capacity(3 * g.size() + n);
    for (i, j) in g.edges() {
        edges.push((i, j));
        edges.push((i, n + j));
        edges.push((j, n + i));
    }
    edges.extend((0..n).map(|i| (n + i, apex)));
    Ok(TaggedGraph {
        graph: Graph::new(2 * n + 1, edges)?,
        tags,
        source_n: n,
    })
}

/// `L(G)`: one vertex per edge, adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<TaggedGraph, GraphError> {
    let edges: Vec<_> = g.edges().collect();
    check_order(edges.len())?;
    let tags = edges.iter().map(|&(i, j)| VertexTag::EdgeVertex(i, j)).collect();
    Ok(TaggedGraph {
        graph: Graph::new(edges.len(), line_adjacencies(&edges, 0))?,
        tags,
        source_n: g.order(),
    })
}

fn line_adjacencies(edges: &[(usize, usize)], offset: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &(i, j)) in edges.iter().enumerate() {
        for (b, &(k, l)) in edges.iter().enumerate().skip(a + 1) {
            if i == k || i == l || j == k || j == l {
                out.push((offset + a, offset + b));
            }
        }
    }
    out
}

/// `M(G)`: `S(G)` plus the line-graph adjacencies among the edge-vertices.
pub fn middle(g: &Graph) -> Result<TaggedGraph, GraphError> {
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    check_order(n + edges.len())?;
    let mut tags: Vec<VertexTag> = (0..n).map(VertexTag::Original).collect();
    let mut out = Vec::new();
    for (k, &(i, j)) in edges.iter().enumerate() {
        tags.push(VertexTag::EdgeVertex(i, j));
        out.push((i, n + k));
        out.push((j, n + k));
    }
    out.extend(line_adjacencies(&edges, n));
    Ok(TaggedGraph {
        graph: Graph::new(n + edges.len(), out)?,
        tags,
        source_n: n,
    })
}
