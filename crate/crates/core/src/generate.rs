//! Named graph families and exhaustive labeled enumeration.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

/// Largest order [`enumerate_graphs`] accepts; `n = 7` already yields 2^21 graphs.
pub const ENUMERATION_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Empty,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::Empty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Empty => "empty",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}` (expected path, cycle, star, complete or empty)"))
    }
}

/// Canonical labeled member of `family` on `n` vertices.
///
/// Paths and cycles are labeled in traversal order; the star center is 0,
/// so `Star` with `n` vertices is `K_{1,n-1}`.
pub fn gen_family(family: Family, n: usize) -> Result<Graph, GraphError> {
    let min = if family == Family::Cycle { 3 } else { 1 };
    if n < min {
        return Err(GraphError::InvalidFamilyOrder {
            family: family.name(),
            n,
        });
    }
    match family {
        Family::Path => Graph::new(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Star => Graph::new(n, (1..n).map(|i| (0, i))),
        Family::Complete => Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))),
        Family::Empty => Graph::empty(n),
    }
}

pub fn path(n: usize) -> Graph {
    gen_family(Family::Path, n).expect("path order")
}

pub fn cycle(n: usize) -> Graph {
    gen_family(Family::Cycle, n).expect("cycle order")
}

/// `K_{1,leaves}`.
pub fn star(leaves: usize) -> Graph {
    gen_family(Family::Star, leaves + 1).expect("star order")
}

pub fn complete(n: usize) -> Graph {
    gen_family(Family::Complete, n).expect("complete order")
}

/// Disjoint union; vertices of `b` follow those of `a`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
    let shift = a.order();
    Graph::new(
        a.order() + b.order(),
        a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift))),
    )
}

/// Every labeled simple graph on `n` vertices, each exactly once.
///
/// Bit `k` of the counter selects the `k`-th vertex pair in lexicographic
/// order, so graph number 0 is edgeless and the last one is complete.
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration, GraphError> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(GraphError::EnumerationBound {
            n,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Ok(GraphEnumeration {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// All labeled graphs on `1..=max_n` vertices, smallest order first.
pub fn enumerate_up_to(max_n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    let parts = (1..=max_n)
        .map(enumerate_graphs)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parts.into_iter().flatten())
}

#[derive(Debug, Clone)]
pub struct GraphEnumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("enumerated pairs are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for GraphEnumeration {}
