//! Exact doubly dominating sets: verification and exhaustive search.
//!
//! `D` is an exact doubly dominating set (EDDS) when `|N[v] ∩ D| = 2` for
//! every vertex `v`. The search assigns vertices in or out of `D` and keeps
//! each closed-neighbourhood counter feasible: a vertex whose chosen count
//! exceeds two, or whose chosen plus undecided count falls below two, kills
//! the branch.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the solver bound of {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// Two EDDS of different sizes were found. All EDDS of a graph share one
    /// size, so this always means a solver bug.
    #[error("internal consistency failure: EDDS sizes {0} and {1} differ")]
    InconsistentSizes(usize, usize),
}

/// A vertex whose closed neighbourhood meets the candidate set `count != 2` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EddsViolation {
    pub vertex: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EddsStats {
    pub exists: bool,
    /// Common size of every EDDS, when one exists.
    pub size: Option<usize>,
    pub count: usize,
}

/// Every vertex whose closed neighbourhood does not meet `set` exactly twice.
pub fn verify_edds(g: &Graph, set: VertexSet) -> Result<Vec<EddsViolation>, GraphError> {
    g.check_set(set)?;
    Ok((0..g.order())
        .map(|v| EddsViolation {
            vertex: v,
            count: g.closed(v).intersection(set).len(),
        })
        .filter(|x| x.count != 2)
        .collect())
}

pub fn is_edds(g: &Graph, set: VertexSet) -> bool {
    matches!(verify_edds(g, set), Ok(v) if v.is_empty())
}

/// Backtracking EDDS search with a vertex-count bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub max_n: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl Solver {
    pub fn with_max_n(max_n: usize) -> Self {
        Solver { max_n }
    }

    fn check(&self, g: &Graph) -> Result<(), SolverError> {
        if g.order() > self.max_n {
            Err(SolverError::TooLarge {
                n: g.order(),
                max: self.max_n,
            })
        } else {
            Ok(())
        }
    }

    /// The first EDDS in branching order, if any.
    pub fn find(&self, g: &Graph) -> Result<Option<VertexSet>, SolverError> {
        self.check(g)?;
        let mut found = None;
        Search::new(g).run(&mut |d| {
            found = Some(d);
            ControlFlow::Break(())
        });
        Ok(found)
    }

    /// All EDDS of `g`, sorted by their member lists.
    pub fn enumerate(&self, g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
        self.check(g)?;
        let mut all = Vec::new();
        Search::new(g).run(&mut |d| {
            all.push(d);
            ControlFlow::Continue(())
        });
        all.sort();
        all.dedup();
        Ok(all)
    }

    pub fn stats(&self, g: &Graph) -> Result<EddsStats, SolverError> {
        let all = self.enumerate(g)?;
        stats_of(&all)
    }
}

/// Aggregates an enumeration, rejecting mixed sizes.
pub fn stats_of(all: &[VertexSet]) -> Result<EddsStats, SolverError> {
    let size = all.first().map(|d| d.len());
    if let Some(s) = size {
        if let Some(bad) = all.iter().find(|d| d.len() != s) {
            return Err(SolverError::InconsistentSizes(s, bad.len()));
        }
    }
    Ok(EddsStats {
        exists: size.is_some(),
        size,
        count: all.len(),
    })
}

pub fn find_edds(g: &Graph) -> Result<Option<VertexSet>, SolverError> {
    Solver::default().find(g)
}

pub fn enumerate_edds(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    Solver::default().enumerate(g)
}

pub fn edds_stats(g: &Graph) -> Result<EddsStats, SolverError> {
    Solver::default().stats(g)
}

struct Search {
    n: usize,
    closed: Vec<VertexSet>,
}

#[derive(Clone, Copy)]
struct State {
    chosen: VertexSet,
    excluded: VertexSet,
}

impl Search {
    fn new(g: &Graph) -> Self {
        Search {
            n: g.order(),
            closed: (0..g.order()).map(|v| g.closed(v)).collect(),
        }
    }

    fn run(&self, visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>) {
        // The empty graph has no vertex to dominate; it is reported as having no EDDS.
        if self.n == 0 {
            return;
        }
        let start = State {
            chosen: VertexSet::empty(),
            excluded: VertexSet::empty(),
        };
        let _ = self.branch(start, visit);
    }

    /// Forces every decision implied by the counters. Returns `None` on a
    /// dead branch.
    ///
    /// A chosen vertex with two chosen neighbours already counts three in its
    /// own closed neighbourhood, so the induced-matching prune falls out of
    /// the `> 2` test.
    fn propagate(&self, mut s: State) -> Option<State> {
        loop {
            let mut changed = false;
            for nv in &self.closed {
                let have = nv.intersection(s.chosen).len();
                let open = nv.difference(s.chosen).difference(s.excluded);
                if have > 2 || have + open.len() < 2 {
                    return None;
                }
                if open.is_empty() {
                    continue;
                }
                if have == 2 {
                    s.excluded = s.excluded.union(open);
                    changed = true;
                } else if have + open.len() == 2 {
                    s.chosen = s.chosen.union(open);
                    changed = true;
                }
            }
            if !changed {
                return Some(s);
            }
        }
    }

    /// Fail-first: the closed neighbourhood with the fewest undecided
    /// vertices, lowest index on ties; branch on its lowest undecided member.
    fn pick(&self, s: &State) -> Option<usize> {
        let decided = s.chosen.union(s.excluded);
        self.closed
            .iter()
            .map(|nv| nv.difference(decided))
            .filter(|open| !open.is_empty())
            .min_by_key(|open| open.len())
            .and_then(|open| open.first())
    }

    fn branch(&self, s: State, visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>) -> ControlFlow<()> {
        let Some(s) = self.propagate(s) else {
            return ControlFlow::Continue(());
        };
        let Some(x) = self.pick(&s) else {
            return visit(s.chosen);
        };
        let mut with = s;
        with.chosen.insert(x);
        self.branch(with, visit)?;
        let mut without = s;
        without.excluded.insert(x);
        self.branch(without, visit)
    }
}
