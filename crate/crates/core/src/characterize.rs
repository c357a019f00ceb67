//! Closed-form EDDS deciders for paths, cycles and the transformed graphs
//! `S(G)`, `mu(G)`, `M(G)` and their complements.
//!
//! Each decider takes the source graph `G` and returns a [`Decision`] whose
//! witness, when present, is expressed in the vertex indices of the target
//! graph produced by [`Target::build`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::solver::{verify_edds, EddsViolation};
use crate::transforms::{self, subdivide_matching, TaggedGraph, VertexTag};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    Mod3Fail,
    NoOmegaWitness,
    AlwaysNonexistent,
    IsolatedPair,
    NoIsolatedPair,
    C4Special,
    EmptyGraph,
    WitnessFound,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::Mod3Fail => "mod3-fail",
            Reason::NoOmegaWitness => "no-omega-witness",
            Reason::AlwaysNonexistent => "always-nonexistent",
            Reason::IsolatedPair => "isolated-pair",
            Reason::NoIsolatedPair => "no-isolated-pair",
            Reason::C4Special => "c4-special",
            Reason::EmptyGraph => "empty-graph",
            Reason::WitnessFound => "witness-found",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Auxiliary data backing a positive decision, in source-graph coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Omega(VertexSet),
    IsolatedPair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub exists: bool,
    pub witness: Option<VertexSet>,
    pub reason: Reason,
    pub certificate: Option<Certificate>,
}

impl Decision {
    fn no(reason: Reason) -> Self {
        Decision {
            exists: false,
            witness: None,
            reason,
            certificate: None,
        }
    }

    fn yes(witness: VertexSet, reason: Reason, certificate: Option<Certificate>) -> Self {
        Decision {
            exists: true,
            witness: Some(witness),
            reason,
            certificate,
        }
    }
}

/// EDDS of `P_n`: exists iff `n ≡ 2 (mod 3)`; witness keeps vertices with
/// `v mod 3` in `{0, 1}`.
pub fn path_edds(n: usize) -> Decision {
    if n == 0 {
        Decision::no(Reason::EmptyGraph)
    } else if n % 3 == 2 {
        Decision::yes(mod3_pattern(n), Reason::WitnessFound, None)
    } else {
        Decision::no(Reason::Mod3Fail)
    }
}

/// EDDS of `C_n`, `n >= 3`: exists iff `3 | n`.
pub fn cycle_edds(n: usize) -> Result<Decision, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamilyOrder { family: "cycle", n });
    }
    Ok(if n.is_multiple_of(3) {
        Decision::yes(mod3_pattern(n), Reason::WitnessFound, None)
    } else {
        Decision::no(Reason::Mod3Fail)
    })
}

fn mod3_pattern(n: usize) -> VertexSet {
    (0..n).filter(|v| v % 3 != 2).collect()
}

/// A set of degree-2 vertices whose open neighbourhoods partition the rest
/// of the graph. Equivalently, the closed neighbourhoods of its members
/// partition `V(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaWitness {
    pub omega: VertexSet,
}

impl OmegaWitness {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::empty();
        for w in self.omega {
            if w >= g.order() || g.degree(w) != 2 {
                return false;
            }
            let nw = g.neighbors(w);
            if !nw.is_disjoint(covered) {
                return false;
            }
            covered = covered.union(nw);
        }
        covered == g.vertices().difference(self.omega)
    }
}

/// Finds an Ω-witness by exact-cover backtracking: the lowest uncovered
/// vertex must lie in `N[w]` for some degree-2 `w` whose closed
/// neighbourhood avoids everything covered so far. Candidates are tried in
/// ascending order. The empty graph has no witness.
pub fn omega_witness(g: &Graph) -> Option<OmegaWitness> {
    let n = g.order();
    if n == 0 || !n.is_multiple_of(3) {
        return None;
    }
    let blocks: Vec<Option<VertexSet>> = (0..n)
        .map(|w| (g.degree(w) == 2).then(|| g.closed(w)))
        .collect();
    let full = g.vertices();

    fn cover(
        blocks: &[Option<VertexSet>],
        full: VertexSet,
        covered: VertexSet,
        omega: VertexSet,
    ) -> Option<VertexSet> {
        let Some(target) = full.difference(covered).first() else {
            return Some(omega);
        };
        blocks
            .iter()
            .enumerate()
            .filter_map(|(w, b)| b.map(|b| (w, b)))
            .filter(|(_, b)| b.contains(target) && b.is_disjoint(covered))
            .find_map(|(w, b)| {
                let mut next = omega;
                next.insert(w);
                cover(blocks, full, covered.union(b), next)
            })
    }

    cover(&blocks, full, VertexSet::empty(), VertexSet::empty()).map(|omega| OmegaWitness { omega })
}

/// EDDS of `S(G)`. When Ω exists the witness is
/// `(V(G) \ Ω) ∪ { z_ij : z_ij adjacent to a member of Ω }`, of size `4n/3`.
pub fn subdivision_edds(g: &Graph) -> Result<Decision, GraphError> {
    let n = g.order();
    if n == 0 {
        return Ok(Decision::no(Reason::EmptyGraph));
    }
    if !n.is_multiple_of(3) {
        return Ok(Decision::no(Reason::Mod3Fail));
    }
    let Some(OmegaWitness { omega }) = omega_witness(g) else {
        return Ok(Decision::no(Reason::NoOmegaWitness));
    };
    let s = transforms::subdivision(g)?;
    let mut d = g.vertices().difference(omega);
    for (z, tag) in s.tags.iter().enumerate() {
        if let VertexTag::EdgeVertex(i, j) = *tag {
            if omega.contains(i) || omega.contains(j) {
                d.insert(z);
            }
        }
    }
    Ok(Decision::yes(d, Reason::WitnessFound, Some(Certificate::Omega(omega))))
}

/// Shared by the three complement deciders: two isolated vertices of `G`,
/// which sit at the same indices in every target layout.
fn isolated_pair(g: &Graph) -> Option<Decision> {
    let mut iso = g.isolated_vertices().iter();
    let (a, b) = (iso.next()?, iso.next()?);
    Some(Decision::yes(
        VertexSet::from([a, b]),
        Reason::IsolatedPair,
        Some(Certificate::IsolatedPair(a, b)),
    ))
}

/// EDDS of the complement of `S(G)`: exists iff `G` has two isolated vertices.
pub fn complement_subdivision_edds(g: &Graph) -> Decision {
    if g.order() == 0 {
        return Decision::no(Reason::EmptyGraph);
    }
    isolated_pair(g).unwrap_or_else(|| Decision::no(Reason::NoIsolatedPair))
}

/// `mu(G)` never has an EDDS.
pub fn mycielskian_edds(g: &Graph) -> Decision {
    if g.order() == 0 {
        return Decision::no(Reason::EmptyGraph);
    }
    Decision::no(Reason::AlwaysNonexistent)
}

/// EDDS of the complement of `mu(G)`: exists iff `G` has two isolated vertices.
pub fn complement_mycielskian_edds(g: &Graph) -> Decision {
    if g.order() == 0 {
        return Decision::no(Reason::EmptyGraph);
    }
    isolated_pair(g).unwrap_or_else(|| Decision::no(Reason::NoIsolatedPair))
}

/// `M(G)` never has an EDDS.
pub fn middle_edds(g: &Graph) -> Decision {
    if g.order() == 0 {
        return Decision::no(Reason::EmptyGraph);
    }
    Decision::no(Reason::AlwaysNonexistent)
}

/// EDDS of the complement of `M(G)`: two isolated vertices of `G`, or the
/// four edge-vertices when `G` is a 4-cycle.
pub fn complement_middle_edds(g: &Graph) -> Decision {
    if g.order() == 0 {
        return Decision::no(Reason::EmptyGraph);
    }
    if let Some(d) = isolated_pair(g) {
        return d;
    }
    if g.is_c4() {
        // M(C4) puts its four edge-vertices right after the originals.
        return Decision::yes(VertexSet::from([4, 5, 6, 7]), Reason::C4Special, None);
    }
    Decision::no(Reason::NoIsolatedPair)
}

/// The six graph transforms whose EDDS existence is decided in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Subdivision,
    ComplementSubdivision,
    Mycielskian,
    ComplementMycielskian,
    Middle,
    ComplementMiddle,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Subdivision,
        Target::ComplementSubdivision,
        Target::Mycielskian,
        Target::ComplementMycielskian,
        Target::Middle,
        Target::ComplementMiddle,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Target::Subdivision => "s",
            Target::ComplementSubdivision => "s-bar",
            Target::Mycielskian => "mu",
            Target::ComplementMycielskian => "mu-bar",
            Target::Middle => "m",
            Target::ComplementMiddle => "m-bar",
        }
    }

    pub fn build(self, g: &Graph) -> Result<TaggedGraph, GraphError> {
        Ok(match self {
            Target::Subdivision => transforms::subdivision(g)?,
            Target::ComplementSubdivision => transforms::subdivision(g)?.complement(),
            Target::Mycielskian => transforms::mycielskian(g)?,
            Target::ComplementMycielskian => transforms::mycielskian(g)?.complement(),
            Target::Middle => transforms::middle(g)?,
            Target::ComplementMiddle => transforms::middle(g)?.complement(),
        })
    }

    pub fn decide(self, g: &Graph) -> Result<Decision, GraphError> {
        Ok(match self {
            Target::Subdivision => subdivision_edds(g)?,
            Target::ComplementSubdivision => complement_subdivision_edds(g),
            Target::Mycielskian => mycielskian_edds(g),
            Target::ComplementMycielskian => complement_mycielskian_edds(g),
            Target::Middle => middle_edds(g),
            Target::ComplementMiddle => complement_middle_edds(g),
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::ALL
            .into_iter()
            .find(|t| t.code() == s)
            .ok_or_else(|| format!("unknown target `{s}` (expected s, s-bar, mu, mu-bar, m or m-bar)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("not an EDDS of S(G): {} violating vertices", .0.len())]
    NotAnEdds(Vec<EddsViolation>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("reverse construction broke an invariant: {0}")]
    Structure(&'static str),
}

/// Result of undoing the subdivision of a matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReverseReplay {
    /// Original vertices left out of the EDDS.
    pub omega: VertexSet,
    pub h: Graph,
    /// Edges of `h` that were subdivided, as `(a, b)` with `a < b`, sorted.
    pub matching: Vec<(usize, usize)>,
    /// `h_labels[k]` is the vertex of `G` that vertex `k` of `h` stands for.
    pub h_labels: Vec<usize>,
    /// Ω-vertices whose two neighbours are adjacent in `G`. Contracting one
    /// of their edges would need a parallel edge, which a simple `h` drops.
    pub triangle_exceptions: VertexSet,
    /// Whether `subdivide_matching(h, matching)` reproduces `G` under the
    /// tracked vertex correspondence.
    pub round_trip: bool,
}

/// Given an EDDS `d` of `S(G)` (indices in [`transforms::subdivision`]
/// layout), contracts one edge at each Ω-vertex (towards its lower-indexed
/// neighbour) and reports the resulting `(H, M)` pair.
pub fn replay_reverse_construction(g: &Graph, d: VertexSet) -> Result<ReverseReplay, ReplayError> {
    let s = transforms::subdivision(g)?;
    let violations = verify_edds(&s.graph, d)?;
    if !violations.is_empty() {
        return Err(ReplayError::NotAnEdds(violations));
    }
    let omega = g.vertices().difference(d);

    let mut h = g.clone();
    let mut labels: Vec<usize> = (0..g.order()).collect();
    let mut pairs = Vec::with_capacity(omega.len());
    let mut triangle_exceptions = VertexSet::empty();
    for w in omega {
        let nw = g.neighbors(w);
        if nw.len() != 2 {
            return Err(ReplayError::Structure("Ω-vertex without degree 2"));
        }
        let (a, b) = (nw.first().unwrap(), nw.last().unwrap());
        if g.has_edge(a, b) {
            triangle_exceptions.insert(w);
        }
        let at = |x: usize| labels.iter().position(|&l| l == x).expect("vertex survives");
        let (iw, ia) = (at(w), at(a));
        h = h.contract_edge(iw, ia)?;
        let (keep, gone) = (iw.min(ia), iw.max(ia));
        labels[keep] = a;
        labels.remove(gone);
        pairs.push((a, b));
    }

    if h.order() != 2 * omega.len() {
        return Err(ReplayError::Structure("|V(H)| != 2|Ω|"));
    }
    let at = |x: usize| labels.iter().position(|&l| l == x).expect("vertex survives");
    let mut matching: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (at(a), at(b));
            (x.min(y), x.max(y))
        })
        .collect();
    matching.sort_unstable();

    let rebuilt = match subdivide_matching(&h, &matching) {
        Ok(r) => r,
        Err(GraphError::NotAMatching(..)) => return Err(ReplayError::Structure("M is not a matching")),
        Err(e) => return Err(e.into()),
    };
    if matching.len() * 2 != h.order() {
        return Err(ReplayError::Structure("M is not perfect"));
    }
    // Map each rebuilt vertex back to the vertex of G it came from.
    let perm: Vec<usize> = rebuilt
        .tags
        .iter()
        .map(|tag| match *tag {
            VertexTag::Original(k) => labels[k],
            VertexTag::EdgeVertex(x, y) => {
                let (a, b) = (labels[x], labels[y]);
                omega
                    .iter()
                    .find(|&w| g.neighbors(w) == VertexSet::from([a, b]))
                    .expect("each matching edge comes from one Ω-vertex")
            }
            _ => unreachable!("subdivide_matching only emits originals and edge-vertices"),
        })
        .collect();
    let round_trip = rebuilt.graph.relabel(&perm)? == *g;

    Ok(ReverseReplay {
        omega,
        h,
        matching,
        h_labels: labels,
        triangle_exceptions,
        round_trip,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, disjoint_union, path};
    use crate::solver::{find_edds, is_edds};

    fn check_witness(target: Target, g: &Graph) -> Decision {
        let d = target.decide(g).unwrap();
        let t = target.build(g).unwrap();
        assert_eq!(d.exists, d.witness.is_some());
        assert_eq!(d.exists, find_edds(&t.graph).unwrap().is_some(), "{target} on {g:?}");
        if let Some(w) = d.witness {
            assert!(is_edds(&t.graph, w), "{target} witness {w} on {g:?}");
        }
        d
    }

    #[test]
    fn paths() {
        let d = path_edds(5);
        assert!(d.exists);
        assert_eq!(d.witness.unwrap().len(), 4);
        assert_eq!(path_edds(4).reason, Reason::Mod3Fail);
        assert_eq!(path_edds(2).witness, Some(VertexSet::from([0, 1])));
    }

    #[test]
    fn cycles() {
        assert_eq!(cycle_edds(3).unwrap().witness.unwrap().len(), 2);
        assert!(!cycle_edds(4).unwrap().exists);
        assert_eq!(cycle_edds(6).unwrap().witness, Some(VertexSet::from([0, 1, 3, 4])));
        assert!(is_edds(&cycle(6), VertexSet::from([0, 1, 3, 4])));
        assert!(cycle_edds(2).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_witness(&path(3)).unwrap().omega, VertexSet::from([1]));
        let w = omega_witness(&cycle(3)).unwrap();
        assert_eq!(w.omega.len(), 1);
        assert!(w.is_valid_for(&cycle(3)));
        assert_eq!(omega_witness(&path(2)), None);
        assert_eq!(omega_witness(&Graph::empty(0).unwrap()), None);
        let p6 = omega_witness(&path(6)).unwrap();
        assert_eq!(p6.omega, VertexSet::from([1, 4]));
    }

    #[test]
    fn subdivision_examples() {
        let d = check_witness(Target::Subdivision, &path(3));
        // S(P3) indices: v1 v2 v3 = 0 1 2, z(1,2) = 3, z(2,3) = 4.
        assert_eq!(d.witness, Some(VertexSet::from([0, 2, 3, 4])));
        assert_eq!(d.certificate, Some(Certificate::Omega(VertexSet::from([1]))));

        let d = check_witness(Target::Subdivision, &path(2));
        assert!(!d.exists);
        assert_eq!(d.exists, path_edds(3).exists);

        assert_eq!(subdivision_edds(&cycle(4)).unwrap().reason, Reason::Mod3Fail);
        assert_eq!(subdivision_edds(&Graph::empty(0).unwrap()).unwrap().reason, Reason::EmptyGraph);
    }

    #[test]
    fn complement_subdivision_examples() {
        let d = check_witness(Target::ComplementSubdivision, &Graph::empty(2).unwrap());
        assert_eq!(d.witness, Some(VertexSet::from([0, 1])));
        assert!(!check_witness(Target::ComplementSubdivision, &path(2)).exists);
        let g = disjoint_union(&path(2), &Graph::empty(2).unwrap()).unwrap();
        let d = check_witness(Target::ComplementSubdivision, &g);
        assert_eq!(d.certificate, Some(Certificate::IsolatedPair(2, 3)));
    }

    #[test]
    fn mycielskian_examples() {
        for g in [path(5), Graph::empty(1).unwrap(), cycle(3)] {
            let d = check_witness(Target::Mycielskian, &g);
            assert_eq!(d.reason, Reason::AlwaysNonexistent);
        }
    }

    #[test]
    fn complement_mycielskian_examples() {
        let d = check_witness(Target::ComplementMycielskian, &Graph::empty(3).unwrap());
        assert_eq!(d.witness, Some(VertexSet::from([0, 1])));
        assert!(!check_witness(Target::ComplementMycielskian, &path(2)).exists);
        let g = disjoint_union(&path(2), &Graph::empty(2).unwrap()).unwrap();
        assert!(check_witness(Target::ComplementMycielskian, &g).exists);
    }

    #[test]
    fn middle_examples() {
        for g in [cycle(4), Graph::empty(2).unwrap(), path(3)] {
            assert!(!check_witness(Target::Middle, &g).exists);
        }
    }

    #[test]
    fn complement_middle_examples() {
        let d = check_witness(Target::ComplementMiddle, &cycle(4));
        assert_eq!(d.reason, Reason::C4Special);
        let m = Target::ComplementMiddle.build(&cycle(4)).unwrap();
        assert_eq!(m.render(d.witness.unwrap()), ["z(1,2)", "z(1,4)", "z(2,3)", "z(3,4)"]);
        assert!(check_witness(Target::ComplementMiddle, &Graph::empty(2).unwrap()).exists);
        assert!(!check_witness(Target::ComplementMiddle, &complete(3)).exists);
    }

    #[test]
    fn replay_on_p3() {
        let d = subdivision_edds(&path(3)).unwrap().witness.unwrap();
        let r = replay_reverse_construction(&path(3), d).unwrap();
        assert_eq!(r.h, path(2));
        assert_eq!(r.matching, vec![(0, 1)]);
        assert!(r.triangle_exceptions.is_empty());
        assert!(r.round_trip);
    }

    #[test]
    fn replay_on_p6() {
        let g = path(6);
        let d = subdivision_edds(&g).unwrap().witness.unwrap();
        let r = replay_reverse_construction(&g, d).unwrap();
        assert_eq!(r.h.order(), 4);
        assert_eq!(r.matching.len(), 2);
        assert!(r.round_trip);
    }

    #[test]
    fn replay_on_triangle_is_flagged() {
        let g = cycle(3);
        let d = subdivision_edds(&g).unwrap().witness.unwrap();
        let r = replay_reverse_construction(&g, d).unwrap();
        assert_eq!(r.h, path(2));
        assert_eq!(r.triangle_exceptions.len(), 1);
        assert!(!r.round_trip);
    }

    #[test]
    fn replay_rejects_non_edds() {
        assert!(matches!(
            replay_reverse_construction(&path(3), VertexSet::from([0])),
            Err(ReplayError::NotAnEdds(_))
        ));
    }

    #[test]
    fn target_codes() {
        for t in Target::ALL {
            assert_eq!(t.code().parse::<Target>(), Ok(t));
        }
        assert!("x".parse::<Target>().is_err());
    }
}
