//! JSON Lines records for `solve`, `decide` and `verify`.

use edds_core::characterize::{cycle_edds, path_edds};
use edds_core::{
    verify_edds, Certificate, Decision, Graph, Solver, TaggedGraph, Target, VertexSet,
};
use serde::Serialize;

/// Error record emitted in place of a result for a bad input line.
#[derive(Debug, Serialize)]
pub struct LineError {
    pub line: usize,
    pub graph6: String,
    pub error: String,
}

#[derive(Debug, Serialize)]
pub struct SolveRecord {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub exists: bool,
    pub size: Option<usize>,
    pub count: usize,
    pub witness: Option<Vec<usize>>,
    /// Whether the witness induces a perfect matching on itself.
    pub matching_ok: Option<bool>,
}

pub fn solve(solver: &Solver, line: usize, graph6: &str, g: &Graph) -> Result<SolveRecord, String> {
    let all = solver.enumerate(g).map_err(|e| e.to_string())?;
    let stats = edds_core::solver::stats_of(&all).map_err(|e| e.to_string())?;
    let witness = all.first().copied();
    Ok(SolveRecord {
        line,
        graph6: graph6.to_string(),
        n: g.order(),
        exists: stats.exists,
        size: stats.size,
        count: stats.count,
        witness: witness.map(VertexSet::to_vec),
        matching_ok: witness.map(|d| g.is_one_regular_on(d).unwrap_or(false)),
    })
}

#[derive(Debug, Serialize)]
pub struct CertificateRecord {
    pub kind: &'static str,
    pub vertices: Vec<usize>,
    pub tags: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DecideRecord {
    pub line: usize,
    pub graph6: String,
    pub target: String,
    pub target_order: usize,
    pub exists: bool,
    pub reason: &'static str,
    pub witness: Option<Vec<usize>>,
    pub witness_tags: Option<Vec<String>>,
    pub certificate: Option<CertificateRecord>,
}

/// Everything `decide` accepts: the six transforms plus the path and cycle
/// on as many vertices as the input graph has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecideTarget {
    Transform(Target),
    Path,
    Cycle,
}

impl std::str::FromStr for DecideTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(DecideTarget::Path),
            "cycle" => Ok(DecideTarget::Cycle),
            _ => s
                .parse::<Target>()
                .map(DecideTarget::Transform)
                .map_err(|_| format!("unknown target `{s}` (expected s, s-bar, mu, mu-bar, m, m-bar, path or cycle)")),
        }
    }
}

impl DecideTarget {
    pub fn code(self) -> &'static str {
        match self {
            DecideTarget::Transform(t) => t.code(),
            DecideTarget::Path => "path",
            DecideTarget::Cycle => "cycle",
        }
    }

    /// The decision together with the graph its witness lives in.
    pub fn run(self, g: &Graph) -> Result<(Decision, TaggedGraph), String> {
        let n = g.order();
        match self {
            DecideTarget::Transform(t) => {
                let built = t.build(g).map_err(|e| e.to_string())?;
                let d = t.decide(g).map_err(|e| e.to_string())?;
                Ok((d, built))
            }
            DecideTarget::Path => {
                let p = if n == 0 { Graph::empty(0).unwrap() } else { edds_core::generate::path(n) };
                Ok((path_edds(n), TaggedGraph::identity(p)))
            }
            DecideTarget::Cycle => {
                let d = cycle_edds(n).map_err(|e| e.to_string())?;
                Ok((d, TaggedGraph::identity(edds_core::generate::cycle(n))))
            }
        }
    }
}

pub fn decide(target: DecideTarget, line: usize, graph6: &str, g: &Graph) -> Result<DecideRecord, String> {
    let (d, built) = target.run(g)?;
    let source_tags = TaggedGraph::identity(g.clone());
    let certificate = d.certificate.map(|c| {
        let (kind, set) = match c {
            Certificate::Omega(o) => ("omega", o),
            Certificate::IsolatedPair(a, b) => ("isolated-pair", VertexSet::from([a, b])),
        };
        CertificateRecord {
            kind,
            vertices: set.to_vec(),
            tags: source_tags.render(set),
        }
    });
    Ok(DecideRecord {
        line,
        graph6: graph6.to_string(),
        target: target.code().to_string(),
        target_order: built.graph.order(),
        exists: d.exists,
        reason: d.reason.code(),
        witness: d.witness.map(VertexSet::to_vec),
        witness_tags: d.witness.map(|w| built.render(w)),
        certificate,
    })
}

#[derive(Debug, Serialize)]
pub struct ViolationRecord {
    pub vertex: usize,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub line: usize,
    pub graph6: String,
    pub set: Vec<usize>,
    pub valid: bool,
    pub violations: Vec<ViolationRecord>,
}

pub fn verify(line: usize, graph6: &str, g: &Graph, set: VertexSet) -> Result<VerifyRecord, String> {
    let violations = verify_edds(g, set).map_err(|e| e.to_string())?;
    Ok(VerifyRecord {
        line,
        graph6: graph6.to_string(),
        set: set.to_vec(),
        valid: violations.is_empty(),
        violations: violations
            .into_iter()
            .map(|v| ViolationRecord {
                vertex: v.vertex,
                count: v.count,
            })
            .collect(),
    })
}
