//! Exact doubly dominating sets (EDDS) on simple graphs.
//!
//! A vertex set `D` is an EDDS when every closed neighbourhood meets it in
//! exactly two vertices. This crate provides:
//!
//! * [`Graph`], a bit-set backed simple graph, with graph6 I/O, named
//!   families and exhaustive labeled enumeration;
//! * the subdivision, matching subdivision, Mycielskian, line and middle
//!   constructions in [`transforms`], with per-vertex provenance tags;
//! * a backtracking EDDS [`solver`] used as ground truth;
//! * closed-form deciders for the transformed graphs in [`characterize`].

pub mod characterize;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod transforms;
pub mod vertex_set;

pub use characterize::{
    complement_middle_edds, complement_mycielskian_edds, complement_subdivision_edds, cycle_edds,
    middle_edds, mycielskian_edds, omega_witness, path_edds, replay_reverse_construction,
    subdivision_edds, Certificate, Decision, OmegaWitness, Reason, ReplayError, ReverseReplay,
    Target,
};
pub use generate::{enumerate_graphs, gen_family, Family};
pub use graph::{Graph, GraphError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use solver::{
    edds_stats, enumerate_edds, find_edds, verify_edds, EddsStats, EddsViolation, Solver,
    SolverError,
};
pub use transforms::{TaggedGraph, VertexTag};
pub use vertex_set::{VertexSet, MAX_ORDER};
