#![allow(dead_code)]

use edds_core::{Graph, VertexSet};

/// Naive EDDS oracle: test every subset directly against the definition.
pub fn brute_force_edds(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    assert!(n <= 20, "brute force is exponential");
    let closed: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).bits() | 1u128 << v)
        .collect();
    let mut out: Vec<VertexSet> = (0u128..1 << n)
        .filter(|d| closed.iter().all(|c| (c & d).count_ones() == 2))
        .map(VertexSet::from_bits)
        .collect();
    out.sort();
    out
}

/// `G` is `P_3` or `C_3` under some labeling.
pub fn is_p3_or_c3(g: &Graph) -> bool {
    g.order() == 3 && g.is_connected()
}
