//! graph6 encoding, short form only (`n <= 62`).
//!
//! A line is one byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    BadByte { pos: usize, byte: u8 },
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("graph of order {0} is too large for short-form graph6")]
    TooLarge(usize),
    #[error("padding bits in the final byte must be zero")]
    NonZeroPadding,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=125).contains(&head) {
        return Err(Graph6Error::BadByte { pos: 0, byte: head });
    }
    let n = (head - 63) as usize;
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: data.len(),
        });
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (k, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { pos: k + 1, byte: b });
        }
        let chunk = b - 63;
        bits.extend((0..6).rev().map(|s| chunk >> s & 1 == 1));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits[k..].iter().any(|&b| b) {
        return Err(Graph6Error::NonZeroPadding);
    }
    Ok(Graph::new(n, edges).expect("graph6 pairs are in range and loop-free"))
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = String::with_capacity(1 + data_len(n));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
