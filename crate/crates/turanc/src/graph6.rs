//! graph6 and DOT serialization.
//!
//! graph6 is the header-less text format: one size byte `n + 63` for
//! `n <= 62`, then the upper triangle of the adjacency matrix in column
//! order, six bits per byte, each byte offset by 63. Export of 63- and
//! 64-vertex graphs is rejected explicitly; import accepts `n <= 62` only.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Encodes a graph as a graph6 string (n <= 62).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::Graph6Export(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Decodes a header-less graph6 string.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let err = |pos: usize, msg: &str| Error::Graph6 {
        pos,
        msg: msg.to_string(),
    };
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let b0 = bytes[0];
    if b0 == 126 {
        return Err(err(0, "multi-byte sizes (n > 62) are not supported"));
    }
    if !(63..=125).contains(&b0) {
        return Err(err(0, "invalid size byte"));
    }
    let n = (b0 - 63) as usize;
    if n == 0 {
        return Err(err(0, "graphs need at least one vertex"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(err(
            bytes.len().min(1 + nbytes),
            &format!("expected {} data bytes, got {}", nbytes, bytes.len() - 1),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(nbits);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + k, "invalid data byte"));
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            let set = (val >> shift) & 1 == 1;
            if bit_index < nbits {
                if set {
                    let (i, j) = pairs[bit_index];
                    g.add_edge_mut(i, j)?;
                }
            } else if set {
                return Err(err(1 + k, "nonzero padding bits"));
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// DOT export (export-only; one `--` statement per edge, isolated vertices
/// listed as bare node statements).
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
