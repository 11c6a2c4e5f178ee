//! graph6 codec for graphs of order at most 62.
//!
//! A graph6 string is a size byte `n + 63` followed by the upper triangle
//! of the adjacency matrix read column by column — `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...` — packed big-endian into 6-bit groups, zero-padded, each
//! group offset by 63. Every byte therefore lies in `63..=126`. Only the
//! short form is supported (no `126` prefix), which caps the order at 62.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph order {n} too large for graph6 short form (max 62)")]
    OrderTooLarge { n: usize },
    #[error("empty graph6 string")]
    Empty,
    #[error("bad graph6 size byte {byte}")]
    BadSizeByte { byte: u8 },
    #[error("graph6 byte {byte} at index {index} outside 63..=126")]
    BadCharacter { index: usize, byte: u8 },
    #[error("graph6 string for order {n} needs {expected} data bytes, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
}

/// Encode a graph (order at most 62) as a graph6 string.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let mut out = Vec::with_capacity(1 + n * (n - 1) / 12 + 1);
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    // All bytes are in 63..=126, so this is valid ASCII.
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decode a graph6 string (short form only).
pub fn decode_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let &size = bytes.first().ok_or(Graph6Error::Empty)?;
    // 126 introduces the long form for n > 62; anything outside 63..=125
    // cannot be a short-form size byte.
    if !(63..=125).contains(&size) {
        return Err(Graph6Error::BadSizeByte { byte: size });
    }
    let n = (size - 63) as usize;
    if n == 0 {
        // Order-0 graphs are not representable in this crate.
        return Err(Graph6Error::BadSizeByte { byte: size });
    }
    let expected = (n * (n - 1) / 2).div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    let mut g = Graph::empty(n).expect("1 <= n <= 62");
    let mut b = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[b / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::BadCharacter { index: 1 + b / 6, byte });
            }
            if (byte - 63) >> (5 - b % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            b += 1;
        }
    }
    // A lone size byte (n == 1) never enters the loop; still reject any
    // stray bytes with bad content in the padded tail.
    if let Some((idx, &byte)) = data.iter().enumerate().find(|(_, &c)| !(63..=126).contains(&c)) {
        return Err(Graph6Error::BadCharacter { index: 1 + idx, byte });
    }
    Ok(g)
}
