//! graph6 text encoding of simple undirected graphs (McKay's format).
//!
//! One graph per line: an order field `N(n)` followed by the upper triangle
//! of the adjacency matrix, column by column, packed into 6-bit groups with
//! each byte offset by 63. Orders up to 62 use a single byte; larger orders
//! (up to this crate's vertex cap) use the `~`-prefixed 18-bit form.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

const OFFSET: u8 = 63;
const LONG_FORM: u8 = 126; // '~'
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("graph on {n} vertices exceeds the supported cap of {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("truncated graph6 string: expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after a complete graph6 encoding")]
    TrailingData { extra: usize },
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // 18-bit order field, most significant group first
        out.push(LONG_FORM);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string, accepting an optional `>>graph6<<` header.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = strip_header(text)?;
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_FORM).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, body) = if bytes[0] == LONG_FORM {
        if bytes.len() >= 2 && bytes[1] == LONG_FORM {
            // the 36-bit form always exceeds our cap
            return Err(Graph6Error::TooLarge { n: 258_048 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 3, found: bytes.len() - 1 });
        }
        let n = (usize::from(bytes[1] - OFFSET) << 12)
            | (usize::from(bytes[2] - OFFSET) << 6)
            | usize::from(bytes[3] - OFFSET);
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - OFFSET), &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }
    let pair_count = n.saturating_sub(1) * n / 2;
    let expected = pair_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { extra: body.len() - expected });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - OFFSET;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

fn strip_header(text: &str) -> Result<&str, Graph6Error> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = trimmed.strip_prefix(HEADER) {
        return Ok(rest);
    }
    // a partial header prefix is a malformed header, not adjacency data
    if trimmed.starts_with(">>") {
        return Err(Graph6Error::MalformedHeader);
    }
    Ok(trimmed)
}
