//! graph6 encoding (one graph per line, upper triangle packed column-wise).

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

/// Largest order representable with the 4-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 payload truncated: expected {expected} bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("graph6 payload has {0} trailing bytes")]
    TrailingData(usize),
    #[error("graph6 byte {0:#04x} outside the printable range 63..=126")]
    InvalidByte(u8),
    #[error("graph6 padding bits are not zero")]
    NonCanonicalPadding,
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
}

/// Encodes `g` as a graph6 line without the trailing newline.
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Same as [`encode`] but as a `String`.
pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 is ASCII")
}

/// Decodes a single graph6 line. A trailing `\n` (or `\r\n`) is accepted.
pub fn decode(line: &[u8]) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    if let Some(&b) = line.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte(b));
    }
    let (n, body) = match line {
        [] => return Err(Graph6Error::MalformedHeader),
        [126, 126, ..] => return Err(Graph6Error::TooLarge(GRAPH6_MAX_ORDER + 1)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader);
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader);
            }
            (n, &rest[3..])
        }
        [h, rest @ ..] => ((h - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedPayload {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData(body.len() - expected));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonCanonicalPadding);
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are distinct and in range"))
}
