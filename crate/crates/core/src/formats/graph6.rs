//! graph6 codec.
//!
//! The header encodes `n` in one byte (`n <= 62`), four bytes (`126` then 18
//! bits, `n <= 258047`) or eight bytes (`126 126` then 36 bits). The body is
//! the upper triangle of the adjacency matrix in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, big-endian,
//! zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_BYTE: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        push_bits(&mut out, n as u64, 18);
    } else {
        out.extend([MAX_BYTE, MAX_BYTE]);
        push_bits(&mut out, n as u64, 36);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn push_bits(out: &mut Vec<u8>, value: u64, width: u32) {
    for shift in (0..width / 6).rev() {
        out.push(((value >> (6 * shift)) & 0x3f) as u8 + OFFSET);
    }
}

/// Parses one graph6 line. A single trailing newline is tolerated, as is the
/// optional `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (bytes, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
        None => (line.as_bytes(), 0),
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=MAX_BYTE).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
    }

    let (n, header_len) = read_order(bytes).map_err(|(off, why)| err(base + off, why))?;
    let pairs = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| err(base, "vertex count overflows"))?;
    let body_len = pairs.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(
            base + bytes.len(),
            format!("truncated: expected {body_len} body bytes for n = {n}, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(err(base + header_len + body_len, "trailing bytes after graph"));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body_len - 1] - OFFSET;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + header_len + body_len - 1, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn read_order(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let value = |range: std::ops::Range<usize>| -> std::result::Result<usize, (usize, String)> {
        let chunk = bytes
            .get(range.clone())
            .ok_or((bytes.len(), "truncated header".to_string()))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize))
    };
    match bytes {
        [] => Err((0, "empty input".into())),
        [MAX_BYTE, MAX_BYTE, ..] => {
            let n = value(2..8)?;
            if n <= 258_047 {
                return Err((2, format!("non-canonical 8-byte header for n = {n}")));
            }
            Ok((n, 8))
        }
        [MAX_BYTE, ..] => {
            let n = value(1..4)?;
            if n <= 62 {
                return Err((1, format!("non-canonical 4-byte header for n = {n}")));
            }
            Ok((n, 4))
        }
        [first, ..] => Ok(((first - OFFSET) as usize, 1)),
    }
}

/// Parses a multi-line graph6 stream. Blank lines are skipped; each entry
/// carries its 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim_end())))
        .collect()
}
