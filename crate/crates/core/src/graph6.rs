//! graph6 encoding: 6-bit groups offset by 63, upper triangle in column-major
//! order. Only the single-byte size form (order <= 62) is supported; parse
//! errors carry the byte offset of the offending character.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Encode an unweighted graph of order <= 62 (no header).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    if g.is_weighted() {
        return Err(Error::invalid("graph6 cannot encode weighted graphs"));
    }
    let n = g.order();
    if n > 62 {
        return Err(Error::invalid(format!(
            "graph6 single-byte size supports order <= 62, got {n}"
        )));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let nbits = n * (n.saturating_sub(1)) / 2;
    let mut bits = Vec::with_capacity(nbits);
    for j in 2..=n {
        for i in 1..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v: u8 = 0;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// Parse a graph6 string (optional `>>graph6<<` header allowed).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 input"));
    }
    if bytes[0] == b'~' {
        return Err(Error::parse(
            base,
            "multi-byte graph6 size (order > 62) not supported",
        ));
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::parse(
            base,
            format!("size byte {} out of range 63..=126", bytes[0]),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect_chars = nbits.div_ceil(6);
    if bytes.len() - 1 < expect_chars {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated: need {expect_chars} data chars for order {n}, got {}",
                bytes.len() - 1
            ),
        ));
    }
    if bytes.len() - 1 > expect_chars {
        return Err(Error::parse(
            base + 1 + expect_chars,
            "trailing garbage after graph6 data",
        ));
    }
    let mut bits = Vec::with_capacity(expect_chars * 6);
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + k,
                format!("data byte {b} out of range 63..=126"),
            ));
        }
        let v = b - 63;
        for s in (0..6).rev() {
            bits.push((v >> s) & 1 == 1);
        }
    }
    for (k, &bit) in bits.iter().enumerate().skip(nbits) {
        if bit {
            return Err(Error::parse(
                base + 1 + k / 6,
                "nonzero padding bits in final graph6 character",
            ));
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 2..=n {
        for i in 1..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Parse one graph per nonempty line; line numbers are 1-based in errors.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Parse { offset, msg } => Error::Parse {
                offset,
                msg: format!("line {}: {msg}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
