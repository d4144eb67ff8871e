//! Text encodings: graph6 and a plain edge list.
//!
//! graph6 follows the format shipped with nauty: a size prefix (one byte for
//! `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes beyond),
//! then the upper triangle of the adjacency matrix in column-major order,
//! six bits per byte, each byte offset by 63.
//!
//! The edge list format is a first line holding `n` followed by one `u v`
//! pair per non-empty line.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::ParseError;
use crate::graph::Graph;

const OFFSET: u8 = 63;
const SHORT_MAX: u64 = 62;
const MEDIUM_MAX: u64 = 258_047;
const LONG_MAX: u64 = (1 << 36) - 1;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
        Some(&byte) => Err(ParseError::InvalidChar { offset, byte }),
        None => Err(ParseError::Truncated { expected: offset + 1, found: bytes.len() }),
    }
}

fn read_size(bytes: &[u8], start: usize) -> Result<(u64, usize), ParseError> {
    let first = sixbits(bytes, start)?;
    if first != 63 {
        return Ok((first as u64, start + 1));
    }
    let (len, body) = if bytes.get(start + 1) == Some(&b'~') { (6, start + 2) } else { (3, start + 1) };
    let mut n = 0u64;
    for i in 0..len {
        n = (n << 6) | sixbits(bytes, body + i)? as u64;
    }
    let (lo, hi) = if len == 3 { (SHORT_MAX + 1, MEDIUM_MAX) } else { (MEDIUM_MAX + 1, LONG_MAX) };
    if !(lo..=hi).contains(&n) {
        return Err(ParseError::SizeOutOfRange { offset: start, n });
    }
    Ok((n, body + len))
}

/// Decodes a single graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(s: &str) -> Result<Graph, ParseError> {
    let bytes = s.as_bytes();
    let mut start = bytes.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(bytes.len());
    let end = bytes.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |p| p + 1);
    let bytes = &bytes[..end];
    if bytes[start..].starts_with(HEADER.as_bytes()) {
        start += HEADER.len();
    }
    let (n, body) = read_size(bytes, start)?;
    // Sizes beyond this could not be materialized as adjacency sets anyway.
    if n > u32::MAX as u64 {
        return Err(ParseError::SizeOutOfRange { offset: start, n });
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < body + needed {
        return Err(ParseError::Truncated { expected: body + needed, found: bytes.len() });
    }
    if bytes.len() > body + needed {
        return Err(ParseError::Trailing { offset: body + needed });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = sixbits(bytes, body + bit / 6)?;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            bit += 1;
        }
    }
    // Padding bits are ignored, as nauty's own readers do.
    if !bits.is_multiple_of(6) {
        sixbits(bytes, body + needed - 1)?;
    }
    Ok(g)
}

fn edge_list_error(line: usize, message: String) -> ParseError {
    ParseError::EdgeList { line, message }
}

/// Parses the edge list format. Line numbers in errors are 1-based.
pub fn parse_edge_list(s: &str) -> Result<Graph, ParseError> {
    let mut lines = s.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| edge_list_error(1, "missing vertex count".into()))?;
    let n: usize =
        header.parse().map_err(|_| edge_list_error(first, format!("invalid vertex count {header:?}")))?;
    let mut g = Graph::empty(n);
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let mut endpoint = || -> Result<usize, ParseError> {
            let tok = parts.next().ok_or_else(|| edge_list_error(line, format!("expected \"u v\", got {text:?}")))?;
            let v: usize = tok.parse().map_err(|_| edge_list_error(line, format!("invalid vertex id {tok:?}")))?;
            if v >= n {
                return Err(edge_list_error(line, format!("vertex id {v} out of range for {n} vertices")));
            }
            Ok(v)
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if parts.next().is_some() {
            return Err(edge_list_error(line, format!("expected \"u v\", got {text:?}")));
        }
        if u == v {
            return Err(edge_list_error(line, format!("self-loop at vertex {u}")));
        }
        g.insert_edge(u, v);
    }
    Ok(g)
}

/// Writes the edge list format, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        // "B@" carries a set padding bit; it decodes to the empty graph, whose
        // canonical encoding is a fixed point.
        let g = parse_graph6("B@").unwrap();
        assert_eq!(g, Graph::empty(3));
        let canonical = to_graph6(&g);
        assert_eq!(canonical, "B?");
        assert_eq!(to_graph6(&parse_graph6(&canonical).unwrap()), canonical);
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn graph6_matches_reference_encoder() {
        // Petersen graph as written by networkx.
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(to_graph6(&g), "IheA@GUAo");
    }

    #[test]
    fn graph6_medium_size() {
        let g = Graph::path(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        // 100 = 0b000000_000001_100100; body prefix as written by networkx.
        assert!(s.starts_with("~?@chCGGC@"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6("B"), Err(ParseError::Truncated { expected: 2, found: 1 }));
        assert_eq!(parse_graph6("B w"), Err(ParseError::Trailing { offset: 2 }));
        assert!(matches!(parse_graph6("B\x01"), Err(ParseError::InvalidChar { offset: 1, .. })));
        assert!(matches!(parse_graph6("\x7fw"), Err(ParseError::InvalidChar { offset: 0, .. })));
        assert!(matches!(parse_graph6("B!"), Err(ParseError::InvalidChar { offset: 1, .. })));
        // "~??~" encodes 62 in long form, which must use the short form.
        assert!(matches!(parse_graph6("~??}"), Err(ParseError::SizeOutOfRange { .. })));
        assert!(matches!(parse_graph6(""), Err(ParseError::Truncated { .. })));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), Graph::path(3));
        let two = parse_edge_list("4\n0 1\n0 1\n2 3").unwrap();
        assert_eq!(two, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert!(matches!(parse_edge_list("2\n0 0"), Err(ParseError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("2\n0 2"), Err(ParseError::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n\n0 1 2"), Err(ParseError::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("x"), Err(ParseError::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("3\n0 a"), Err(ParseError::EdgeList { line: 2, .. })));
        let g = Graph::star(4);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
