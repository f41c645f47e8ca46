//! Text formats: graph6, DIMACS `edge`, and plain edge lists.
//!
//! graph6 follows the usual printable encoding: an order prefix (one byte
//! `n + 63` for `n <= 62`, otherwise `~` plus three bytes) followed by the
//! upper triangle of the adjacency matrix, column by column, packed six bits
//! per byte with 63 added to each byte. Padding bits must be zero, so every
//! accepted string re-encodes to itself.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the short (one byte) or medium (four byte) prefix.
pub const GRAPH6_MAX_ORDER: usize = 258_047;

/// Largest order accepted from DIMACS and edge lists, where the order is
/// declared rather than implied by the data length. The adjacency matrix of a
/// graph this size takes 128 MiB.
pub const TEXT_MAX_ORDER: usize = 1 << 15;

fn check_declared(n: usize) -> Result<usize> {
    if n > TEXT_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: TEXT_MAX_ORDER,
        });
    }
    Ok(n)
}

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Graph6,
    Dimacs,
    EdgeList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Dimacs => "dimacs",
            Format::EdgeList => "edgelist",
        })
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => decode_graph6(text),
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

fn malformed(position: usize, reason: impl Into<String>) -> Error {
    Error::MalformedInput {
        position,
        reason: reason.into(),
    }
}

/// Decodes one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut offset = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        offset += HEADER.len();
    }
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(
                offset + i,
                format!("byte 0x{b:02x} outside the graph6 range"),
            ));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(malformed(offset, "empty graph6 string")),
        [126, 126, ..] => return Err(Error::Unsupported(GRAPH6_MAX_ORDER + 1)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed(offset + bytes.len(), "truncated order prefix"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(malformed(offset, "order below 63 must use the one-byte prefix"));
            }
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(malformed(
            offset + header_len,
            format!("order {n} needs {expected} data bytes, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(u, v);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed(offset + header_len + expected - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` as graph6 (no header, no trailing newline). The encoding
/// depends on the labelling; it is not a canonical form.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= GRAPH6_MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::Unsupported(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn parse_usize(tok: &str, position: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| malformed(position, format!("expected a non-negative integer, found `{tok}`")))
}

/// Lines with their byte offsets, comments and blanks removed.
fn content_lines<'a>(text: &'a str, comment: &'a [&'a str]) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    let mut offset = 0;
    text.split_inclusive('\n').filter_map(move |raw| {
        let start = offset;
        offset += raw.len();
        let line = raw.trim();
        if line.is_empty() || comment.iter().any(|c| line.starts_with(c)) {
            None
        } else {
            Some((start, line))
        }
    })
}

/// DIMACS `edge` format: `c` comments, one `p edge n m` header, `e u v` lines
/// with 1-based endpoints. Repeated edges, in either orientation, are merged.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (pos, line) in content_lines(text, &["c"]) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["p", kind, nv, ne] => {
                if n.is_some() {
                    return Err(malformed(pos, "duplicate problem line"));
                }
                if !matches!(*kind, "edge" | "col" | "edges") {
                    return Err(malformed(pos, format!("unsupported problem kind `{kind}`")));
                }
                n = Some(check_declared(parse_usize(nv, pos)?)?);
                parse_usize(ne, pos)?;
            }
            ["e", a, b] => {
                let Some(order) = n else {
                    return Err(malformed(pos, "edge line before the problem line"));
                };
                let (u, v) = (parse_usize(a, pos)?, parse_usize(b, pos)?);
                if u == 0 || v == 0 || u > order || v > order {
                    return Err(malformed(pos, format!("endpoint out of range 1..={order}")));
                }
                if u == v {
                    return Err(malformed(pos, "self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(malformed(pos, format!("unrecognised line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| malformed(text.len(), "missing `p edge` line"))?;
    Graph::from_edges(n, &edges)
}

/// Whitespace edge list, 0-based, one `u v` pair per line, `#` comments.
/// An optional first line `n <count>` fixes the order; otherwise the order is
/// one more than the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, (pos, line)) in content_lines(text, &["#"]).enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] if i == 0 => declared = Some(check_declared(parse_usize(count, pos)?)?),
            [a, b] => {
                let (u, v) = (parse_usize(a, pos)?, parse_usize(b, pos)?);
                if u == v {
                    return Err(malformed(pos, "self-loop"));
                }
                if declared.is_some_and(|n| u >= n || v >= n) {
                    return Err(malformed(pos, "endpoint out of range"));
                }
                edges.push((u, v));
            }
            _ => return Err(malformed(pos, format!("expected `u v`, found `{line}`"))),
        }
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v)| u.max(v).saturating_add(1))
            .max()
            .unwrap_or(0)
    });
    Graph::from_edges(check_declared(n)?, &edges)
}

/// Writes `g` as a 1-based DIMACS edge file.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Writes `g` as a 0-based edge list with an `n` header.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
