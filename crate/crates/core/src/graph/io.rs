//! graph6 and plain adjacency-list text formats.
//!
//! graph6 follows the nauty definition: `N(n)` followed by the upper triangle
//! of the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, each byte offset by 63, zero-padded.

use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Graph6,
    Adjacency,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "adj" | "adjacency" => Ok(Format::Adjacency),
            other => Err(Error::invalid(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::parse(0, "no graph6 line"))?;
            from_graph6(line)
        }
        Format::Adjacency => from_adjacency_list(text),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::parse(base + pos, format!("byte {:#04x} outside graph6 range", body[pos])));
    }
    let sixbits = |range: std::ops::Range<usize>| -> Result<usize> {
        if body.len() < range.end {
            return Err(Error::parse(base + body.len(), "truncated vertex count"));
        }
        Ok(body[range].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, start) = match body.first() {
        None => return Err(Error::parse(base, "empty graph6 string")),
        Some(&b) if b < 126 => ((b - 63) as usize, 1),
        Some(_) if body.get(1) == Some(&126) => (sixbits(2..8)?, 8),
        Some(_) => (sixbits(1..4)?, 4),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != want {
        let offset = base + start + data.len().min(want);
        return Err(Error::parse(
            offset,
            format!("expected {want} data bytes for {n} vertices, found {}", data.len()),
        ));
    }
    let pad = want * 6 - bits;
    if pad > 0 {
        let last = data[want - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Error::parse(base + start + want - 1, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// First non-blank line `n`, then one `u v` pair per line. `#` starts a comment.
pub fn from_adjacency_list(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for raw in text.split_inclusive('\n') {
        let line = raw.split('#').next().unwrap_or("").trim();
        let here = offset;
        offset += raw.len();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(here, format!("not a vertex id: {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => return Err(Error::parse(here, "first line must hold the vertex count")),
            (Some(_), [u, v]) => edges.push((num(u)?, num(v)?)),
            (Some(_), _) => return Err(Error::parse(here, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    Graph::new(n, edges)
}

pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
