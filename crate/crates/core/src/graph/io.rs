//! graph6 and edge-list text formats.

use super::{pair_index, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encode as graph6: size prefix, then the upper triangle read column by
/// column, six bits per byte, each byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
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
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "graph6 byte {:#04x} at offset {pos} outside [63,126]",
            bytes[pos]
        )));
    }
    let (&first, rest) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    let (n, body) = if first < 126 {
        ((first - 63) as usize, rest)
    } else {
        if rest.len() < 3 || rest[0] == 126 {
            return Err(Error::Parse("unsupported graph6 size prefix".into()));
        }
        let n = rest[..3]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &rest[3..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Parse(format!(
            "graph6 vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(Error::Parse("graph6 padding bits are not zero".into()));
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bit(pair_index(i, j)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parse the edge-list format: a header line `<n> <edge count>` followed by
/// one 1-based `i j` pair per line. Blank lines and `#` comments are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing edge-list header".into()))?;
    let nums = parse_ints(header)?;
    let [n, count] = nums[..] else {
        return Err(Error::Parse(format!("bad header `{header}`, expected `<n> <count>`")));
    };
    let mut edges = Vec::with_capacity(count);
    for line in lines {
        let nums = parse_ints(line)?;
        let [i, j] = nums[..] else {
            return Err(Error::Parse(format!("bad edge line `{line}`")));
        };
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        edges.push((i - 1, j - 1));
    }
    if edges.len() != count {
        return Err(Error::Parse(format!(
            "header announces {count} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (i, j) in edges {
        out.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    out
}

fn parse_ints(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("`{t}` is not a nonnegative integer")))
        })
        .collect()
}
