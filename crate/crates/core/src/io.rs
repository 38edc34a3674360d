//! Graph text formats: graph6 and sparse6 per the nauty format
//! specification, plus a human-readable edge list (`n m` header followed by
//! `u v` lines). Format detection looks at the first byte: `:` means
//! sparse6, a digit means edge list, anything else graph6; the optional
//! `>>graph6<<` / `>>sparse6<<` headers are also recognized.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses a graph in any supported format, auto-detected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    let offset = text.len() - trimmed.len();
    if let Some(rest) = trimmed.strip_prefix(">>graph6<<") {
        return parse_graph6_at(rest.trim(), offset + 10);
    }
    if let Some(rest) = trimmed.strip_prefix(">>sparse6<<") {
        return parse_sparse6_at(rest.trim(), offset + 11);
    }
    match trimmed.bytes().next() {
        None => Err(parse_err(offset, "empty input")),
        Some(b':') => parse_sparse6_at(trimmed.lines().next().unwrap(), offset),
        Some(b'0'..=b'9') => parse_edge_list(text),
        Some(_) => parse_graph6_at(trimmed.lines().next().unwrap(), offset),
    }
}

// ---------------------------------------------------------------------------
// graph6

/// Encodes `N(n)`: one byte up to 62 vertices, four bytes up to 258047.
fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

fn decode_n(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let b0 = *bytes.first().ok_or_else(|| parse_err(base, "missing size"))?;
    if b0 != 126 {
        if !(BIAS..=125).contains(&b0) {
            return Err(parse_err(base, format!("invalid size byte {b0}")));
        }
        return Ok(((b0 - BIAS) as usize, 1));
    }
    let (count, skip) = if bytes.get(1) == Some(&126) { (6, 2) } else { (3, 1) };
    let mut n = 0usize;
    for i in 0..count {
        let b = *bytes
            .get(skip + i)
            .ok_or_else(|| parse_err(base + skip + i, "truncated size"))?;
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(base + skip + i, format!("invalid size byte {b}")));
        }
        n = n << 6 | (b - BIAS) as usize;
    }
    Ok((n, skip + count))
}

/// graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
/// matrix in column order, six bits per byte, biased by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push(value + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    parse_graph6_at(s.trim(), 0)
}

fn parse_graph6_at(s: &str, base: usize) -> Result<Graph> {
    let bytes = s.as_bytes();
    let (n, header) = decode_n(bytes, base)?;
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed_bytes = needed_bits.div_ceil(6);
    if bytes.len() < header + needed_bytes {
        return Err(parse_err(
            base + bytes.len(),
            format!(
                "truncated graph6: need {} data bytes, found {}",
                needed_bytes,
                bytes.len() - header
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    let mut column_iter = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for k in 0..needed_bytes {
        let b = bytes[header + k];
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(base + header + k, format!("invalid graph6 byte {b}")));
        }
        let value = b - BIAS;
        for shift in (0..6).rev() {
            if bit_index == needed_bits {
                break;
            }
            let (i, j) = column_iter.next().unwrap();
            if value >> shift & 1 == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// sparse6

struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn push(&mut self, b: bool) {
        self.bits.push(b);
    }
    fn push_value(&mut self, x: usize, width: usize) {
        for shift in (0..width).rev() {
            self.bits.push(x >> shift & 1 == 1);
        }
    }
}

/// sparse6 encoding: `:` then `N(n)` then (b, x) pairs over k-bit vertex
/// numbers, following the reference encoder, including its power-of-two
/// padding rule.
pub fn to_sparse6(g: &Graph) -> String {
    let n = g.vertex_count();
    let k = if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    let mut out = vec![b':'];
    encode_n(n, &mut out);

    let mut edges = g.edges();
    // sorted by larger endpoint, then smaller
    edges.sort_by_key(|&(u, v)| (v.max(u), v.min(u)));
    let mut w = BitWriter { bits: Vec::new() };
    let mut curv = 0usize;
    for (u, v) in edges {
        let (small, big) = (u.min(v), u.max(v));
        if big == curv {
            w.push(false);
            w.push_value(small, k);
        } else if big == curv + 1 {
            curv += 1;
            w.push(true);
            w.push_value(small, k);
        } else {
            curv = big;
            w.push(true);
            w.push_value(big, k);
            w.push(false);
            w.push_value(small, k);
        }
    }
    // padding: all ones, except that when n is a power of two and enough
    // padding follows with the current vertex below n-1, a lone 1-run could
    // decode as an extra edge, so a zero bit goes first
    let pad = (6 - w.bits.len() % 6) % 6;
    if k < 6 && n == 1 << k && pad >= k && curv < n.saturating_sub(1) {
        w.push(false);
    }
    while w.bits.len() % 6 != 0 {
        w.push(true);
    }
    for chunk in w.bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push(value + BIAS);
    }
    String::from_utf8(out).expect("sparse6 bytes are printable ASCII")
}

pub fn parse_sparse6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>sparse6<<").unwrap_or(s);
    parse_sparse6_at(s.trim(), 0)
}

fn parse_sparse6_at(s: &str, base: usize) -> Result<Graph> {
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(parse_err(base, "sparse6 must start with ':'"));
    }
    let (n, header) = decode_n(&bytes[1..], base + 1)?;
    let data = &bytes[1 + header..];
    let mut bits: Vec<bool> = Vec::with_capacity(data.len() * 6);
    for (i, &b) in data.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(base + 1 + header + i, format!("invalid sparse6 byte {b}")));
        }
        let value = b - BIAS;
        for shift in (0..6).rev() {
            bits.push(value >> shift & 1 == 1);
        }
    }
    let k = if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    };
    let mut g = Graph::new(n);
    let mut pos = 0usize;
    let mut v = 0usize;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for i in 0..k {
            x = x << 1 | bits[pos + 1 + i] as usize;
        }
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x != v {
            g.add_edge(x, v);
        } else {
            // loops are not representable in a simple graph
            return Err(parse_err(base, format!("sparse6 encodes a loop at vertex {v}")));
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// edge list

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut offset = 0usize;
    let mut lines = Vec::new();
    for line in text.lines() {
        lines.push((offset, line));
        offset += line.len() + 1;
    }
    let mut nonempty = lines
        .into_iter()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (off, header) = nonempty
        .next()
        .ok_or_else(|| parse_err(0, "empty edge list"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(off, "expected vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(off, "expected edge count"))?;
    if it.next().is_some() {
        return Err(parse_err(off, "trailing tokens after header"));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (off, line) = nonempty
            .next()
            .ok_or_else(|| parse_err(text.len(), format!("expected {m} edges")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(off, "expected edge endpoint"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(off, "expected edge endpoint"))?;
        if u >= n || v >= n {
            return Err(parse_err(off, format!("endpoint out of range in edge ({u},{v})")));
        }
        if u == v {
            return Err(parse_err(off, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
