//! Edge-list files (read/write) and graph6 (read-only).
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v` with
//! `0 <= u < v < n`, ASCII, newline-terminated.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_DENSE_VERTICES};

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    parse_edge_list(&read_to_string(path)?, path)
}

/// Parses edge-list text; `origin` is only used in error messages.
pub fn parse_edge_list(text: &str, origin: &Path) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(origin, 1, "missing header line `n m`"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| parse_err(origin, hline, "malformed header, expected `n m`"))?;
    if n > MAX_DENSE_VERTICES {
        return Err(parse_err(origin, hline, format!("n = {n} exceeds limit {MAX_DENSE_VERTICES}")));
    }

    let mut rows = vec![Bitset::new(n); n];
    let mut seen = 0usize;
    for (ln, line) in lines {
        if line.is_empty() {
            continue;
        }
        let (u, v) = parse_pair(line).ok_or_else(|| parse_err(origin, ln, "malformed edge line, expected `u v`"))?;
        if u >= n || v >= n {
            return Err(parse_err(origin, ln, format!("vertex index {} >= n = {n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(origin, ln, format!("loop at vertex {u}")));
        }
        if rows[u].contains(v) {
            return Err(parse_err(origin, ln, format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
        rows[u].insert(v);
        rows[v].insert(u);
        seen += 1;
        if seen > m {
            return Err(parse_err(origin, ln, format!("more edge lines than the declared {m}")));
        }
    }
    if seen != m {
        return Err(parse_err(
            origin,
            text.lines().count().max(1),
            format!("header declares {m} edges but {seen} were given"),
        ));
    }
    Ok(Graph::from_rows(rows))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(12 * (edges.len() + 1));
    let _ = writeln!(out, "{} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, format_edge_list(g)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads the first graph of a graph6 file. An optional `>>graph6<<` header
/// is accepted.
pub fn read_graph6(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = read_to_string(path)?;
    let (ln, line) = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(path, 1, "no graph6 record"))?;
    parse_graph6(line).map_err(|message| parse_err(path, ln, message))
}

/// Decodes one graph6 record.
pub fn parse_graph6(record: &str) -> std::result::Result<Graph, String> {
    let record = record.strip_prefix(">>graph6<<").unwrap_or(record);
    let bytes = record.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(format!("byte {} at offset {pos} outside the graph6 range 63..=126", bytes[pos]));
    }
    let (n, body) = decode_order(bytes)?;
    if n > MAX_DENSE_VERTICES as u64 {
        return Err(format!("n = {n} exceeds limit {MAX_DENSE_VERTICES}"));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(format!("expected {expected} edge bytes for n = {n}, found {}", body.len()));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![Bitset::new(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if (nbits..expected * 6).any(bit) {
        return Err("nonzero padding bits".into());
    }
    Ok(Graph::from_rows(rows))
}

fn decode_order(bytes: &[u8]) -> std::result::Result<(u64, &[u8]), String> {
    let fold = |bs: &[u8]| bs.iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
    match bytes {
        [] => Err("empty graph6 record".into()),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((fold(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err("truncated 8-byte vertex count".into()),
        [126, rest @ ..] if rest.len() >= 3 => Ok((fold(&rest[..3]), &rest[3..])),
        [126, ..] => Err("truncated 4-byte vertex count".into()),
        [b, rest @ ..] => Ok(((b - 63) as u64, rest)),
    }
}

/// Convenience for callers that accept either format: `.g6`/`.graph6`
/// extensions select graph6, everything else is an edge list.
pub fn read_any(path: impl AsRef<Path>) -> Result<Graph> {
    let path: PathBuf = path.as_ref().to_path_buf();
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => read_graph6(&path),
        _ => read_graph(&path),
    }
}
