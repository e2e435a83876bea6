//! Bit-exact text formats.
//!
//! Hypergraphs (`hgt 1`):
//!
//! ```text
//! hgt 1
//! vertices <N>
//! edges <M>
//! e <v1> <v2> ... <vk>      (M lines, canonical order)
//! ```
//!
//! Bipartite graphs (`bgt 1`):
//!
//! ```text
//! bgt 1
//! left <n1>
//! right <n2>
//! a <u> <v>                 (one line per incidence, sorted)
//! ```
//!
//! Every line ends in a single LF and fields are separated by single spaces.
//! The parsers accept exactly what the writers produce: any other spelling of
//! the same structure (reordered edges, leading zeros, trailing blanks,
//! missing final newline) is rejected with the 1-based offending line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::{Classify, ErrorKind};
use crate::hypergraph::{BipartiteGraph, Hypergraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl Classify for ParseError {
    fn kind(&self) -> ErrorKind {
        ErrorKind::Parse
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Which format a text starts with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Hypergraph,
    Bipartite,
}

pub fn sniff(text: &str) -> Option<FileKind> {
    if text.starts_with("hgt 1\n") {
        Some(FileKind::Hypergraph)
    } else if text.starts_with("bgt 1\n") {
        Some(FileKind::Bipartite)
    } else {
        None
    }
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::with_capacity(16 + h.num_incidences() * 6);
    let _ = write!(out, "hgt 1\nvertices {}\nedges {}\n", h.num_vertices(), h.num_edges());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut out = String::with_capacity(16 + g.num_incidences() * 10);
    let _ = write!(out, "bgt 1\nleft {}\nright {}\n", g.n_left(), g.n_right());
    for (u, v) in g.incidences() {
        let _ = writeln!(out, "a {u} {v}");
    }
    out
}

/// Splits into LF-terminated lines, rejecting CR and a missing final LF.
fn lines(text: &str) -> Result<Vec<&str>, ParseError> {
    if text.is_empty() {
        return Err(err(1, "empty input"));
    }
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| err(text.matches('\n').count() + 1, "missing final newline"))?;
    let lines: Vec<&str> = body.split('\n').collect();
    if let Some(i) = lines.iter().position(|l| l.contains('\r')) {
        return Err(err(i + 1, "carriage return not allowed"));
    }
    Ok(lines)
}

/// Canonical decimal: digits only, no leading zero unless the number is 0.
fn number(tok: &str, line: usize) -> Result<u64, ParseError> {
    let canonical = !tok.is_empty()
        && tok.bytes().all(|b| b.is_ascii_digit())
        && (tok == "0" || !tok.starts_with('0'));
    if !canonical {
        return Err(err(line, format!("expected a canonical decimal, found {tok:?}")));
    }
    tok.parse().map_err(|_| err(line, format!("number {tok} out of range")))
}

fn vertex_id(tok: &str, line: usize) -> Result<VertexId, ParseError> {
    let n = number(tok, line)?;
    VertexId::try_from(n).map_err(|_| err(line, format!("id {n} out of range")))
}

fn header_value(lines: &[&str], idx: usize, key: &str) -> Result<usize, ParseError> {
    let line = lines
        .get(idx)
        .ok_or_else(|| err(idx + 1, format!("missing `{key}` line")))?;
    let rest = line
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| err(idx + 1, format!("expected `{key} <n>`")))?;
    let n = number(rest, idx + 1)?;
    usize::try_from(n).map_err(|_| err(idx + 1, "count out of range"))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let lines = lines(text)?;
    if lines[0] != "hgt 1" {
        return Err(err(1, "expected `hgt 1`"));
    }
    let n = header_value(&lines, 1, "vertices")?;
    let m = header_value(&lines, 2, "edges")?;
    if lines.len() != 3 + m {
        return Err(err(
            lines.len().min(3 + m) + 1,
            format!("expected {m} edge lines, found {}", lines.len().saturating_sub(3)),
        ));
    }
    let mut edges: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for (i, line) in lines[3..].iter().enumerate() {
        let lineno = i + 4;
        let mut toks = line.split(' ');
        if toks.next() != Some("e") {
            return Err(err(lineno, "expected `e <v1> ... <vk>`"));
        }
        let edge = toks
            .map(|t| vertex_id(t, lineno))
            .collect::<Result<Vec<_>, _>>()?;
        if edge.is_empty() {
            return Err(err(lineno, "empty edge"));
        }
        if !edge.windows(2).all(|w| w[0] < w[1]) {
            return Err(err(lineno, "edge vertices not strictly increasing"));
        }
        if let Some(v) = edge.iter().find(|&&v| v as usize >= n) {
            return Err(err(lineno, format!("vertex {v} >= {n}")));
        }
        if let Some(prev) = edges.last() {
            if prev >= &edge {
                return Err(err(lineno, "edges not in strictly increasing lexicographic order"));
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(n, edges).map_err(|e| err(0, e.to_string()))
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph, ParseError> {
    let lines = lines(text)?;
    if lines[0] != "bgt 1" {
        return Err(err(1, "expected `bgt 1`"));
    }
    let n_left = header_value(&lines, 1, "left")?;
    let n_right = header_value(&lines, 2, "right")?;
    let mut incidences: Vec<(VertexId, VertexId)> = Vec::with_capacity(lines.len().saturating_sub(3));
    for (i, line) in lines.iter().enumerate().skip(3) {
        let lineno = i + 1;
        let toks: Vec<&str> = line.split(' ').collect();
        if toks.len() != 3 || toks[0] != "a" {
            return Err(err(lineno, "expected `a <u> <v>`"));
        }
        let pair = (vertex_id(toks[1], lineno)?, vertex_id(toks[2], lineno)?);
        if pair.0 as usize >= n_left || pair.1 as usize >= n_right {
            return Err(err(lineno, "incidence out of range"));
        }
        if let Some(prev) = incidences.last() {
            if *prev >= pair {
                return Err(err(lineno, "incidences not in strictly increasing order"));
            }
        }
        incidences.push(pair);
    }
    BipartiteGraph::new(n_left, n_right, incidences).map_err(|e| err(0, e.to_string()))
}
