//! The edge-list text format and matrix rendering.
//!
//! A document is UTF-8 text: a header line `n m`, then `m` lines
//! `tail head weight`. Lines starting with `#` and blank lines are ignored.
//! Infinity never appears in a file; an absent pair means an infinite edge
//! and an absent self-loop means 0.

use std::fmt::Write as _;

use fw_core::{DistMatrix, GraphInstance, Vertex, Weight};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Error, Debug)]
pub enum ParseError {
    #[error("missing \"n m\" header line")]
    MissingHeader,
    #[error("line {line}: expected \"n m\" header, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: vertex count must be at least 1")]
    NoVertices { line: usize },
    #[error("line {line}: expected \"tail head weight\", found {found:?}")]
    MalformedEdge { line: usize, found: String },
    #[error("line {line}: weight {token:?} is not a finite integer")]
    BadWeight { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("header promised {expected} edges but the document has {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
}

/// Parses an edge-list document. Duplicate ordered pairs keep the minimum
/// weight; absent pairs become infinity and absent self-loops 0.
pub fn parse_edge_list(text: &str) -> Result<GraphInstance, ParseError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = content.next().ok_or(ParseError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let (n_tok, m_tok) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(ParseError::BadHeader { line: header_line, found: header.into() }),
    };
    let n: usize = n_tok
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line, found: header.into() })?;
    let m: usize = m_tok
        .parse()
        .map_err(|_| ParseError::BadHeader { line: header_line, found: header.into() })?;
    if n == 0 {
        return Err(ParseError::NoVertices { line: header_line });
    }

    let mut edges: Vec<(Vertex, Vertex, i64)> = Vec::with_capacity(m);
    for (line, text) in content {
        let mut parts = text.split_whitespace();
        let (t_tok, h_tok, w_tok) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), Some(c), None) => (a, b, c),
            _ => return Err(ParseError::MalformedEdge { line, found: text.into() }),
        };
        let tail: u64 = t_tok
            .parse()
            .map_err(|_| ParseError::MalformedEdge { line, found: text.into() })?;
        let head: u64 = h_tok
            .parse()
            .map_err(|_| ParseError::MalformedEdge { line, found: text.into() })?;
        let weight: i64 = w_tok
            .parse()
            .map_err(|_| ParseError::BadWeight { line, token: w_tok.into() })?;
        for v in [tail, head] {
            if v < 1 || v > n as u64 {
                return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
            }
        }
        edges.push((tail as Vertex, head as Vertex, weight));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, got: edges.len() });
    }
    Ok(GraphInstance::from_edges(n, &edges).expect("all labels were range-checked"))
}

#[derive(Clone, Copy, PartialEq, Eq, Error, Debug)]
pub enum SerializeError {
    #[error("self-loop at vertex {vertex} is infinite and has no edge-list representation")]
    InfiniteSelfLoop { vertex: Vertex },
}

/// Serializes an instance as an edge-list document. Finite off-diagonal
/// edges and non-zero finite self-loops are written in row-major order;
/// parsing the output reproduces the identical instance.
pub fn write_edge_list(g: &GraphInstance) -> Result<String, SerializeError> {
    for v in 1..=g.n() {
        if g.weight(v, v) == Weight::Infinity {
            return Err(SerializeError::InfiniteSelfLoop { vertex: v });
        }
    }
    let edges = g.finite_edges();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (tail, head, w) in edges {
        let _ = writeln!(out, "{tail} {head} {w}");
    }
    Ok(out)
}

/// Edge list on one line, `tail head weight` triples joined by `;`.
pub fn edge_list_inline(g: &GraphInstance) -> String {
    let triples: Vec<String> = g
        .finite_edges()
        .iter()
        .map(|(t, h, w)| format!("{t} {h} {w}"))
        .collect();
    if triples.is_empty() {
        "-".into()
    } else {
        triples.join("; ")
    }
}

/// Renders a matrix with right-aligned columns; infinity prints as `INF`.
pub fn render_matrix(d: &DistMatrix) -> String {
    let n = d.n();
    let cells: Vec<String> = d.entries().iter().map(|w| w.to_string()).collect();
    let width = cells.iter().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:>width$}", cells[i * n + j]);
        }
        out.push('\n');
    }
    out
}
