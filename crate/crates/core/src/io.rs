//! Edge-list text format.
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>          (m lines, 1-based ids)
//! w <v> <weight>     (optional, default weight 1)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Fixed-point factor for decimal weights: `w 3 0.25` with scale 100
    /// becomes weight 25. Without a scale weights must be integers.
    pub weight_scale: Option<u64>,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list_with(text, ParseOptions::default())
}

pub fn parse_edge_list_with(text: &str, opts: ParseOptions) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<u64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate header"));
                }
                let n = number(tok.next(), line, "vertex count")?;
                let m = number(tok.next(), line, "edge count")?;
                header = Some((n, m));
                weights = vec![1; n];
            }
            "e" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let u = vertex(tok.next(), n, line)?;
                let v = vertex(tok.next(), n, line)?;
                edges.push((u, v));
            }
            "w" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let v = vertex(tok.next(), n, line)?;
                let raw_w = tok.next().ok_or_else(|| syntax(line, "missing weight"))?;
                weights[v] = weight(raw_w, opts.weight_scale, line)?;
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
        if tok.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges, weights)?)
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

fn vertex(tok: Option<&str>, n: usize, line: usize) -> Result<VertexId, ParseError> {
    let id = number(tok, line, "vertex id")?;
    if id == 0 || id > n {
        return Err(syntax(line, format!("vertex id {id} not in 1..={n}")));
    }
    Ok(id - 1)
}

fn weight(tok: &str, scale: Option<u64>, line: usize) -> Result<u64, ParseError> {
    let bad = || syntax(line, format!("bad weight `{tok}`"));
    match scale {
        None => tok.parse().map_err(|_| bad()),
        Some(scale) => {
            let (int, frac) = tok.split_once('.').unwrap_or((tok, ""));
            if int.is_empty() && frac.is_empty() {
                return Err(bad());
            }
            let int: u128 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let digits = frac.len() as u32;
            let frac_v: u128 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            let den = 10u128.checked_pow(digits).ok_or_else(bad)?;
            let num = int * den + frac_v;
            // Round half up.
            let scaled = (num * scale as u128 * 2 + den) / (2 * den);
            u64::try_from(scaled).map_err(|_| bad())
        }
    }
}

/// Writes `g` in the edge-list format; weight lines are emitted only for
/// vertices whose weight differs from 1.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    write_block(&mut out, g.n(), g.edges(), g.weights());
    out
}

pub(crate) fn write_block(
    out: &mut String,
    n: usize,
    edges: impl Iterator<Item = (VertexId, VertexId)>,
    weights: &[u64],
) {
    let edges: Vec<_> = edges.collect();
    let _ = writeln!(out, "p {} {}", n, edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (v, &w) in weights.iter().enumerate() {
        if w != 1 {
            let _ = writeln!(out, "w {} {}", v + 1, w);
        }
    }
}

/// Whitespace-separated 1-based vertex ids, as printed by the CLI.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<VertexId>, ParseError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            out.push(vertex(Some(tok), n, idx + 1)?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn format_vertex_list(vertices: &[VertexId]) -> String {
    let mut ids: Vec<VertexId> = vertices.to_vec();
    ids.sort_unstable();
    ids.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
