//! Graph interchange: a versioned line-oriented text format, a JSON form
//! of the same data, and DOT export.
//!
//! Text format:
//!
//! ```text
//! qcgraph v1
//! rank 3
//! vertex 1 wt 1,0,0 eps 0,0 phi 1,0
//! edge 1 2 1
//! ```
//!
//! `edge X Y i` means `f_i(X) = Y` and `e_i(Y) = X`. One-sided entries,
//! which only occur in non-compliant graphs, are written as `raise X Y i`
//! (`e_i(X) = Y`) and `lower X Y i` (`f_i(X) = Y`). Lengths are integers,
//! `+inf` or `-inf`; a rank-1 graph writes `-` for its empty length lists.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ext::ExtInt;
use crate::graph::{GraphBuilder, GraphError, QuasiCrystalGraph, VertexId};
use crate::weight::Weight;

pub const FORMAT_HEADER: &str = "qcgraph v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex id {0:?} cannot be written: ids must be non-empty and free of whitespace")]
    BadId(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let s: Vec<String> = items.into_iter().map(|t| t.to_string()).collect();
    if s.is_empty() {
        "-".to_string()
    } else {
        s.join(",")
    }
}

fn check_ids(g: &QuasiCrystalGraph) -> Result<(), FormatError> {
    for v in g.vertices() {
        let id = g.id(v).as_str();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(FormatError::BadId(id.to_string()));
        }
    }
    Ok(())
}

/// `(kind, from, to, i)` records in vertex-then-index order.
fn edge_records(g: &QuasiCrystalGraph) -> Vec<(&'static str, usize, usize, usize)> {
    let mut out = Vec::new();
    for x in g.vertices() {
        for i in g.indices() {
            if let Some(y) = g.lower(x, i) {
                let kind = if g.raise(y, i) == Some(x) { "edge" } else { "lower" };
                out.push((kind, x, y, i));
            }
            if let Some(y) = g.raise(x, i) {
                if g.lower(y, i) != Some(x) {
                    out.push(("raise", x, y, i));
                }
            }
        }
    }
    out
}

pub fn write_text(g: &QuasiCrystalGraph) -> Result<String, FormatError> {
    check_ids(g)?;
    let mut out = String::new();
    writeln!(out, "{FORMAT_HEADER}").unwrap();
    writeln!(out, "rank {}", g.rank()).unwrap();
    for v in g.vertices() {
        writeln!(
            out,
            "vertex {} wt {} eps {} phi {}",
            g.id(v),
            join(g.weight(v).coords()),
            join(g.indices().map(|i| g.eps(v, i))),
            join(g.indices().map(|i| g.phi(v, i))),
        )
        .unwrap();
    }
    for (kind, x, y, i) in edge_records(g) {
        writeln!(out, "{kind} {} {} {i}", g.id(x), g.id(y)).unwrap();
    }
    Ok(out)
}

fn parse_list<T: std::str::FromStr>(field: &str, line: usize, what: &str) -> Result<Vec<T>, FormatError> {
    if field == "-" {
        return Ok(Vec::new());
    }
    field
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| parse_err(line, format!("bad {what} entry {t:?}"))))
        .collect()
}

pub fn read_text(input: &str) -> Result<QuasiCrystalGraph, FormatError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, FORMAT_HEADER)) => {}
        Some((k, other)) => return Err(parse_err(k, format!("expected {FORMAT_HEADER:?}, found {other:?}"))),
        None => return Err(parse_err(0, "empty input")),
    }
    let rank = match lines.next() {
        Some((k, l)) => match l.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["rank", n] => n.parse::<usize>().map_err(|_| parse_err(k, "bad rank"))?,
            _ => return Err(parse_err(k, "expected `rank N`")),
        },
        None => return Err(parse_err(0, "missing rank line")),
    };
    if rank == 0 {
        return Err(parse_err(2, "rank must be at least 1"));
    }
    let mut b = GraphBuilder::new(rank);
    let lookup = |b: &GraphBuilder, id: &str, k: usize| {
        b.index_of(id).ok_or_else(|| parse_err(k, format!("unknown vertex {id:?}")))
    };
    for (k, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        match fields.as_slice() {
            ["vertex", id, "wt", wt, "eps", eps, "phi", phi] => {
                let wt: Vec<i64> = parse_list(wt, k, "weight")?;
                let eps: Vec<ExtInt> = parse_list(eps, k, "eps")?;
                let phi: Vec<ExtInt> = parse_list(phi, k, "phi")?;
                b.add_vertex(VertexId::new(*id), Weight::new(wt), eps, phi)
                    .map_err(|e| parse_err(k, e.to_string()))?;
            }
            [kind @ ("edge" | "raise" | "lower"), from, to, label] => {
                let i: usize = label.parse().map_err(|_| parse_err(k, "bad edge label"))?;
                let (x, y) = (lookup(&b, from, k)?, lookup(&b, to, k)?);
                let result = match *kind {
                    "edge" => b.add_edge(x, y, i),
                    "raise" => b.set_raise(x, i, y),
                    _ => b.set_lower(x, i, y),
                };
                result.map_err(|e| parse_err(k, e.to_string()))?;
            }
            _ => return Err(parse_err(k, format!("unrecognised record {l:?}"))),
        }
    }
    Ok(b.build()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonVertex {
    id: String,
    wt: Vec<i64>,
    eps: Vec<ExtInt>,
    phi: Vec<ExtInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonEdge {
    kind: String,
    from: String,
    to: String,
    label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonGraph {
    format: String,
    rank: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

pub fn write_json(g: &QuasiCrystalGraph) -> Result<String, FormatError> {
    let doc = JsonGraph {
        format: FORMAT_HEADER.to_string(),
        rank: g.rank(),
        vertices: g
            .vertices()
            .map(|v| JsonVertex {
                id: g.id(v).to_string(),
                wt: g.weight(v).coords().to_vec(),
                eps: g.indices().map(|i| g.eps(v, i)).collect(),
                phi: g.indices().map(|i| g.phi(v, i)).collect(),
            })
            .collect(),
        edges: edge_records(g)
            .into_iter()
            .map(|(kind, x, y, i)| JsonEdge {
                kind: kind.to_string(),
                from: g.id(x).to_string(),
                to: g.id(y).to_string(),
                label: i,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn read_json(input: &str) -> Result<QuasiCrystalGraph, FormatError> {
    let doc: JsonGraph = serde_json::from_str(input)?;
    if doc.format != FORMAT_HEADER {
        return Err(parse_err(0, format!("unsupported format {:?}", doc.format)));
    }
    let mut b = GraphBuilder::with_capacity(doc.rank, doc.vertices.len());
    for v in doc.vertices {
        b.add_vertex(VertexId::new(v.id), Weight::new(v.wt), v.eps, v.phi)?;
    }
    for e in doc.edges {
        let find = |id: &str| b.index_of(id).ok_or_else(|| GraphError::UnknownVertex(id.to_string()));
        let (x, y) = (find(&e.from)?, find(&e.to)?);
        match e.kind.as_str() {
            "edge" => b.add_edge(x, y, e.label)?,
            "raise" => b.set_raise(x, e.label, y)?,
            "lower" => b.set_lower(x, e.label, y)?,
            other => return Err(parse_err(0, format!("unknown edge kind {other:?}"))),
        }
    }
    Ok(b.build()?)
}

/// Reads either format; JSON is recognised by a leading `{`.
pub fn read_graph(input: &str) -> Result<QuasiCrystalGraph, FormatError> {
    if input.trim_start().starts_with('{') {
        read_json(input)
    } else {
        read_text(input)
    }
}

const PALETTE: [&str; 8] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan",
];

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Edges labelled and coloured by index; `i`-loops drawn as dashed
/// self-edges.
pub fn write_dot(g: &QuasiCrystalGraph) -> String {
    let mut out = String::from("digraph qcgraph {\n");
    for v in g.vertices() {
        let label = format!("{}\\n{}", g.id(v), g.weight(v));
        writeln!(out, "  {} [label=\"{}\"];", dot_quote(g.id(v).as_str()), label.replace('"', "\\\"")).unwrap();
    }
    for v in g.vertices() {
        for i in g.indices() {
            let color = PALETTE[(i - 1) % PALETTE.len()];
            let id = dot_quote(g.id(v).as_str());
            if let Some(y) = g.lower(v, i) {
                writeln!(out, "  {id} -> {} [label=\"{i}\", color={color}];", dot_quote(g.id(y).as_str())).unwrap();
            }
            if g.has_loop(v, i) {
                writeln!(out, "  {id} -> {id} [label=\"{i}\", color={color}, style=dashed];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
