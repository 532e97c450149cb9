//! graph6, Graphviz DOT and edge-list JSON encodings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Graph6,
    Dot,
    EdgeListJson,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Self::Graph6),
            "dot" => Ok(Self::Dot),
            "json" | "edge-list-json" => Ok(Self::EdgeListJson),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Encodes `g`; `labels` (one per vertex) are used by DOT and JSON and
/// default to the vertex index.
pub fn export(g: &SimpleGraph, labels: Option<&[String]>, format: ExportFormat) -> String {
    match format {
        ExportFormat::Graph6 => to_graph6(g),
        ExportFormat::Dot => to_dot(g, labels),
        ExportFormat::EdgeListJson => to_edge_list_json(g, labels),
    }
}

pub fn import(s: &str, format: ExportFormat) -> Result<SimpleGraph> {
    match format {
        ExportFormat::Graph6 => from_graph6(s),
        ExportFormat::Dot => from_dot(s),
        ExportFormat::EdgeListJson => from_edge_list_json(s).map(|(g, _)| g),
    }
}

fn push_size(out: &mut String, n: usize) {
    let n = n as u64;
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 63) as u8 + 63) as char);
        }
    }
}

/// Upper triangle in column order (`x(0,1) x(0,2) x(1,2) x(0,3) …`), six bits per byte.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<SimpleGraph> {
    let bad = |msg: &str| Error::Decode {
        format: "graph6",
        msg: msg.to_string(),
    };
    let bytes = s.trim_end().as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    let (n, body) = match vals.as_slice() {
        [63, 63, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |a, &v| a << 6 | v), &rest[6..]),
        [63, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |a, &v| a << 6 | v), &rest[3..]),
        [v, rest @ ..] if *v < 63 => (*v, rest),
        _ => return Err(bad("truncated size header")),
    };
    let n = n as usize;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(bad(&format!("expected {needed} data bytes, found {}", body.len())));
    }
    let mut g = SimpleGraph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn label_of(labels: Option<&[String]>, v: usize) -> String {
    labels.map_or_else(|| v.to_string(), |l| l[v].clone())
}

pub fn to_dot(g: &SimpleGraph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", label_of(labels, v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Reads the subset of DOT written by [`to_dot`].
pub fn from_dot(s: &str) -> Result<SimpleGraph> {
    let bad = |msg: String| Error::Decode { format: "dot", msg };
    let mut nodes = 0usize;
    let mut edges = Vec::new();
    for line in s.lines().map(str::trim) {
        if line.is_empty() || line.starts_with("graph") || line == "}" {
            continue;
        }
        let stmt = line.trim_end_matches(';');
        if let Some((a, b)) = stmt.split_once("--") {
            let u: usize = a.trim().parse().map_err(|_| bad(format!("bad edge: {line}")))?;
            let v: usize = b.trim().parse().map_err(|_| bad(format!("bad edge: {line}")))?;
            edges.push((u, v));
            nodes = nodes.max(u + 1).max(v + 1);
        } else {
            let id = stmt.split_whitespace().next().unwrap_or_default();
            let v: usize = id.parse().map_err(|_| bad(format!("bad node: {line}")))?;
            nodes = nodes.max(v + 1);
        }
    }
    Ok(SimpleGraph::from_edges(nodes, edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub labels: Vec<String>,
}

pub fn to_edge_list_json(g: &SimpleGraph, labels: Option<&[String]>) -> String {
    let doc = EdgeListDoc {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: (0..g.vertex_count()).map(|v| label_of(labels, v)).collect(),
    };
    serde_json::to_string(&doc).expect("edge list serialises")
}

pub fn from_edge_list_json(s: &str) -> Result<(SimpleGraph, Vec<String>)> {
    let doc: EdgeListDoc = serde_json::from_str(s).map_err(|e| Error::Decode {
        format: "edge-list-json",
        msg: e.to_string(),
    })?;
    if let Some(e) = doc.edges.iter().find(|e| e[0] >= doc.n || e[1] >= doc.n) {
        return Err(Error::Decode {
            format: "edge-list-json",
            msg: format!("edge {e:?} out of range for n = {}", doc.n),
        });
    }
    let g = SimpleGraph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])));
    Ok((g, doc.labels))
}
