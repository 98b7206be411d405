use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use super::{GraphMetrics, SimpleGraph};
use crate::{Error, FiniteSemigroup, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

/// Renders `g` (the commuting graph of `s`) in the named format.
pub fn export(g: &SimpleGraph, s: &FiniteSemigroup, format: &str) -> Result<Vec<u8>> {
    Ok(match format.parse()? {
        ExportFormat::Dot => to_dot(g, s).into_bytes(),
        ExportFormat::Json => to_json(g, s, &GraphMetrics::compute(g)).into_bytes(),
    })
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn to_dot(g: &SimpleGraph, s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape(s.name().unwrap_or("G"))).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  v{v} [label=\"{}\"];", escape(&s.label(g.label(v)))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  v{u} -- v{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
    metrics: &'a GraphMetrics,
}

/// `{vertices, edges, metrics}`; vertices ascend by element index and edges
/// are lexicographic pairs of vertex positions.
pub fn to_json(g: &SimpleGraph, s: &FiniteSemigroup, metrics: &GraphMetrics) -> String {
    let doc = JsonGraph {
        vertices: (0..g.vertex_count())
            .map(|v| s.label(g.label(v)).into_owned())
            .collect(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        metrics,
    };
    serde_json::to_string(&doc).expect("serializable")
}
