//! Labelled graphs from family specs or graph6 files.

use std::path::Path;

use serde::{Deserialize, Serialize};

use srg_core::{graph6, ConstructedGraph, Graph, VertexSet};

use crate::CliError;

/// A graph with one printable label per vertex.
#[derive(Debug, Clone)]
pub struct LabelledGraph {
    pub id: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    pub lines: Option<Vec<VertexSet>>,
}

impl LabelledGraph {
    pub fn from_constructed(cg: ConstructedGraph) -> LabelledGraph {
        LabelledGraph {
            id: cg.spec.id(),
            graph: cg.graph,
            labels: cg.labels,
            lines: cg.lines,
        }
    }

    /// Vertices labelled by their index; the id is a digest of the encoding.
    pub fn from_graph6(line: &str) -> Result<LabelledGraph, CliError> {
        let graph = graph6::decode(line.trim().as_bytes())?;
        let labels = (0..graph.order()).map(|i| i.to_string()).collect();
        Ok(LabelledGraph {
            id: format!("g6:{:016x}", fnv1a(line.trim().as_bytes())),
            graph,
            labels,
            lines: None,
        })
    }

    pub fn vertex(&self, label: &str) -> Result<usize, CliError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CliError::UnknownLabel(label.to_string()))
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, CliError> {
        let mut set = VertexSet::empty(self.graph.order());
        for l in labels {
            set.insert(self.vertex(l.as_ref())?);
        }
        Ok(set)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Label map written next to a graph6 file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub schema: u32,
    pub id: String,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Vec<Vec<String>>>,
}

impl Sidecar {
    pub fn of(g: &LabelledGraph) -> Sidecar {
        Sidecar {
            schema: 1,
            id: g.id.clone(),
            labels: g.labels.clone(),
            lines: g.lines.as_ref().map(|ls| ls.iter().map(|l| g.labels_of(l)).collect()),
        }
    }
}

/// First non-empty line of a graph6 file, with labels from an optional sidecar.
pub fn read_graph6_file(path: &Path, sidecar: Option<&Path>) -> Result<LabelledGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError::Usage(format!("{}: no graph6 line", path.display())))?;
    let mut g = LabelledGraph::from_graph6(line)?;
    if let Some(sc) = sidecar {
        let text = std::fs::read_to_string(sc).map_err(|e| CliError::io(sc, e))?;
        let sc: Sidecar = serde_json::from_str(&text)?;
        if sc.labels.len() != g.graph.order() {
            return Err(CliError::Usage(format!(
                "label map has {} labels for a graph on {} vertices",
                sc.labels.len(),
                g.graph.order()
            )));
        }
        g.id = sc.id;
        g.labels = sc.labels;
        g.lines = sc
            .lines
            .map(|ls| ls.iter().map(|l| g.set_of(l)).collect())
            .transpose()?;
    }
    Ok(g)
}

/// Splits on commas outside brackets, so `{1,2},{1,3}` yields two labels.
pub fn split_labels(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
