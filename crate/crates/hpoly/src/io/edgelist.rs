//! Plain-text edge lists: one `u v` pair per line, with arbitrary integer or
//! symbolic labels. An optional first line `n=<count>` pins the vertex count
//! (the only way this format can express isolated vertices); in that mode
//! labels must be integers below the declared count. Without the header,
//! labels map to dense ids in order of first appearance. Blank lines and
//! lines starting with `#` are skipped.

use crate::graph::Graph;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, got `{content}`")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: loop edge at `{label}` is not allowed")]
    LoopEdge { line: usize, label: String },
    #[error("line {line}: bad vertex count header `{content}`")]
    BadHeader { line: usize, content: String },
    #[error("line {line}: label `{label}` must be an integer below the declared count {n}")]
    LabelOutsideDeclaredRange { line: usize, label: String, n: usize },
}

/// A parsed edge list: the normalized graph, the label for each vertex id,
/// and whether duplicate edges were collapsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListGraph {
    pub graph: Graph,
    /// `labels[v]` is the input label normalized to vertex id `v`.
    pub labels: Vec<String>,
    pub collapsed_duplicates: bool,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut first_content_line = true;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if first_content_line {
            first_content_line = false;
            if let Some(rest) = line.strip_prefix("n=") {
                declared = Some(rest.trim().parse().map_err(|_| EdgeListError::BadHeader {
                    line: line_no,
                    content: raw.to_string(),
                })?);
                continue;
            }
        }
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(EdgeListError::MalformedLine {
                    line: line_no,
                    content: raw.to_string(),
                })
            }
        };
        let mut resolve = |label: &str| -> Result<usize, EdgeListError> {
            match declared {
                Some(n) => {
                    let id: usize =
                        label
                            .parse()
                            .map_err(|_| EdgeListError::LabelOutsideDeclaredRange {
                                line: line_no,
                                label: label.to_string(),
                                n,
                            })?;
                    if id >= n {
                        return Err(EdgeListError::LabelOutsideDeclaredRange {
                            line: line_no,
                            label: label.to_string(),
                            n,
                        });
                    }
                    Ok(id)
                }
                None => Ok(*ids.entry(label.to_string()).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                })),
            }
        };
        let (u_id, v_id) = (resolve(u)?, resolve(v)?);
        if u_id == v_id {
            return Err(EdgeListError::LoopEdge {
                line: line_no,
                label: u.to_string(),
            });
        }
        edges.push((u_id, v_id));
    }

    let n = declared.unwrap_or(labels.len());
    if declared.is_some() {
        labels = (0..n).map(|v| v.to_string()).collect();
    }
    let built = Graph::build(n, &edges).expect("edge ids are dense and loop-free");
    Ok(EdgeListGraph {
        graph: built.graph,
        labels,
        collapsed_duplicates: built.collapsed_duplicates,
    })
}

/// Writes the header form so isolated vertices survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
