//! DOT and JSON graph formats.
//!
//! JSON schema: `{"n": int, "edges": [[u,v],...], "labels": {"id": "name"}}`.
//! The `labels` object is omitted when empty and optional on import.
//! Importing an exported graph reproduces an identical adjacency structure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("label key {0:?} is not a vertex id")]
    BadLabelKey(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<String, String>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.vertex_count(),
        edges: g.edges(),
        labels: g
            .labels()
            .iter()
            .map(|(v, l)| (v.to_string(), l.clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Graph, ExportError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::from_edge_list(doc.n, doc.edges)?;
    for (key, label) in doc.labels {
        let v: usize = key
            .parse()
            .map_err(|_| ExportError::BadLabelKey(key.clone()))?;
        g.set_label(v, label)?;
    }
    Ok(g)
}

fn dot_id(name: &str) -> String {
    let plain_word = name
        .chars()
        .all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name.chars().next().is_some_and(|c| !c.is_ascii_digit());
    let numeral = !name.is_empty() && name.chars().all(|c| c.is_ascii_digit());
    if plain_word || numeral {
        name.to_owned()
    } else {
        format!("\"{}\"", name.replace('"', "\\\""))
    }
}

/// Undirected DOT: `graph G { a_1 -- q_1; ... }`, using labels when present
/// and ids otherwise. Isolated vertices appear as bare node statements.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {};\n", dot_id(&g.display_name(v))));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            dot_id(&g.display_name(u)),
            dot_id(&g.display_name(v))
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dot_of_labeled_path() {
        let mut g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        g.set_label(0, "a_1").unwrap();
        g.set_label(1, "c^1_2").unwrap();
        let dot = to_dot(&g);
        assert_eq!(dot, "graph G {\n  a_1 -- \"c^1_2\";\n  \"c^1_2\" -- 2;\n}\n");
    }

    #[test]
    fn dot_lists_isolated_vertices() {
        let mut g = Graph::new(1);
        g.set_label(0, "2").unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  2;\n}\n");
    }

    #[test]
    fn json_round_trip_with_labels() {
        let mut g = Graph::from_edge_list(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        g.set_label(0, "a_1").unwrap();
        g.set_label(3, "q_2").unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_import_validates() {
        assert!(from_json(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(from_json(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
        assert!(from_json(r#"{"n": 2, "edges": [[0, 1]], "labels": {"x": "y"}}"#).is_err());
        assert!(from_json(r#"{"n": 2, "edges": [[0, 1]]}"#).is_ok());
    }

    proptest! {
        #[test]
        fn json_round_trip(n in 1usize..25, raw in prop::collection::vec((0usize..25, 0usize..25), 0..40)) {
            let edges: Vec<_> = raw
                .into_iter()
                .map(|(u, v)| (u % n, v % n))
                .filter(|(u, v)| u != v)
                .collect();
            let g = Graph::from_edge_list(n, edges).unwrap();
            let back = from_json(&to_json(&g)).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
