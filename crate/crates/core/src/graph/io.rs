use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Canonical JSON form of a graph: edges as `[u, v]` with `u < v`, sorted.
///
/// The optional `family` block carries constructor metadata and is ignored
/// when the graph is read back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<serde_json::Value>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            name: g.name().map(str::to_owned),
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            family: None,
        }
    }
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        Ok(match &self.name {
            Some(name) => g.with_name(name.clone()),
            None => g,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        GraphDoc::from(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        GraphDoc::from_json(text)?.to_graph()
    }
}

/// First line `n`, then one `u v` pair per line.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?
        .parse()
        .map_err(|e| Error::Parse(format!("vertex count: {e}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace().map(str::parse::<usize>);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
        }
    }
    Graph::from_edges(n, edges)
}

/// DOT text: `graph <name> { u -- v; ... }`. Isolated vertices are listed too.
pub fn to_dot(g: &Graph) -> String {
    let name: String = g
        .name()
        .unwrap_or("G")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let mut out = format!("graph {name} {{\n");
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_canonical() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 2)]).unwrap();
        let doc = GraphDoc::from(&g);
        assert_eq!(doc.edges, vec![[0, 1], [0, 2], [2, 3]]);
        let back = Graph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_keeps_name_and_ignores_family() {
        let text = r#"{"name":"p3","n":3,"edges":[[0,1],[1,2]],"family":{"id":"path"}}"#;
        let g = Graph::from_json(text).unwrap();
        assert_eq!(g.name(), Some("p3"));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn json_rejects_bad_vertices() {
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
        assert!(Graph::from_json("not json").is_err());
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let text = to_edge_list_text(&g);
        assert_eq!(text, "3\n0 1\n1 2\n");
        assert_eq!(from_edge_list_text(&text).unwrap(), g);
        assert!(from_edge_list_text("3\n0 1 2\n").is_err());
        assert!(from_edge_list_text("").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap().with_name("bs 2-3");
        assert_eq!(to_dot(&g), "graph bs_2_3 {\n  2;\n  0 -- 1;\n}\n");
    }
}
