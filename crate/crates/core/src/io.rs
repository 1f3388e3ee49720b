//! Reading graphs and generator lists from text.
//!
//! Graphs come as JSON, `{"vertices": n, "edges": [[u, v], ..], "generators": [[..], ..]}`
//! with optional generators, or as an edge list with one `u v` pair per line.
//! An edge list may start with `vertices n`; otherwise the count is one more
//! than the largest vertex named. Blank lines and `#` comments are ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
}

impl GraphFile {
    pub fn from_graph(graph: &Graph, generators: Option<&[Permutation]>) -> GraphFile {
        GraphFile {
            vertices: graph.vertex_count(),
            edges: graph.edges(),
            generators: generators.map(|g| g.iter().map(Permutation::to_vec).collect()),
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

fn permutation_at(images: Vec<usize>, line: usize) -> Result<Permutation> {
    let degree = images.len();
    Permutation::from_images(images).map_err(|_| Error::Parse {
        line,
        message: format!("not a permutation of 0..{degree}"),
    })
}

/// Parses a JSON graph, returning the graph and any generators it lists.
pub fn parse_graph_json(text: &str) -> Result<(Graph, Option<Vec<Permutation>>)> {
    let file: GraphFile = serde_json::from_str(text).map_err(json_error)?;
    let graph = Graph::from_edges(file.vertices, &file.edges)?;
    let generators = file
        .generators
        .map(|gens| {
            gens.into_iter()
                .map(|g| permutation_at(g, 1))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok((graph, generators))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a vertex number, found `{token}`"),
    })
}

/// Parses an edge list.
///
/// ```
/// let g = conwalk::io::parse_edge_list("vertices 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
/// assert_eq!(g.valence(), Some(2));
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertices", n] if declared.is_none() && edges.is_empty() => declared = Some(number(n, line)?),
            [u, v] => edges.push((number(u, line)?, number(v, line)?)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found `{content}`"),
                })
            }
        }
    }
    let count = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(count, &edges)
}

/// Parses generators: a JSON array of image arrays, a JSON object with a
/// `generators` field, or one whitespace-separated image list per line.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let raw: Vec<Vec<usize>> = serde_json::from_str(text).map_err(json_error)?;
        return raw.into_iter().map(|g| permutation_at(g, 1)).collect();
    }
    if trimmed.starts_with('{') {
        #[derive(Deserialize)]
        struct Spec {
            generators: Vec<Vec<usize>>,
        }
        let spec: Spec = serde_json::from_str(text).map_err(json_error)?;
        return spec.generators.into_iter().map(|g| permutation_at(g, 1)).collect();
    }
    content_lines(text)
        .map(|(line, content)| {
            let images = content
                .split_whitespace()
                .map(|t| number(t, line))
                .collect::<Result<Vec<_>>>()?;
            permutation_at(images, line)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_graph_with_generators() {
        let text = r#"{"vertices": 4, "edges": [[0,1],[1,2],[2,3],[3,0]], "generators": [[1,2,3,0]]}"#;
        let (g, gens) = parse_graph_json(text).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(gens.unwrap()[0].to_vec(), vec![1, 2, 3, 0]);
    }

    #[test]
    fn json_round_trip() {
        let g = crate::graph::named_graph("petersen").unwrap();
        let text = serde_json::to_string(&GraphFile::from_graph(&g, None)).unwrap();
        let (back, gens) = parse_graph_json(&text).unwrap();
        assert_eq!(back, g);
        assert!(gens.is_none());
    }

    #[test]
    fn json_errors_carry_lines() {
        let text = "{\n\"vertices\": 4,\n\"edges\": [[0,1],[1,2]\n}";
        assert!(matches!(
            parse_graph_json(text).unwrap_err(),
            Error::Parse { line: 4, .. }
        ));
        let bad_perm = r#"{"vertices": 3, "edges": [[0,1],[1,2],[2,0]], "generators": [[0,0,1]]}"#;
        assert!(matches!(parse_graph_json(bad_perm).unwrap_err(), Error::Parse { .. }));
        let loop_edge = r#"{"vertices": 3, "edges": [[0,0]]}"#;
        assert_eq!(parse_graph_json(loop_edge).unwrap_err(), Error::LoopEdge(0));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# a triangle\n0 1\n1 2 # closing soon\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        let g = parse_edge_list("vertices 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(
            parse_edge_list("0 1\n1 x\n").unwrap_err(),
            Error::Parse {
                line: 2,
                message: "expected a vertex number, found `x`".into()
            }
        );
        assert!(matches!(
            parse_edge_list("0 1 2\n").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn generator_formats() {
        let a = parse_generators("[[1,2,0],[0,2,1]]").unwrap();
        let b = parse_generators(r#"{"degree": 3, "generators": [[1,2,0],[0,2,1]]}"#).unwrap();
        let c = parse_generators("# rotation\n1 2 0\n0 2 1\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(matches!(
            parse_generators("1 2 0\n0 0 1\n").unwrap_err(),
            Error::Parse { line: 2, .. }
        ));
    }
}
