use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::GraphError;

/// Parses a whitespace-separated edge list: one `u v` pair per line, 0-based
/// ids, `#` starts a comment. Duplicate edges are merged, loops rejected.
///
/// The vertex count is one more than the largest id seen. A comment of the
/// form `# n=N` raises it to at least `N`, which is how isolated trailing
/// vertices survive a round trip through [`write_edge_list`].
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(declared) = comment.and_then(declared_vertex_count) {
            n = n.max(declared);
        }
        let mut fields = body.split_whitespace();
        let Some(first) = fields.next() else {
            continue;
        };
        let parse = |s: &str| -> Result<Vertex, GraphError> {
            s.parse::<Vertex>().map_err(|_| GraphError::Parse {
                line: line_no,
                message: format!("`{s}` is not a vertex id"),
            })
        };
        let u = parse(first)?;
        let v = match fields.next() {
            Some(s) => parse(s)?,
            None => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: "expected two vertex ids".into(),
                })
            }
        };
        if fields.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                message: "trailing fields after the edge".into(),
            });
        }
        if u == v {
            return Err(GraphError::LoopAtLine { line: line_no });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

fn declared_vertex_count(comment: &str) -> Option<usize> {
    comment.trim().strip_prefix("n=")?.trim().parse().ok()
}

/// Inverse of [`parse_edge_list`]: a `# n=N` header then one edge per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn duplicates_are_merged() {
        let g = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
    }

    #[test]
    fn loop_is_reported_with_line() {
        let err = parse_edge_list("0 0").unwrap_err();
        assert_eq!(err, GraphError::LoopAtLine { line: 1 });
        assert_eq!(err.to_string(), "loop at line 1");
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_edge_list("0 1\n# fine\n2 x\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_edge_list("7"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("1 2 3"), Err(GraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n0 1 # trailing\n  1 2\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
    }

    #[test]
    fn declared_count_keeps_isolated_vertices() {
        let g = Graph::from_edges(5, [(0, 1)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
