use std::fmt::Write as _;

use super::{Graph, Vertex};

const PALETTE: [&str; 8] = [
    "lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "paleturquoise", "wheat",
];

/// Undirected DOT, one line per edge. When `arcs` is given, every arc is
/// shaded with its own fill colour and the edges inside an arc are drawn
/// bold (those are the contracted ones).
pub fn to_dot(g: &Graph, arcs: Option<&[Vec<Vertex>]>) -> String {
    let mut out = String::from("graph G {\n");
    let mut arc_of = vec![usize::MAX; g.n()];
    if let Some(arcs) = arcs {
        for (i, arc) in arcs.iter().enumerate() {
            for &v in arc {
                arc_of[v] = i;
            }
        }
        for (i, arc) in arcs.iter().enumerate() {
            for &v in arc {
                let _ = writeln!(
                    out,
                    "  {v} [style=filled, fillcolor={}, arc={i}];",
                    PALETTE[i % PALETTE.len()]
                );
            }
        }
    }
    for (u, v) in g.edges() {
        if arc_of[u] != usize::MAX && arc_of[u] == arc_of[v] {
            let _ = writeln!(out, "  {u} -- {v} [style=bold];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_per_edge() {
        let dot = to_dot(&Graph::complete(4), None);
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 6);
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn arcs_are_coloured() {
        let c4 = Graph::cycle(4).unwrap();
        let dot = to_dot(&c4, Some(&[vec![0, 1], vec![2], vec![3]]));
        assert!(dot.contains("0 -- 1 [style=bold];"));
        assert!(dot.contains("2 [style=filled, fillcolor=lightpink, arc=1];"));
    }
}
