//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every other module builds on [`Graph`]: it is immutable after
//! construction, adjacency lists are sorted and symmetric, and there are no
//! loops or parallel edges. Contraction always re-simplifies, so the quotient
//! of a simple graph is again a simple graph.

mod contract;
mod degeneracy;
mod dot;
pub mod generate;
mod parse;

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

pub use contract::{contract_along_cycle, contract_edges, quotient_by_classes, ContractionPlan};
pub use degeneracy::{corollary_bound, degeneracy, greedy_coloring, DegeneracyReport};
pub use dot::to_dot;
pub use generate::{generate, Family};
pub use parse::{parse_edge_list, write_edge_list};

use crate::error::GraphError;

/// Vertex identifier. Always dense: a graph with `n` vertices uses `0..n`.
pub type Vertex = usize;

/// Undirected edge, normalised so that `.0 < .1`.
pub type Edge = (Vertex, Vertex);

#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a simple graph. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates neighbour lists. Callers guarantee symmetry and
    /// absence of loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        let g = Graph {
            adj,
            edge_count: twice / 2,
        };
        debug_assert!(g.invariants_hold());
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// Cycle `c_0 c_1 … c_{n-1} c_0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameters(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(u, v)).collect())
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// True iff consecutive vertices of `seq` (cyclically) are adjacent and
    /// all entries are distinct, with at least three of them.
    pub fn is_cycle(&self, seq: &[Vertex]) -> bool {
        seq.len() >= 3
            && self.is_path(seq)
            && self.has_edge(seq[seq.len() - 1], seq[0])
    }

    /// True iff `seq` is a non-empty sequence of distinct vertices with
    /// consecutive ones adjacent.
    pub fn is_path(&self, seq: &[Vertex]) -> bool {
        if seq.is_empty() || seq.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let mut seen = vec![false; self.n()];
        for &v in seq {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Number of edges of `self` joining two vertices of the cycle `seq`
    /// that are not consecutive on it.
    pub fn chords_of_cycle(&self, seq: &[Vertex]) -> Vec<Edge> {
        let t = seq.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        let mut chords = Vec::new();
        for (i, &v) in seq.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = pos[u];
                if j == usize::MAX || u < v {
                    continue;
                }
                let gap = i.abs_diff(j);
                if gap != 1 && gap != t - 1 {
                    chords.push(edge(u, v));
                }
            }
        }
        chords.sort_unstable();
        chords
    }

    /// Checks simplicity, symmetry and the cached edge count.
    pub fn invariants_hold(&self) -> bool {
        let mut twice = 0;
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &u in list {
                if u == v || u >= self.n() || self.adj[u].binary_search(&v).is_err() {
                    return false;
                }
            }
            twice += list.len();
        }
        twice == 2 * self.edge_count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Serialised form of a graph: vertex count plus sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphData {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphData {
    fn from(g: &Graph) -> Self {
        GraphData {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<&GraphData> for Graph {
    type Error = GraphError;

    fn try_from(data: &GraphData) -> Result<Self, Self::Error> {
        Graph::from_edges(data.n, data.edges.iter().map(|e| (e[0], e[1])))
    }
}

/// Exact degree statistics. The average degree is kept as the rational
/// `2|E| / |V|` so that fractional thresholds compare without rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub avg_degree: Ratio<u64>,
}

impl DegreeStats {
    /// `avg_degree >= 2(k+1)/3`, decided as `3·2|E| >= 2(k+1)|V|`.
    pub fn avg_at_least_two_thirds_of(&self, k_plus_one: usize) -> bool {
        3 * 2 * self.edges as u128 >= 2 * k_plus_one as u128 * self.vertices as u128
    }

    /// Renders the average as `p/q`, or a bare integer when `q = 1`.
    pub fn avg_string(&self) -> String {
        format_ratio(&self.avg_degree)
    }
}

pub fn format_ratio(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    Ok(DegreeStats {
        vertices: g.n(),
        edges: g.edge_count(),
        min_degree: g.min_degree().unwrap_or(0),
        max_degree: g.max_degree().unwrap_or(0),
        avg_degree: Ratio::new(2 * g.edge_count() as u64, g.n() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_dedups_and_rejects_loops() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(GraphError::Loop { vertex: 1 })
        ));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn degree_stats_examples() {
        let k6 = degree_stats(&Graph::complete(6)).unwrap();
        assert_eq!((k6.min_degree, k6.avg_string().as_str()), (5, "5"));

        let petersen = degree_stats(&generate(&Family::Petersen, 0).unwrap()).unwrap();
        assert_eq!((petersen.min_degree, petersen.avg_string().as_str()), (3, "3"));

        let star = degree_stats(&generate(&Family::Star { leaves: 4 }, 0).unwrap()).unwrap();
        assert_eq!(star.min_degree, 1);
        assert_eq!(star.avg_degree, Ratio::new(8, 5));
        assert_eq!(star.avg_string(), "8/5");

        assert!(matches!(degree_stats(&Graph::empty(0)), Err(GraphError::Empty)));
    }

    #[test]
    fn two_thirds_threshold_is_exact() {
        // Triangle: average 2, and 2 = 2/3 * 3 exactly.
        let tri = degree_stats(&Graph::complete(3)).unwrap();
        assert!(tri.avg_at_least_two_thirds_of(3));
        assert!(!tri.avg_at_least_two_thirds_of(4));
    }

    #[test]
    fn chords_of_cycle_in_k5() {
        let g = Graph::complete(5);
        assert_eq!(g.chords_of_cycle(&[0, 1, 2, 3, 4]).len(), 5);
        assert!(Graph::cycle(7).unwrap().chords_of_cycle(&[0, 1, 2, 3, 4, 5, 6]).is_empty());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::complete(5);
        let h = g.induced_subgraph(&[4, 2, 0]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
    }
}
