//! Lollipops, rotations and the dense-cycle search.
//!
//! A lollipop is a path `p_1 … p_s` whose last vertex `p_s = c_1` starts a
//! cycle `c_1 … c_t`; path and cycle share only `c_1`. The search keeps
//! replacing the current lollipop by a better one (more vertices, or the
//! same vertices and a longer cycle) until the rotation closure of its
//! cycle certifies enough high-degree vertices.

mod certificate;
mod closure;
mod rotation;

use serde::{Deserialize, Serialize};

pub use certificate::{
    check_closure_lemmas, chord_lower_bound, find_dense_cycle, find_dense_cycle_from,
    DenseCycleCertificate, LemmaViolation,
};
pub use closure::{active_closure, required_active_count, ActiveClosure, ClosureOutcome};
pub use rotation::{rotate, CycleIndex, RotationStep, Seed, WitnessPath};

use crate::error::EngineError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lollipop {
    /// `p_1 … p_s`; the last entry is `c_1`.
    pub path: Vec<Vertex>,
    /// `c_1 … c_t`; closes with the edge `c_t c_1`.
    pub cycle: Vec<Vertex>,
}

impl Lollipop {
    pub fn c1(&self) -> Vertex {
        self.cycle[0]
    }

    /// `|V(P) ∪ V(C)|`.
    pub fn vertex_count(&self) -> usize {
        self.path.len() + self.cycle.len() - 1
    }

    /// Progress measure that strictly increases on every improvement.
    pub fn rank(&self) -> (usize, usize) {
        (self.vertex_count(), self.cycle.len())
    }

    pub fn validate(&self, g: &Graph) -> Result<(), EngineError> {
        let bad = |msg: &str| Err(EngineError::InvalidLollipop(msg.to_string()));
        if self.path.is_empty() || self.cycle.len() < 3 {
            return bad("path must be non-empty and the cycle must have at least 3 vertices");
        }
        if self.path.last() != self.cycle.first() {
            return bad("the path must end at the first cycle vertex");
        }
        if !g.is_path(&self.path) {
            return bad("path is not a path of the graph");
        }
        if !g.is_cycle(&self.cycle) {
            return bad("cycle is not a cycle of the graph");
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.path {
            seen[v] = true;
        }
        if self.cycle[1..].iter().any(|&v| seen[v]) {
            return bad("path and cycle share more than c1");
        }
        Ok(())
    }
}

/// Extends `p` at its last vertex, then at its first, always by the
/// smallest-id free neighbour, until neither end has a neighbour off the
/// path.
pub fn maximal_path_extend(g: &Graph, p: &[Vertex]) -> Result<Vec<Vertex>, EngineError> {
    if !g.is_path(p) {
        return Err(EngineError::InvalidPath(format!("{p:?} is not a path of the graph")));
    }
    let mut on_path = vec![false; g.n()];
    for &v in p {
        on_path[v] = true;
    }
    let mut tail: Vec<Vertex> = p.to_vec();
    let mut head: Vec<Vertex> = Vec::new();
    loop {
        let end = *tail.last().expect("non-empty path");
        if let Some(&x) = g.neighbors(end).iter().find(|&&x| !on_path[x]) {
            on_path[x] = true;
            tail.push(x);
            continue;
        }
        let start = *head.last().unwrap_or(&tail[0]);
        if let Some(&x) = g.neighbors(start).iter().find(|&&x| !on_path[x]) {
            on_path[x] = true;
            head.push(x);
            continue;
        }
        break;
    }
    head.reverse();
    head.extend(tail);
    Ok(head)
}

/// Lollipop on a maximal path `a … b`: the cycle closes at the neighbour of
/// `b` farthest from `b` along the path.
pub(crate) fn lollipop_from_maximal_path(g: &Graph, path: &[Vertex]) -> Result<Lollipop, EngineError> {
    let b = *path.last().expect("non-empty path");
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let far = g
        .neighbors(b)
        .iter()
        .map(|&x| pos[x])
        .min()
        .filter(|&i| i + 2 < path.len())
        .ok_or_else(|| {
            EngineError::InvalidPath(format!("end {b} has fewer than two neighbours on the path"))
        })?;
    debug_assert!(g.neighbors(b).iter().all(|&x| pos[x] != usize::MAX));
    Ok(Lollipop {
        path: path[..=far].to_vec(),
        cycle: path[far..].to_vec(),
    })
}

/// First lollipop of the search, grown from vertex 0.
pub fn initial_lollipop(g: &Graph) -> Result<Lollipop, EngineError> {
    initial_lollipop_from(g, 0)
}

pub fn initial_lollipop_from(g: &Graph, start: Vertex) -> Result<Lollipop, EngineError> {
    let min_degree = g.min_degree().unwrap_or(0);
    if g.n() == 0 || min_degree < 2 {
        return Err(EngineError::Precondition {
            min_degree,
            required: 2,
        });
    }
    if start >= g.n() {
        return Err(EngineError::InvalidPath(format!("start vertex {start} out of range")));
    }
    let path = maximal_path_extend(g, &[start])?;
    lollipop_from_maximal_path(g, &path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};

    fn is_maximal(g: &Graph, p: &[Vertex]) -> bool {
        let ends = [p[0], p[p.len() - 1]];
        ends.iter().all(|&e| g.neighbors(e).iter().all(|x| p.contains(x)))
    }

    #[test]
    fn extends_middle_edge_of_p5() {
        let p5 = generate(&Family::Path { n: 5 }, 0).unwrap();
        let full = maximal_path_extend(&p5, &[1, 2]).unwrap();
        assert_eq!(full, vec![0, 1, 2, 3, 4]);
        assert_eq!(maximal_path_extend(&p5, &full).unwrap(), full);
    }

    #[test]
    fn petersen_single_vertex_reaches_girth() {
        let g = generate(&Family::Petersen, 0).unwrap();
        for v in g.vertices() {
            let p = maximal_path_extend(&g, &[v]).unwrap();
            assert!(g.is_path(&p) && is_maximal(&g, &p));
            assert!(p.len() >= 5, "path {p:?} has length < 4");
        }
    }

    #[test]
    fn rejects_non_path() {
        assert!(maximal_path_extend(&Graph::cycle(5).unwrap(), &[0, 2]).is_err());
    }

    #[test]
    fn c5_lollipop_is_whole_cycle() {
        let l = initial_lollipop(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(l.path.len(), 1);
        assert_eq!(l.cycle.len(), 5);
    }

    #[test]
    fn k4_cycle_spans_everything() {
        let l = initial_lollipop(&Graph::complete(4)).unwrap();
        assert_eq!((l.path.len(), l.cycle.len()), (1, 4));
        l.validate(&Graph::complete(4)).unwrap();
    }

    #[test]
    fn bowtie_from_every_start() {
        let g = generate(&Family::Bowtie, 0).unwrap();
        for v in g.vertices() {
            let l = initial_lollipop_from(&g, v).unwrap();
            l.validate(&g).unwrap();
            assert_eq!(l.cycle.len(), 3);
        }
    }

    #[test]
    fn low_degree_is_rejected() {
        let star = generate(&Family::Star { leaves: 3 }, 0).unwrap();
        assert!(matches!(
            initial_lollipop(&star),
            Err(EngineError::Precondition { min_degree: 1, required: 2 })
        ));
    }
}
