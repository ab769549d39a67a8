use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::closure::{active_closure, required_active_count, ActiveClosure, ClosureOutcome};
use super::rotation::CycleIndex;
use super::{initial_lollipop_from, Lollipop};
use crate::error::EngineError;
use crate::graph::{Edge, Graph, Vertex};

/// `(k+1)(k-2)/2`, the guaranteed chord count for minimum degree `k ≥ 2`.
pub fn chord_lower_bound(k: usize) -> usize {
    (k + 1) * k.saturating_sub(2) / 2
}

/// A cycle with at least `k + 1` vertices of cycle-degree `k`, together with
/// the closure that proves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseCycleCertificate {
    pub k: usize,
    /// Stick of the final lollipop, ending at `cycle[0]`.
    pub path: Vec<Vertex>,
    pub cycle: Vec<Vertex>,
    /// Active vertices, plus `c_1` when it has `k` neighbours on the cycle;
    /// ascending.
    pub high_degree_vertices: Vec<Vertex>,
    pub chords: Vec<Edge>,
    pub closure: ActiveClosure,
    /// Number of closure rounds, one per lollipop tried.
    pub iterations: usize,
}

impl DenseCycleCertificate {
    pub fn lollipop(&self) -> Lollipop {
        Lollipop {
            path: self.path.clone(),
            cycle: self.cycle.clone(),
        }
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if !g.is_cycle(&self.cycle) {
            return Err("cycle is not a cycle of the graph".into());
        }
        let index = CycleIndex::new(g.n(), &self.cycle);
        let mut listed = self.high_degree_vertices.clone();
        listed.sort_unstable();
        listed.dedup();
        if listed.len() != self.high_degree_vertices.len() {
            return Err("high-degree list has duplicates".into());
        }
        if listed.len() < self.k + 1 {
            return Err(format!(
                "{} high-degree vertices listed, {} required",
                listed.len(),
                self.k + 1
            ));
        }
        for &v in &listed {
            if !index.contains(v) {
                return Err(format!("vertex {v} is not on the cycle"));
            }
            let d = g.neighbors(v).iter().filter(|&&x| index.contains(x)).count();
            if d < self.k {
                return Err(format!("vertex {v} has only {d} neighbours on the cycle"));
            }
        }
        if g.chords_of_cycle(&self.cycle) != self.chords {
            return Err("chord list does not match the graph".into());
        }
        if self.chords.len() < chord_lower_bound(self.k) {
            return Err(format!(
                "{} chords, fewer than {}",
                self.chords.len(),
                chord_lower_bound(self.k)
            ));
        }
        Ok(())
    }
}

/// Dense-cycle search from the lollipop grown at vertex 0.
pub fn find_dense_cycle(g: &Graph, k: usize) -> Result<DenseCycleCertificate, EngineError> {
    find_dense_cycle_from(g, k, 0)
}

pub fn find_dense_cycle_from(
    g: &Graph,
    k: usize,
    start: Vertex,
) -> Result<DenseCycleCertificate, EngineError> {
    let min_degree = g.min_degree().unwrap_or(0);
    if k < 2 || min_degree < k {
        return Err(EngineError::Precondition {
            min_degree,
            required: k.max(2),
        });
    }
    let limit = (g.n() * g.n()).max(1);
    let mut lollipop = initial_lollipop_from(g, start)?;
    for iteration in 1..=limit {
        match active_closure(g, &lollipop)? {
            ClosureOutcome::Improvement(better) => {
                assert!(better.rank() > lollipop.rank(), "improvement must make progress");
                lollipop = better;
            }
            ClosureOutcome::Closed(closure) => {
                let required = required_active_count(g, &lollipop.cycle, k);
                if closure.active.len() < required {
                    return Err(EngineError::Shortfall {
                        required,
                        found: closure.active.len(),
                        cycle: lollipop.cycle.clone(),
                        closure: Box::new(closure),
                    });
                }
                return Ok(certificate(g, k, lollipop, closure, iteration));
            }
        }
    }
    Err(EngineError::IterationLimit { limit })
}

fn certificate(
    g: &Graph,
    k: usize,
    lollipop: Lollipop,
    closure: ActiveClosure,
    iterations: usize,
) -> DenseCycleCertificate {
    let index = CycleIndex::new(g.n(), &lollipop.cycle);
    let on_cycle = |v: Vertex| g.neighbors(v).iter().filter(|&&x| index.contains(x)).count();
    let mut high: Vec<Vertex> = closure.active.clone();
    for &u in &high {
        // Active ends see only the cycle, so their full degree counts.
        assert!(on_cycle(u) == g.degree(u) && g.degree(u) >= k);
    }
    let c1 = lollipop.c1();
    if on_cycle(c1) >= k {
        high.push(c1);
    }
    high.sort_unstable();
    let chords = g.chords_of_cycle(&lollipop.cycle);
    assert!(high.len() > k && chords.len() >= chord_lower_bound(k));
    DenseCycleCertificate {
        k,
        path: lollipop.path,
        cycle: lollipop.cycle,
        high_degree_vertices: high,
        chords,
        closure,
        iterations,
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LemmaViolation {
    #[error("witness for {end} is not a Hamiltonian path of G[C] from c1")]
    NotHamiltonian { end: Vertex },
    #[error("witness stored under {key} ends elsewhere")]
    WrongEnd { key: Vertex },
    #[error("replaying the derivation of {end} gives a different path")]
    Replay { end: Vertex },
    #[error("c1 is marked active")]
    ActiveC1,
    #[error("active vertex {vertex} has neighbour {neighbor} off the cycle")]
    LeavesCycle { vertex: Vertex, neighbor: Vertex },
    #[error("passive edge {edge:?} has an active end or is not a cycle edge")]
    BadPassiveEdge { edge: Edge },
    #[error("witness for {end} does not traverse passive edge {edge:?}")]
    SkipsPassiveEdge { end: Vertex, edge: Edge },
    #[error("active {vertex} has {count} neighbours on the passive run {run:?}")]
    RunNeighbours {
        vertex: Vertex,
        run: Vec<Vertex>,
        count: usize,
    },
    #[error("active {vertex} is adjacent to {neighbor}, an inner vertex of passive run {run:?}")]
    InnerRunNeighbour {
        vertex: Vertex,
        neighbor: Vertex,
        run: Vec<Vertex>,
    },
}

/// Structural facts every closure must satisfy: witnesses are valid and
/// replayable, active ends see only the cycle, every witness walks through
/// every passive edge, and an active vertex touches a maximal passive run in
/// at most one vertex, which is an end of the run.
pub fn check_closure_lemmas(g: &Graph, closure: &ActiveClosure) -> Result<(), LemmaViolation> {
    let cycle = &closure.cycle;
    let t = cycle.len();
    let index = CycleIndex::new(g.n(), cycle);
    if closure.is_active(closure.c1()) {
        return Err(LemmaViolation::ActiveC1);
    }
    for &e in &closure.passive_edges {
        if !index.is_cycle_edge(e.0, e.1) || closure.is_active(e.0) || closure.is_active(e.1) {
            return Err(LemmaViolation::BadPassiveEdge { edge: e });
        }
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (&key, q) in &closure.witnesses {
        let seq = &q.sequence;
        if seq.len() != t || seq[0] != cycle[0] || !g.is_path(seq) || seq.iter().any(|&v| !index.contains(v)) {
            return Err(LemmaViolation::NotHamiltonian { end: key });
        }
        if q.end() != key {
            return Err(LemmaViolation::WrongEnd { key });
        }
        if q.replay(cycle).ok().as_ref() != Some(seq) {
            return Err(LemmaViolation::Replay { end: key });
        }
        if let Some(&x) = g.neighbors(key).iter().find(|&&x| !index.contains(x)) {
            return Err(LemmaViolation::LeavesCycle { vertex: key, neighbor: x });
        }
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        for &e in &closure.passive_edges {
            if pos[e.0].abs_diff(pos[e.1]) != 1 {
                return Err(LemmaViolation::SkipsPassiveEdge { end: key, edge: e });
            }
        }
    }

    for run in passive_runs(closure) {
        let mut in_run = vec![false; g.n()];
        for &v in &run {
            in_run[v] = true;
        }
        for &u in &closure.active {
            let hits: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&x| in_run[x]).collect();
            if hits.len() > 1 {
                return Err(LemmaViolation::RunNeighbours {
                    vertex: u,
                    run,
                    count: hits.len(),
                });
            }
            if let Some(&x) = hits.first() {
                if x != run[0] && x != run[run.len() - 1] {
                    return Err(LemmaViolation::InnerRunNeighbour {
                        vertex: u,
                        neighbor: x,
                        run,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Maximal subpaths of the cycle made of passive edges (at least one edge).
fn passive_runs(closure: &ActiveClosure) -> Vec<Vec<Vertex>> {
    let cycle = &closure.cycle;
    let t = cycle.len();
    let passive = |i: usize| {
        let (a, b) = (cycle[i % t], cycle[(i + 1) % t]);
        !closure.is_active(a) && !closure.is_active(b)
    };
    // Edge c_1 c_2 is never passive because c_2 is active, so runs never
    // wrap past position 0.
    let mut runs = Vec::new();
    let mut i = 0;
    while i < t {
        if passive(i) {
            let mut run = vec![cycle[i]];
            while i < t && passive(i) {
                run.push(cycle[(i + 1) % t]);
                i += 1;
            }
            runs.push(run);
        } else {
            i += 1;
        }
    }
    runs
}
