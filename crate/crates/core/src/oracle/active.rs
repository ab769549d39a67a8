use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{guard, Limits};
use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::lollipop::{Lollipop, RotationStep, Seed, WitnessPath};

/// Least fixpoint of the rotation rule on a lollipop cycle with no pruning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActiveEnumeration {
    pub cycle: Vec<Vertex>,
    /// Every reachable path once, in breadth-first discovery order.
    pub paths: Vec<WitnessPath>,
    /// `|S_1|, |S_2|, …` up to the fixpoint.
    pub level_sizes: Vec<usize>,
}

impl ActiveEnumeration {
    /// Distinct path ends; `c_1` never is one.
    pub fn active_vertices(&self) -> Vec<Vertex> {
        let mut ends: Vec<Vertex> = self.paths.iter().map(WitnessPath::end).collect();
        ends.sort_unstable();
        ends.dedup();
        ends
    }

    pub fn contains(&self, seq: &[Vertex]) -> bool {
        self.paths.iter().any(|p| p.sequence == seq)
    }
}

/// `S_1` holds both orientations of the cycle from `c_1`; `S_{i+1}` adds
/// every rotation of a path in `S_i`. Only `G[C]` is consulted.
pub fn full_active_enumeration(g: &Graph, l: &Lollipop, limits: &Limits) -> Result<ActiveEnumeration, OracleError> {
    let cycle = &l.cycle;
    let t = cycle.len();
    guard("cycle length", t, limits.max_cycle_len)?;
    if t < 3 || (0..t).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % t])) {
        return Err(OracleError::Invalid("lollipop cycle is not a cycle of the graph".into()));
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let on_cycle_edge = |a: Vertex, b: Vertex| {
        let d = pos[a].abs_diff(pos[b]);
        d == 1 || d == t - 1
    };

    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut paths = Vec::new();
    for seed in [Seed::Forward, Seed::Backward] {
        let mut sequence = vec![cycle[0]];
        match seed {
            Seed::Forward => sequence.extend(&cycle[1..]),
            Seed::Backward => sequence.extend(cycle[1..].iter().rev()),
        }
        if seen.insert(sequence.clone()) {
            paths.push(WitnessPath { sequence, seed, derivation: Vec::new() });
        }
    }
    let mut level_sizes = vec![paths.len()];
    let mut frontier = 0..paths.len();
    loop {
        let mut next = Vec::new();
        for idx in frontier.clone() {
            let q: &WitnessPath = &paths[idx];
            let seq = &q.sequence;
            let u = seq[t - 1];
            for i in 0..t.saturating_sub(2) {
                let v = seq[i];
                let w = seq[i + 1];
                if !g.has_edge(u, v) || !on_cycle_edge(v, w) {
                    continue;
                }
                let mut s = seq[..=i].to_vec();
                s.extend(seq[i + 1..].iter().rev());
                if seen.insert(s.clone()) {
                    let mut derivation = q.derivation.clone();
                    derivation.push(RotationStep { chord: (u, v), pivot: w });
                    next.push(WitnessPath { sequence: s, seed: q.seed, derivation });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let start = paths.len();
        paths.extend(next);
        frontier = start..paths.len();
        level_sizes.push(paths.len());
    }
    Ok(ActiveEnumeration {
        cycle: cycle.clone(),
        paths,
        level_sizes,
    })
}
