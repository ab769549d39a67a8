use serde::{Deserialize, Serialize};

use crate::error::EngineError;
use crate::graph::{Graph, Vertex};

/// The two orientations of the cycle that start the rotation system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Seed {
    /// `c_1 c_2 … c_t`, ending at `c_t`.
    Forward,
    /// `c_1 c_t … c_2`, ending at `c_2`.
    Backward,
}

impl Seed {
    pub fn path(self, cycle: &[Vertex]) -> Vec<Vertex> {
        match self {
            Seed::Forward => cycle.to_vec(),
            Seed::Backward => std::iter::once(cycle[0])
                .chain(cycle[1..].iter().rev().copied())
                .collect(),
        }
    }
}

/// One application of the rotation rule: the chord `u v` of the current
/// path (with `u` its end) and the pivot `w`, the successor of `v`, which
/// becomes the new end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RotationStep {
    pub chord: (Vertex, Vertex),
    pub pivot: Vertex,
}

/// Hamiltonian path of `G[C]` from `c_1`, with the rotations that produced
/// it from one of the two seeds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WitnessPath {
    pub sequence: Vec<Vertex>,
    pub seed: Seed,
    pub derivation: Vec<RotationStep>,
}

impl WitnessPath {
    pub fn seed(cycle: &[Vertex], seed: Seed) -> Self {
        WitnessPath {
            sequence: seed.path(cycle),
            seed,
            derivation: Vec::new(),
        }
    }

    pub fn end(&self) -> Vertex {
        *self.sequence.last().expect("witness paths are non-empty")
    }

    /// Rebuilds the sequence from the seed by re-applying every step.
    pub fn replay(&self, cycle: &[Vertex]) -> Result<Vec<Vertex>, EngineError> {
        let mut seq = self.seed.path(cycle);
        for step in &self.derivation {
            let (u, v) = step.chord;
            if seq.last() != Some(&u) {
                return Err(EngineError::InvalidPath(format!(
                    "step {step:?} does not start at the path end"
                )));
            }
            let i = seq
                .iter()
                .position(|&x| x == v)
                .ok_or_else(|| EngineError::InvalidPath(format!("{v} is not on the path")))?;
            if seq.get(i + 1) != Some(&step.pivot) {
                return Err(EngineError::InvalidPath(format!(
                    "pivot of step {step:?} is not the successor of {v}"
                )));
            }
            seq[i + 1..].reverse();
        }
        Ok(seq)
    }
}

/// Positions on a cycle, for O(1) membership and cycle-edge tests.
#[derive(Clone, Debug)]
pub struct CycleIndex {
    pos: Vec<usize>,
    len: usize,
}

impl CycleIndex {
    pub fn new(n: usize, cycle: &[Vertex]) -> Self {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        CycleIndex {
            pos,
            len: cycle.len(),
        }
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.pos[v] != usize::MAX
    }

    #[inline]
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.contains(v).then_some(self.pos[v])
    }

    #[inline]
    pub fn is_cycle_edge(&self, a: Vertex, b: Vertex) -> bool {
        let (i, j) = (self.pos[a], self.pos[b]);
        if i == usize::MAX || j == usize::MAX {
            return false;
        }
        let d = i.abs_diff(j);
        d == 1 || d == self.len - 1
    }
}

/// Applies the rotation rule to `q = c_1 … u` along the chord `u v`: with
/// `w` the successor of `v` on `q`, returns `c_1 … v u … w`.
pub fn rotate(
    g: &Graph,
    cycle: &[Vertex],
    q: &WitnessPath,
    chord: (Vertex, Vertex),
) -> Result<WitnessPath, EngineError> {
    rotate_with(g, &CycleIndex::new(g.n(), cycle), q, chord)
}

pub(crate) fn rotate_with(
    g: &Graph,
    index: &CycleIndex,
    q: &WitnessPath,
    (u, v): (Vertex, Vertex),
) -> Result<WitnessPath, EngineError> {
    let seq = &q.sequence;
    if u != q.end() {
        return Err(EngineError::InvalidPath(format!(
            "chord must start at the path end {}, got {u}",
            q.end()
        )));
    }
    if v >= g.n() || !g.has_edge(u, v) {
        return Err(EngineError::InvalidPath(format!("{u}{v} is not an edge")));
    }
    let i = seq
        .iter()
        .position(|&x| x == v)
        .ok_or_else(|| EngineError::InvalidPath(format!("{v} is not on the path")))?;
    if i + 2 == seq.len() {
        return Err(EngineError::InvalidPath(format!("{u}{v} is a path edge, not a chord")));
    }
    let w = seq[i + 1];
    if !index.is_cycle_edge(v, w) {
        return Err(EngineError::RuleNotApplicable(format!(
            "{v}{w} is not an edge of the cycle"
        )));
    }
    let mut sequence = seq.clone();
    sequence[i + 1..].reverse();
    let mut derivation = q.derivation.clone();
    derivation.push(RotationStep {
        chord: (u, v),
        pivot: w,
    });
    Ok(WitnessPath {
        sequence,
        seed: q.seed,
        derivation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const C5: [Vertex; 5] = [0, 1, 2, 3, 4];

    #[test]
    fn k5_rotation_matches_rule() {
        let g = Graph::complete(5);
        let q = WitnessPath::seed(&C5, Seed::Forward);
        let r = rotate(&g, &C5, &q, (4, 1)).unwrap();
        assert_eq!(r.sequence, vec![0, 1, 4, 3, 2]);
        assert_eq!(r.derivation, vec![RotationStep { chord: (4, 1), pivot: 2 }]);
    }

    #[test]
    fn closing_chord_reverses_the_seed() {
        // Chord c_t c_1 of the forward seed pivots at c_2 and yields the
        // backward seed, so the first level already contains the second.
        let g = Graph::complete(5);
        let q = WitnessPath::seed(&C5, Seed::Forward);
        let r = rotate(&g, &C5, &q, (4, 0)).unwrap();
        assert_eq!(r.sequence, Seed::Backward.path(&C5));
    }

    #[test]
    fn pivot_off_cycle_is_not_applicable() {
        let g = Graph::complete(5);
        let q = WitnessPath {
            sequence: vec![0, 1, 3, 2, 4],
            seed: Seed::Forward,
            derivation: Vec::new(),
        };
        // v = 1, w = 3 and 1-3 is a chord of C, not a cycle edge.
        assert!(matches!(
            rotate(&g, &C5, &q, (4, 1)),
            Err(EngineError::RuleNotApplicable(_))
        ));
    }

    #[test]
    fn path_edge_and_non_end_are_rejected() {
        let g = Graph::complete(5);
        let q = WitnessPath::seed(&C5, Seed::Forward);
        assert!(matches!(rotate(&g, &C5, &q, (4, 3)), Err(EngineError::InvalidPath(_))));
        assert!(matches!(rotate(&g, &C5, &q, (2, 0)), Err(EngineError::InvalidPath(_))));
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(rotate(&c5, &C5, &q, (4, 2)), Err(EngineError::InvalidPath(_))));
    }

    #[test]
    fn replay_round_trips() {
        let g = Graph::complete(6);
        let cycle = [0, 1, 2, 3, 4, 5];
        let mut q = WitnessPath::seed(&cycle, Seed::Backward);
        for _ in 0..6 {
            let u = q.end();
            let next = g
                .neighbors(u)
                .iter()
                .find_map(|&v| rotate(&g, &cycle, &q, (u, v)).ok());
            match next {
                Some(r) => q = r,
                None => break,
            }
            assert_eq!(q.replay(&cycle).unwrap(), q.sequence);
        }
        assert!(!q.derivation.is_empty());
    }
}
