use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::rotation::{rotate_with, CycleIndex, Seed, WitnessPath};
use super::{lollipop_from_maximal_path, maximal_path_extend, Lollipop};
use crate::error::EngineError;
use crate::graph::{edge, Edge, Graph, Vertex};

/// Fixpoint of the pruned rotation system on the cycle of a lollipop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActiveClosure {
    /// `c_1 … c_t`.
    pub cycle: Vec<Vertex>,
    /// Active vertices in discovery order; never contains `c_1`.
    pub active: Vec<Vertex>,
    /// One witness per active vertex, ending at that vertex.
    pub witnesses: BTreeMap<Vertex, WitnessPath>,
    /// Cycle edges with both ends non-active, in cycle order.
    pub passive_edges: Vec<Edge>,
}

impl ActiveClosure {
    pub fn is_active(&self, v: Vertex) -> bool {
        self.witnesses.contains_key(&v)
    }

    pub fn c1(&self) -> Vertex {
        self.cycle[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureOutcome {
    /// A lollipop with more vertices, or as many and a longer cycle.
    Improvement(Lollipop),
    Closed(ActiveClosure),
}

/// `k` when `c_1` already has `k` neighbours on the cycle, `k + 1` otherwise.
pub fn required_active_count(g: &Graph, cycle: &[Vertex], k: usize) -> usize {
    let index = CycleIndex::new(g.n(), cycle);
    let d_c1 = g.neighbors(cycle[0]).iter().filter(|&&x| index.contains(x)).count();
    if d_c1 >= k {
        k
    } else {
        k + 1
    }
}

/// Runs the pruned rotation system from the two seeds of `l`'s cycle.
///
/// Paths are processed FIFO with the forward seed first; chords are scanned
/// in ascending id and a pivot is only added when it is not yet active.
/// As soon as a newly active vertex has a neighbour off the cycle, the
/// better lollipop that neighbour provides is returned instead.
pub fn active_closure(g: &Graph, l: &Lollipop) -> Result<ClosureOutcome, EngineError> {
    l.validate(g)?;
    let cycle = &l.cycle;
    let index = CycleIndex::new(g.n(), cycle);
    let mut witnesses: BTreeMap<Vertex, WitnessPath> = BTreeMap::new();
    let mut active = Vec::new();
    let mut queue: VecDeque<Vertex> = VecDeque::new();

    for seed in [Seed::Forward, Seed::Backward] {
        let q = WitnessPath::seed(cycle, seed);
        if let Some(better) = leaves_cycle(g, l, &index, &q)? {
            return Ok(ClosureOutcome::Improvement(better));
        }
        let w = q.end();
        active.push(w);
        witnesses.insert(w, q);
        queue.push_back(w);
    }

    let mut pos_in_q = vec![usize::MAX; g.n()];
    while let Some(u) = queue.pop_front() {
        let q = witnesses[&u].clone();
        for (i, &x) in q.sequence.iter().enumerate() {
            pos_in_q[x] = i;
        }
        let last = q.sequence.len() - 1;
        for &v in g.neighbors(u) {
            let i = pos_in_q[v];
            // Active ends only have neighbours on the cycle.
            if i == usize::MAX || i + 1 >= last {
                continue;
            }
            let w = q.sequence[i + 1];
            if witnesses.contains_key(&w) || !index.is_cycle_edge(v, w) {
                continue;
            }
            let next = rotate_with(g, &index, &q, (u, v))?;
            if let Some(better) = leaves_cycle(g, l, &index, &next)? {
                return Ok(ClosureOutcome::Improvement(better));
            }
            active.push(w);
            witnesses.insert(w, next);
            queue.push_back(w);
        }
        for &x in &q.sequence {
            pos_in_q[x] = usize::MAX;
        }
    }

    let t = cycle.len();
    let passive_edges = (0..t)
        .map(|i| (cycle[i], cycle[(i + 1) % t]))
        .filter(|&(a, b)| !witnesses.contains_key(&a) && !witnesses.contains_key(&b))
        .map(|(a, b)| edge(a, b))
        .collect();
    Ok(ClosureOutcome::Closed(ActiveClosure {
        cycle: cycle.clone(),
        active,
        witnesses,
        passive_edges,
    }))
}

/// If the end `u` of the Hamiltonian path `q` of `G[C]` has a neighbour `x`
/// off the cycle, builds the better lollipop it yields: with `x` on the
/// stick, the cycle `x P c_1 q u x` is longer; otherwise the path
/// `p_1 P c_1 q u x` extends to a lollipop on strictly more vertices.
fn leaves_cycle(
    g: &Graph,
    l: &Lollipop,
    index: &CycleIndex,
    q: &WitnessPath,
) -> Result<Option<Lollipop>, EngineError> {
    let u = q.end();
    let Some(&x) = g.neighbors(u).iter().find(|&&x| !index.contains(x)) else {
        return Ok(None);
    };
    let better = if let Some(i) = l.path.iter().position(|&p| p == x) {
        let mut cycle = l.path[i..].to_vec();
        cycle.extend_from_slice(&q.sequence[1..]);
        Lollipop {
            path: l.path[..=i].to_vec(),
            cycle,
        }
    } else {
        let mut path = l.path.clone();
        path.extend_from_slice(&q.sequence[1..]);
        path.push(x);
        let path = maximal_path_extend(g, &path)?;
        match lollipop_from_maximal_path(g, &path) {
            Ok(lp) => lp,
            // Only reachable below minimum degree 2: close at the other end.
            Err(_) => {
                let reversed: Vec<Vertex> = path.iter().rev().copied().collect();
                lollipop_from_maximal_path(g, &reversed)?
            }
        }
    };
    debug_assert!(better.validate(g).is_ok());
    debug_assert!(better.rank() > l.rank());
    Ok(Some(better))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed(outcome: ClosureOutcome) -> ActiveClosure {
        match outcome {
            ClosureOutcome::Closed(c) => c,
            ClosureOutcome::Improvement(l) => panic!("unexpected improvement {l:?}"),
        }
    }

    #[test]
    fn pendant_vertex_enlarges_lollipop() {
        // Triangle 0 1 2 with pendant 3 at vertex 2.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let l = Lollipop { path: vec![0], cycle: vec![0, 1, 2] };
        match active_closure(&g, &l).unwrap() {
            ClosureOutcome::Improvement(b) => {
                b.validate(&g).unwrap();
                assert_eq!(b.vertex_count(), 4);
            }
            other => panic!("expected improvement, got {other:?}"),
        }
    }

    #[test]
    fn stick_neighbour_lengthens_cycle() {
        // Stick 0 1 2, triangle 2 3 4, extra edge 4-1.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 1)]).unwrap();
        let l = Lollipop { path: vec![0, 1, 2], cycle: vec![2, 3, 4] };
        match active_closure(&g, &l).unwrap() {
            ClosureOutcome::Improvement(b) => {
                assert_eq!(b.path, vec![0, 1]);
                assert_eq!(b.cycle, vec![1, 2, 3, 4]);
            }
            other => panic!("expected improvement, got {other:?}"),
        }
    }

    #[test]
    fn k6_everything_active() {
        let g = Graph::complete(6);
        let l = Lollipop { path: vec![0], cycle: (0..6).collect() };
        let c = closed(active_closure(&g, &l).unwrap());
        let mut a = c.active.clone();
        a.sort_unstable();
        assert_eq!(a, vec![1, 2, 3, 4, 5]);
        assert!(c.passive_edges.is_empty());
        for (&w, q) in &c.witnesses {
            assert_eq!(q.end(), w);
            assert_eq!(q.replay(&c.cycle).unwrap(), q.sequence);
        }
    }

    #[test]
    fn chordless_cycle_has_only_seed_ends() {
        let g = Graph::cycle(7).unwrap();
        let l = Lollipop { path: vec![0], cycle: (0..7).collect() };
        let c = closed(active_closure(&g, &l).unwrap());
        assert_eq!(c.active, vec![6, 1]);
        assert_eq!(c.passive_edges, vec![(2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn required_count_rule() {
        assert_eq!(required_active_count(&Graph::cycle(6).unwrap(), &[0, 1, 2, 3, 4, 5], 2), 2);
        assert_eq!(required_active_count(&Graph::complete(6), &[0, 1, 2, 3, 4, 5], 5), 5);
        // c_1 with three neighbours on the cycle, k = 5.
        let g = Graph::from_edges(
            6,
            (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 3)]),
        )
        .unwrap();
        assert_eq!(required_active_count(&g, &[0, 1, 2, 3, 4, 5], 5), 6);
    }
}
