//! Cyclic-minor models: a host cycle cut into consecutive arcs whose
//! contraction contains a target graph, with the target's Hamiltonian cycle
//! following the arc order.
//!
//! Only cycle edges are contracted, and a Hamiltonian subgraph may drop any
//! chord, so extra host edges between arcs never invalidate a model. Cycle
//! edges between consecutive arcs cannot be dropped, so the target must
//! contain the edge between consecutive target-cycle vertices.

mod bipartite;
mod clique;
mod grid;

use serde::{Deserialize, Serialize};

pub use bipartite::{k6_from_bipartite, kll_prime_graph, kll_prime_model};
pub use clique::{k3_model, k4_from_graph, k4_model, k5_model, shortest_cycle};
pub use grid::{chord_matrix, grid_block_partition, grid_block_partition_with, BoolMatrix, GridPartition, GridSearch};

use crate::contraction::{plan_all, ContractionReport};
use crate::error::MinorError;
use crate::graph::{Graph, Vertex};
use crate::lollipop::find_dense_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetKind {
    Clique(usize),
    /// `K_{ℓ,ℓ}` plus a path on each side.
    KllPrime(usize),
    Other,
}

impl TargetKind {
    pub fn label(&self) -> String {
        match self {
            TargetKind::Clique(r) => format!("K{r}"),
            TargetKind::KllPrime(_) => "K'll".to_string(),
            TargetKind::Other => "custom".to_string(),
        }
    }

    pub fn l(&self) -> Option<usize> {
        match self {
            TargetKind::KllPrime(l) => Some(*l),
            _ => None,
        }
    }

    pub fn graph(&self) -> Option<Graph> {
        match *self {
            TargetKind::Clique(r) => Some(Graph::complete(r)),
            TargetKind::KllPrime(l) => Some(kll_prime_graph(l)),
            TargetKind::Other => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Constructive,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicMinorModel {
    pub host: Graph,
    pub host_cycle: Vec<Vertex>,
    /// Contiguous arcs in cycle order.
    pub arcs: Vec<Vec<Vertex>>,
    pub target: Graph,
    /// `arcs[i]` is the branch set of target vertex `target_cycle[i]`.
    pub target_cycle: Vec<Vertex>,
    pub kind: TargetKind,
    pub origin: Origin,
}

/// Outcome of a constructive search that may legitimately fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found { model: CyclicMinorModel, route: Route },
    /// `exact` means the search was exhaustive for its configuration shape.
    NotFound { exact: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Direct construction.
    Direct,
    /// Square block partition of the chord matrix.
    GridPartition,
    /// Scan over rotations and split points for an X-band / Y-band layout.
    BipartiteScan,
}

impl MinorSearch {
    pub fn model(&self) -> Option<&CyclicMinorModel> {
        match self {
            MinorSearch::Found { model, .. } => Some(model),
            MinorSearch::NotFound { .. } => None,
        }
    }
}

/// Checks a model. Structural defects are errors; a well-formed model
/// whose contraction misses a target edge yields `Ok(false)`.
pub fn verify_model(m: &CyclicMinorModel) -> Result<bool, MinorError> {
    let malformed = |msg: String| Err(MinorError::Malformed(msg));
    let host = &m.host;
    if !host.is_cycle(&m.host_cycle) {
        return malformed("host_cycle is not a cycle of the host".into());
    }
    let r = m.arcs.len();
    if r < 2 || m.arcs.iter().any(Vec::is_empty) {
        return malformed(format!("need at least two non-empty arcs, got {r}"));
    }
    if m.target_cycle.len() != r || m.target.n() != r {
        return malformed(format!(
            "{r} arcs for a target on {} vertices with a cycle of length {}",
            m.target.n(),
            m.target_cycle.len()
        ));
    }
    let mut seen = vec![false; r];
    for &x in &m.target_cycle {
        if x >= r || std::mem::replace(&mut seen[x], true) {
            return malformed("target_cycle is not a permutation of the target vertices".into());
        }
    }
    let flat: Vec<Vertex> = m.arcs.iter().flatten().copied().collect();
    let t = m.host_cycle.len();
    if flat.len() != t {
        return malformed("arcs do not cover the host cycle exactly".into());
    }
    let Some(offset) = m.host_cycle.iter().position(|&v| v == flat[0]) else {
        return malformed("arcs use a vertex off the host cycle".into());
    };
    if (0..t).any(|i| flat[i] != m.host_cycle[(offset + i) % t]) {
        return malformed("arcs are not consecutive stretches of the host cycle in order".into());
    }

    for i in 0..r {
        let (a, b) = (m.target_cycle[i], m.target_cycle[(i + 1) % r]);
        if (r > 2 || i == 0) && !m.target.has_edge(a, b) {
            return Ok(false);
        }
    }
    let mut arc_of_target = vec![0; r];
    for (i, &x) in m.target_cycle.iter().enumerate() {
        arc_of_target[x] = i;
    }
    let mut arc_of_host = vec![usize::MAX; host.n()];
    for (i, arc) in m.arcs.iter().enumerate() {
        for &v in arc {
            arc_of_host[v] = i;
        }
    }
    let mut joined = vec![false; r * r];
    for (u, v) in host.edges() {
        let (a, b) = (arc_of_host[u], arc_of_host[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            joined[a * r + b] = true;
            joined[b * r + a] = true;
        }
    }
    Ok(m.target
        .edges()
        .all(|(x, y)| joined[arc_of_target[x] * r + arc_of_target[y]]))
}

/// Groups consecutive positions of `cycle` with equal labels into arcs.
/// Returns the arcs (starting at a label boundary) and the label of each.
pub(crate) fn arcs_from_labels(cycle: &[Vertex], labels: &[usize]) -> (Vec<Vec<Vertex>>, Vec<usize>) {
    let t = cycle.len();
    let start = (0..t).find(|&i| labels[i] != labels[(i + t - 1) % t]).unwrap_or(0);
    let mut arcs: Vec<Vec<Vertex>> = Vec::new();
    let mut order = Vec::new();
    for step in 0..t {
        let i = (start + step) % t;
        if step == 0 || labels[i] != labels[(i + t - 1) % t] {
            arcs.push(Vec::new());
            order.push(labels[i]);
        }
        arcs.last_mut().expect("pushed above").push(cycle[i]);
    }
    (arcs, order)
}

/// Builds a model of `kind` from per-position labels on `cycle`.
pub(crate) fn model_from_labels(
    host: &Graph,
    cycle: &[Vertex],
    labels: &[usize],
    kind: TargetKind,
) -> CyclicMinorModel {
    let (arcs, target_cycle) = arcs_from_labels(cycle, labels);
    CyclicMinorModel {
        host: host.clone(),
        host_cycle: cycle.to_vec(),
        arcs,
        target: kind.graph().expect("constructive targets are named"),
        target_cycle,
        kind,
        origin: Origin::Constructive,
    }
}

/// Rewrites a model on the quotient of a contraction report as a model on
/// the original graph: each quotient vertex expands into its plan arc.
pub fn lift_model(g: &Graph, report: &ContractionReport, m: &CyclicMinorModel) -> CyclicMinorModel {
    debug_assert_eq!(m.host_cycle, report.quotient_cycle);
    let plan_arcs = report.arcs();
    let arcs = m
        .arcs
        .iter()
        .map(|arc| arc.iter().flat_map(|&q| plan_arcs[q].iter().copied()).collect())
        .collect();
    CyclicMinorModel {
        host: g.clone(),
        host_cycle: report.cycle.clone(),
        arcs,
        target: m.target.clone(),
        target_cycle: m.target_cycle.clone(),
        kind: m.kind,
        origin: m.origin,
    }
}

/// End-to-end construction of a clique or `K'_{ℓ,ℓ}` minor from a raw
/// graph: dense cycle, contraction plans, then the matching constructor on
/// a plan quotient, lifted back to `g`.
pub fn build_minor(g: &Graph, kind: TargetKind) -> Result<MinorSearch, MinorError> {
    let direct = |model: CyclicMinorModel| MinorSearch::Found {
        model,
        route: Route::Direct,
    };
    match kind {
        TargetKind::Clique(3) => return k3_model(g).map(direct),
        TargetKind::Clique(4) => return k4_from_graph(g).map(direct),
        TargetKind::Clique(5 | 6) | TargetKind::KllPrime(_) => {}
        other => {
            return Err(MinorError::Precondition(format!(
                "no constructor for target {}",
                other.label()
            )))
        }
    }
    let reports = pipeline_reports(g)?;
    for report in &reports {
        let q = &report.quotient;
        let cycle = &report.quotient_cycle;
        let attempt = match kind {
            TargetKind::Clique(5) => {
                if q.edge_count() < 3 * q.n() {
                    continue;
                }
                MinorSearch::Found {
                    model: k5_model(q, cycle)?,
                    route: Route::Direct,
                }
            }
            TargetKind::Clique(6) => k6_from_bipartite(q, cycle)?,
            TargetKind::KllPrime(l) => kll_prime_model(q, cycle, l)?,
            _ => unreachable!("filtered above"),
        };
        match attempt {
            MinorSearch::Found { model, route } => {
                let lifted = lift_model(g, report, &model);
                assert!(verify_model(&lifted)?, "lifted model must verify");
                return Ok(MinorSearch::Found { model: lifted, route });
            }
            MinorSearch::NotFound { .. } => {}
        }
    }
    if kind == TargetKind::Clique(5) {
        return Err(MinorError::Precondition(
            "no contraction quotient reaches average degree 6".into(),
        ));
    }
    // Only a few cycles were examined, so failure proves nothing.
    Ok(MinorSearch::NotFound { exact: false })
}

/// `G_2`, `G_0`, `G_1` for the largest `k` the graph supports.
fn pipeline_reports(g: &Graph) -> Result<Vec<ContractionReport>, MinorError> {
    let k = g.min_degree().unwrap_or(0);
    if k < 2 {
        return Err(MinorError::Precondition(format!("minimum degree {k} is below 2")));
    }
    let cert = find_dense_cycle(g, k).map_err(|e| MinorError::Precondition(e.to_string()))?;
    let (r0, r1, r2) = plan_all(g, &cert).map_err(|e| MinorError::Precondition(e.to_string()))?;
    Ok(vec![r2, r0, r1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singleton_model(host: Graph, target: Graph) -> CyclicMinorModel {
        let n = host.n();
        CyclicMinorModel {
            host,
            host_cycle: (0..n).collect(),
            arcs: (0..n).map(|v| vec![v]).collect(),
            target_cycle: (0..target.n()).collect(),
            target,
            kind: TargetKind::Other,
            origin: Origin::Constructive,
        }
    }

    #[test]
    fn identity_k4() {
        assert!(verify_model(&singleton_model(Graph::complete(4), Graph::complete(4))).unwrap());
    }

    #[test]
    fn c6_pairs_give_triangle() {
        let m = CyclicMinorModel {
            host: Graph::cycle(6).unwrap(),
            host_cycle: (0..6).collect(),
            arcs: vec![vec![1, 2], vec![3, 4], vec![5, 0]],
            target: Graph::complete(3),
            target_cycle: vec![0, 1, 2],
            kind: TargetKind::Clique(3),
            origin: Origin::Constructive,
        };
        assert!(verify_model(&m).unwrap());
    }

    #[test]
    fn missing_chord_is_false_and_surplus_is_fine() {
        // C4 cannot supply the diagonals of K4.
        assert!(!verify_model(&singleton_model(Graph::cycle(4).unwrap(), Graph::complete(4))).unwrap());
        // K4 host, C4 target: the diagonals are simply not used.
        assert!(verify_model(&singleton_model(Graph::complete(4), Graph::cycle(4).unwrap())).unwrap());
    }

    #[test]
    fn malformed_models_error() {
        let mut m = singleton_model(Graph::complete(4), Graph::complete(4));
        m.arcs = vec![vec![0, 2], vec![1], vec![3], vec![]];
        assert!(verify_model(&m).is_err());
        m.arcs = vec![vec![0, 2], vec![1], vec![3]];
        m.target = Graph::complete(3);
        m.target_cycle = vec![0, 1, 2];
        assert!(verify_model(&m).is_err());
        m.arcs = vec![vec![0], vec![1], vec![2]];
        assert!(verify_model(&m).is_err(), "vertex 3 is left uncovered");
    }

    #[test]
    fn rotated_arcs_are_accepted() {
        let m = CyclicMinorModel {
            host: Graph::complete(5),
            host_cycle: (0..5).collect(),
            arcs: vec![vec![3, 4], vec![0], vec![1, 2]],
            target: Graph::complete(3),
            target_cycle: vec![2, 0, 1],
            kind: TargetKind::Clique(3),
            origin: Origin::Constructive,
        };
        assert!(verify_model(&m).unwrap());
    }

    #[test]
    fn labels_to_arcs_wraps() {
        let (arcs, order) = arcs_from_labels(&[10, 11, 12, 13, 14], &[2, 0, 0, 1, 2]);
        assert_eq!(arcs, vec![vec![11, 12], vec![13], vec![14, 10]]);
        assert_eq!(order, vec![0, 1, 2]);
    }
}
