use super::{Graph, Vertex};
use crate::error::GraphError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub degeneracy: usize,
    /// Vertices in the order they were peeled.
    pub elimination_order: Vec<Vertex>,
    /// Degeneracy bound implied by a chord budget, once one is supplied via
    /// [`DegeneracyReport::with_chord_budget`].
    pub corollary_bound: Option<usize>,
}

impl DegeneracyReport {
    pub fn with_chord_budget(mut self, chord_budget: u64) -> Self {
        self.corollary_bound = Some(corollary_bound(chord_budget));
        self
    }
}

/// Smallest integer `d >= (-1 + sqrt(9 + 8ℓ)) / 2`.
///
/// Squaring `2d + 1 >= sqrt(9 + 8ℓ)` gives the integer test
/// `d(d + 1) >= 2ℓ + 2`, so no floating point is involved.
pub fn corollary_bound(chord_budget: u64) -> usize {
    let target = 2 * chord_budget as u128 + 2;
    // Start from ⌊√target⌋ and adjust; the search is then a couple of steps.
    let mut d = (target as u64).isqrt() as u128;
    while d > 0 && (d - 1) * d >= target {
        d -= 1;
    }
    while d * (d + 1) < target {
        d += 1;
    }
    d as usize
}

/// Exact degeneracy by repeatedly removing a vertex of minimum residual
/// degree (bucket queue, ties broken by smallest id).
pub fn degeneracy(g: &Graph) -> Result<DegeneracyReport, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<Vertex>> = vec![Default::default(); max_deg + 1];
    for v in g.vertices() {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut best = 0;
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        best = best.max(low);
        removed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
            }
        }
        low = low.saturating_sub(1);
    }
    Ok(DegeneracyReport {
        degeneracy: best,
        elimination_order: order,
        corollary_bound: None,
    })
}

/// Greedy colouring along the reversed elimination order. Uses at most
/// `degeneracy + 1` colours.
pub fn greedy_coloring(g: &Graph, elimination_order: &[Vertex]) -> Vec<usize> {
    let mut color = vec![usize::MAX; g.n()];
    for &v in elimination_order.iter().rev() {
        let mut used: Vec<bool> = vec![false; g.degree(v) + 1];
        for &u in g.neighbors(v) {
            if color[u] < used.len() {
                used[color[u]] = true;
            }
        }
        color[v] = used.iter().position(|&b| !b).unwrap_or(used.len());
    }
    color
}
