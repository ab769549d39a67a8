use super::grid::{chord_matrix, exact_regime, grid_block_partition, rect_partition, GridSearch};
use super::{model_from_labels, verify_model, MinorSearch, Route, TargetKind};
use crate::error::MinorError;
use crate::graph::{Graph, Vertex};
use crate::par::Execution;

/// `K_{ℓ,ℓ}` on `X = 0..ℓ`, `Y = ℓ..2ℓ` plus the paths `0 … ℓ-1` and
/// `ℓ … 2ℓ-1`. Its Hamiltonian cycle is `0, 1, …, 2ℓ-1`.
pub fn kll_prime_graph(l: usize) -> Graph {
    let mut edges = Vec::new();
    for x in 0..l {
        for y in l..2 * l {
            edges.push((x, y));
        }
    }
    for i in 0..l.saturating_sub(1) {
        edges.push((i, i + 1));
        edges.push((l + i, l + i + 1));
    }
    Graph::from_edges(2 * l, edges).expect("edges are simple and in range")
}

/// Per-position labels `0..ℓ` for `X_1 … X_ℓ` and `ℓ..2ℓ` for `Y_1 … Y_ℓ`,
/// laid out in that cyclic order.
type BandLabels = Vec<usize>;

/// An `X_1 … X_ℓ Y_1 … Y_ℓ` configuration in which every `X_x` has a chord
/// to every `Y_y`, first from the square block partition with `a = 2ℓ`,
/// then from a scan over rotations and splits.
fn bipartite_configuration(
    g: &Graph,
    cycle: &[Vertex],
    l: usize,
) -> Result<Option<(BandLabels, Route)>, MinorError> {
    if l == 0 {
        return Err(MinorError::Precondition("ℓ must be at least 1".into()));
    }
    if cycle.len() < 3 || !g.is_cycle(cycle) {
        return Err(MinorError::Precondition("not a cycle of the host".into()));
    }
    let t = cycle.len();
    if 2 * l > t {
        return Ok(None);
    }
    let m = chord_matrix(g, cycle);
    if let GridSearch::Found(p) = grid_block_partition(&m, 2 * l)? {
        let (mut i, mut j) = (p.row_cuts, p.col_cuts);
        // The matrix is symmetric, so the transposed partition is valid too.
        if i[l] > j[l] {
            std::mem::swap(&mut i, &mut j);
        }
        let mut labels = vec![0; t];
        for x in 0..l {
            labels[i[x]..i[x + 1]].fill(x);
        }
        // The slack between the two halves joins Y_1.
        labels[i[l]..j[l + 1]].fill(l);
        for y in 1..l {
            labels[j[l + y]..j[l + y + 1]].fill(l + y);
        }
        return Ok(Some((labels, Route::GridPartition)));
    }
    let shapes: Vec<(usize, usize)> = (0..t)
        .flat_map(|o| (l..=t - l).map(move |s| (o, s)))
        .collect();
    let found = Execution::default().find_map_first(&shapes, |&(o, s)| {
        let rows: Vec<usize> = (0..s).map(|p| (o + p) % t).collect();
        let cols: Vec<usize> = (s..t).map(|p| (o + p) % t).collect();
        let sub = m.submatrix(&rows, &cols);
        let (rc, cc) = rect_partition(&sub, l, Execution::Sequential)?;
        let mut labels = vec![0; t];
        for x in 0..l {
            for &p in &rows[rc[x]..rc[x + 1]] {
                labels[p] = x;
            }
            for &p in &cols[cc[x]..cc[x + 1]] {
                labels[p] = l + x;
            }
        }
        Some(labels)
    });
    Ok(found.map(|labels| (labels, Route::BipartiteScan)))
}

/// Whether a failed search covered every configuration shape.
fn search_exact(t: usize, l: usize) -> bool {
    exact_regime(t, 2 * l)
}

/// `K'_{ℓ,ℓ}` as a cyclic minor of `g` on `cycle`.
pub fn kll_prime_model(g: &Graph, cycle: &[Vertex], l: usize) -> Result<MinorSearch, MinorError> {
    let Some((labels, route)) = bipartite_configuration(g, cycle, l)? else {
        return Ok(MinorSearch::NotFound {
            exact: search_exact(cycle.len(), l),
        });
    };
    let model = model_from_labels(g, cycle, &labels, TargetKind::KllPrime(l));
    assert!(verify_model(&model)?);
    Ok(MinorSearch::Found { model, route })
}

/// K6 from an `ℓ = 4` configuration by merging `X_4 ∪ Y_1` and `Y_4 ∪ X_1`.
pub fn k6_from_bipartite(g: &Graph, cycle: &[Vertex]) -> Result<MinorSearch, MinorError> {
    let Some((labels, route)) = bipartite_configuration(g, cycle, 4)? else {
        return Ok(MinorSearch::NotFound {
            exact: search_exact(cycle.len(), 4),
        });
    };
    // X_1..X_4 = 0..4, Y_1..Y_4 = 4..8.
    const MERGE: [usize; 8] = [5, 0, 1, 2, 2, 3, 4, 5];
    let merged: Vec<usize> = labels.iter().map(|&x| MERGE[x]).collect();
    let model = model_from_labels(g, cycle, &merged, TargetKind::Clique(6));
    assert!(verify_model(&model)?);
    Ok(MinorSearch::Found { model, route })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};

    fn id_cycle(n: usize) -> Vec<Vertex> {
        (0..n).collect()
    }

    #[test]
    fn target_shape() {
        let k = kll_prime_graph(3);
        assert_eq!(k.edge_count(), 9 + 2 + 2);
        assert!(k.is_cycle(&id_cycle(6)));
        assert_eq!(kll_prime_graph(1).edge_count(), 1);
    }

    #[test]
    fn k8_gives_k22_prime() {
        let g = Graph::complete(8);
        let s = kll_prime_model(&g, &id_cycle(8), 2).unwrap();
        assert!(verify_model(s.model().unwrap()).unwrap());
    }

    #[test]
    fn chordless_cycle_has_nothing() {
        let c = Graph::cycle(10).unwrap();
        assert_eq!(kll_prime_model(&c, &id_cycle(10), 1).unwrap(), MinorSearch::NotFound { exact: true });
        assert_eq!(k6_from_bipartite(&c, &id_cycle(10)).unwrap(), MinorSearch::NotFound { exact: true });
    }

    #[test]
    fn k66_gives_k22_prime() {
        let g = generate(&Family::CompleteBipartite { a: 6, b: 6 }, 0).unwrap();
        let cycle: Vec<Vertex> = (0..6).flat_map(|i| [i, 6 + i]).collect();
        assert!(g.is_cycle(&cycle));
        let s = kll_prime_model(&g, &cycle, 2).unwrap();
        assert!(verify_model(s.model().unwrap()).unwrap());
    }

    #[test]
    fn k6_in_k12_and_in_the_configuration() {
        let s = k6_from_bipartite(&Graph::complete(12), &id_cycle(12)).unwrap();
        assert_eq!(s.model().unwrap().arcs.len(), 6);
        let g = generate(&Family::BipartiteConfig { side: 5 }, 0).unwrap();
        let s = k6_from_bipartite(&g, &id_cycle(15)).unwrap();
        assert!(verify_model(s.model().unwrap()).unwrap());
    }
}
