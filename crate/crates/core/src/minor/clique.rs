use std::collections::VecDeque;

use super::{model_from_labels, lift_model, verify_model, CyclicMinorModel, TargetKind};
use crate::contraction::plan_all;
use crate::error::MinorError;
use crate::graph::{contract_along_cycle, edge, Edge, Graph, Vertex};
use crate::lollipop::find_dense_cycle;

/// A shortest cycle of `g`, or `None` for a forest.
///
/// BFS from every root; a non-tree edge between two different root
/// branches closes a simple cycle through the root. Ties keep the first
/// cycle found (lowest root, then BFS order).
pub fn shortest_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut best: Option<(usize, Vertex, Vertex, Vertex, Vec<usize>)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    for root in g.vertices() {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        branch[root] = root;
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![root];
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.0) {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    branch[v] = if u == root { v } else { branch[u] };
                    queue.push_back(v);
                    seen.push(v);
                } else if v != parent[u] && u != parent[v] && branch[u] != branch[v] {
                    let len = dist[u] + dist[v] + 1;
                    if best.as_ref().is_none_or(|b| len < b.0) {
                        best = Some((len, root, u, v, parent.clone()));
                    }
                }
            }
        }
        for v in seen {
            branch[v] = usize::MAX;
        }
    }
    let (_, root, u, v, parent) = best?;
    let climb = |mut x: Vertex| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p
    };
    // u-branch reversed up to the root, then down the v-branch.
    let mut up = climb(u);
    let down = climb(v);
    up.reverse();
    debug_assert_eq!(*down.last().unwrap(), root);
    up.extend(down[..down.len() - 1].iter().copied());
    let cycle = up;
    debug_assert!(g.is_cycle(&cycle));
    Some(cycle)
}

/// Any shortest cycle cut into three balanced arcs.
pub fn k3_model(g: &Graph) -> Result<CyclicMinorModel, MinorError> {
    let cycle = shortest_cycle(g)
        .ok_or_else(|| MinorError::Precondition("the graph is acyclic".into()))?;
    let t = cycle.len();
    let (q, rem) = (t / 3, t % 3);
    let labels: Vec<usize> = (0..3)
        .flat_map(|a| std::iter::repeat_n(a, q + usize::from(a < rem)))
        .collect();
    let model = model_from_labels(g, &cycle, &labels, TargetKind::Clique(3));
    assert!(verify_model(&model)?);
    Ok(model)
}

fn require_hamiltonian(f: &Graph, c: &[Vertex]) -> Result<(), MinorError> {
    if c.len() != f.n() || !f.is_cycle(c) {
        return Err(MinorError::Precondition(
            "c is not a Hamiltonian cycle of f".into(),
        ));
    }
    Ok(())
}

/// Positions of a Hamiltonian cycle.
fn positions(n: usize, c: &[Vertex]) -> Vec<usize> {
    let mut pos = vec![0; n];
    for (i, &v) in c.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// K4 from the chord `uv` spanning the shortest arc `P`: an interior vertex
/// `z` of `P` has a chord `zx`, and minimality puts `x` off `P`.
pub fn k4_model(f: &Graph, c: &[Vertex]) -> Result<CyclicMinorModel, MinorError> {
    require_hamiltonian(f, c)?;
    let t = c.len();
    let pos = positions(f.n(), c);
    // (arc length, chord, start of the forward arc)
    let mut best: Option<(usize, Edge, Vertex)> = None;
    for (a, b) in f.chords_of_cycle(c) {
        let d = (pos[b] + t - pos[a]) % t;
        let (len, u) = match d.cmp(&(t - d)) {
            std::cmp::Ordering::Less => (d, a),
            std::cmp::Ordering::Greater => (t - d, b),
            std::cmp::Ordering::Equal => (d, a.min(b)),
        };
        let key = (len, edge(a, b), u);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    let (len, _, u) =
        best.ok_or_else(|| MinorError::Precondition("the cycle has no chord".into()))?;
    let at = |p: usize| c[(pos[u] + p) % t];
    let interior: Vec<Vertex> = (1..len).map(at).collect();
    let chord_of = |z: Vertex| {
        f.neighbors(z)
            .iter()
            .copied()
            .find(|&x| !is_cycle_neighbour(&pos, t, z, x))
    };
    let mut by_id = interior.clone();
    by_id.sort_unstable();
    let (z, x) = by_id
        .iter()
        .find_map(|&z| chord_of(z).map(|x| (z, x)))
        .ok_or_else(|| MinorError::Precondition("no interior vertex of P has a chord".into()))?;
    let px = (pos[x] + t - pos[u]) % t;
    assert!(px > len, "minimality keeps the chord {z}{x} off P");
    let labels: Vec<usize> = (0..t)
        .map(|i| {
            let p = (i + t - pos[u]) % t;
            match p {
                0 => 0,
                p if p < len => 1,
                p if p < px => 2,
                _ => 3,
            }
        })
        .collect();
    let model = model_from_labels(f, c, &labels, TargetKind::Clique(4));
    assert!(verify_model(&model)?);
    Ok(model)
}

fn is_cycle_neighbour(pos: &[usize], t: usize, a: Vertex, b: Vertex) -> bool {
    let d = pos[a].abs_diff(pos[b]);
    d == 1 || d == t - 1
}

/// K4 on an arbitrary graph of minimum degree at least 3: dense cycle,
/// contraction to a Hamiltonian minor, then `k4_model` lifted back.
pub fn k4_from_graph(g: &Graph) -> Result<CyclicMinorModel, MinorError> {
    let k = g.min_degree().unwrap_or(0);
    if k < 3 {
        return Err(MinorError::Precondition(format!("minimum degree {k} is below 3")));
    }
    let cert = find_dense_cycle(g, 3).map_err(|e| MinorError::Precondition(e.to_string()))?;
    let (r0, r1, r2) = plan_all(g, &cert).map_err(|e| MinorError::Precondition(e.to_string()))?;
    let mut last = None;
    for report in [r1, r0, r2] {
        match k4_model(&report.quotient, &report.quotient_cycle) {
            Ok(m) => {
                let lifted = lift_model(g, &report, &m);
                assert!(verify_model(&lifted)?);
                return Ok(lifted);
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("three attempts were made"))
}

/// Common neighbours of the cycle edge `{a, a+1}` in the quotient on
/// `0..r`, ordered along the path `a+1, a+2, …, a`.
fn common_along(q: &Graph, r: usize, a: usize) -> Vec<usize> {
    let b = (a + 1) % r;
    (1..r - 1)
        .map(|p| (b + p) % r)
        .filter(|&x| q.has_edge(a, x) && q.has_edge(b, x))
        .collect()
}

/// K5 from a Hamiltonian graph with at least `3|V|` edges. Cycle edges are
/// contracted while the density survives, after which every cycle edge
/// sits in at least three triangles; a shortest path from a peak to its
/// edge then yields five arcs.
pub fn k5_model(f: &Graph, c: &[Vertex]) -> Result<CyclicMinorModel, MinorError> {
    if f.edge_count() < 3 * f.n() {
        return Err(MinorError::Precondition(format!(
            "{} edges on {} vertices is below average degree 6",
            f.edge_count(),
            f.n()
        )));
    }
    require_hamiltonian(f, c)?;
    let t = c.len();
    let mut flags = vec![false; t];
    let (q, plan) = loop {
        let (q, plan) = contract_along_cycle(f, c, &flags)?;
        let r = q.n();
        let next = (0..r).find(|&a| {
            let common = common_along(&q, r, a).len();
            q.edge_count() - 1 - common >= 3 * (r - 1)
        });
        let Some(a) = next else { break (q, plan) };
        let arcs = plan.arcs.as_ref().expect("cycle contractions record arcs");
        let tail = *arcs[a].last().expect("arcs are non-empty");
        let i = c.iter().position(|&v| v == tail).expect("arc vertices lie on c");
        flags[i] = true;
    };
    let r = q.n();
    for a in 0..r {
        assert!(common_along(&q, r, a).len() >= 3, "fixpoint edge {a} lies in < 3 triangles");
    }

    // Peaks are the common neighbours other than the two extreme ones.
    let peaks = |a: usize| {
        let all = common_along(&q, r, a);
        all[1..all.len() - 1].to_vec()
    };
    // (length, edge, peak, end)
    let mut best: Option<(usize, Edge, usize, usize)> = None;
    for a in 0..r {
        let b = (a + 1) % r;
        for z in peaks(a) {
            let p = (z + r - b) % r;
            for key in [(p, edge(a, b), z, b), (r - 1 - p, edge(a, b), z, a)] {
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    let (len, e, z, u) = best.expect("every fixpoint edge has a peak");
    let v = if e.0 == u { e.1 } else { e.0 };
    // Walk from u away from v.
    let step = if (u + 1) % r == v { r - 1 } else { 1 };
    let path: Vec<usize> = (0..=len).map(|i| (u + i * step) % r).collect();
    debug_assert_eq!(*path.last().unwrap(), z);
    let v1 = path[1];
    let a1 = if step == 1 { u } else { v1 };
    let z1 = peaks(a1)
        .into_iter()
        .filter(|x| !path.contains(x) && *x != v)
        .min()
        .expect("minimality keeps a peak of u v' off P");

    let mut label = vec![3; r];
    for &x in &path {
        label[x] = 1;
    }
    label[u] = 0;
    label[z] = 2;
    label[v] = 4;
    debug_assert_eq!(label[z1], 3);
    let arcs = plan.arcs.as_ref().expect("cycle contractions record arcs");
    let mut host_labels = vec![0; f.n()];
    for (qv, arc) in arcs.iter().enumerate() {
        for &x in arc {
            host_labels[x] = label[qv];
        }
    }
    let pos_labels: Vec<usize> = c.iter().map(|&x| host_labels[x]).collect();
    let model = model_from_labels(f, c, &pos_labels, TargetKind::Clique(5));
    assert!(verify_model(&model)?);
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};

    fn sizes(m: &CyclicMinorModel) -> Vec<usize> {
        m.arcs.iter().map(Vec::len).collect()
    }

    #[test]
    fn triangles() {
        let m = k3_model(&Graph::complete(3)).unwrap();
        assert_eq!(sizes(&m), vec![1, 1, 1]);
        let m = k3_model(&Graph::cycle(9).unwrap()).unwrap();
        assert_eq!(sizes(&m), vec![3, 3, 3]);
        let p = generate(&Family::Petersen, 0).unwrap();
        let m = k3_model(&p).unwrap();
        assert_eq!(m.host_cycle.len(), 5);
        assert_eq!(sizes(&m), vec![2, 2, 1]);
    }

    #[test]
    fn shortest_cycle_is_a_girth_cycle() {
        assert_eq!(shortest_cycle(&Graph::cycle(7).unwrap()).unwrap().len(), 7);
        let prism = generate(&Family::Prism { n: 4 }, 0).unwrap();
        assert_eq!(shortest_cycle(&prism).unwrap().len(), 4);
        let tree = generate(&Family::RandomTree { n: 12 }, 3).unwrap();
        assert!(shortest_cycle(&tree).is_none());
        assert!(k3_model(&tree).is_err());
    }

    #[test]
    fn k4_identity_and_prism() {
        let m = k4_model(&Graph::complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(sizes(&m), vec![1, 1, 1, 1]);
        let prism = generate(&Family::Prism { n: 3 }, 0).unwrap();
        let c = [0, 1, 2, 5, 4, 3];
        assert!(prism.is_cycle(&c));
        assert!(verify_model(&k4_model(&prism, &c).unwrap()).unwrap());
        assert!(k4_model(&Graph::cycle(5).unwrap(), &[0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn k4_through_the_pipeline() {
        let p = generate(&Family::Petersen, 0).unwrap();
        let m = k4_from_graph(&p).unwrap();
        assert!(verify_model(&m).unwrap());
        assert_eq!(m.host, p);
    }

    #[test]
    fn k5_from_dense_cliques() {
        let m = k5_model(&Graph::complete(7), &(0..7).collect::<Vec<_>>()).unwrap();
        assert_eq!(m.arcs.len(), 5);
        assert_eq!(m.arcs.iter().map(Vec::len).sum::<usize>(), 7);
        let m = k5_model(&Graph::complete(8), &(0..8).collect::<Vec<_>>()).unwrap();
        assert!(verify_model(&m).unwrap());
        let ico = generate(&Family::Icosahedron, 0).unwrap();
        let c: Vec<Vertex> = (0..12).collect();
        assert!(matches!(k5_model(&ico, &c), Err(MinorError::Precondition(_))));
    }
}
