use super::cycles::enumerate_hamiltonian_cycles;
use super::{guard, Limits};
use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::minor::{BoolMatrix, CyclicMinorModel, Origin, TargetKind};
use crate::par::Execution;

const MASK_BITS: usize = 32;

/// How the arcs of one partition must line up with the target.
struct TargetShape {
    r: usize,
    clique: bool,
    edges: Vec<(usize, usize)>,
    /// Hamiltonian cycles of the target, one per class.
    cycles: Vec<Vec<Vertex>>,
}

impl TargetShape {
    fn new(target: &Graph, limits: &Limits) -> Result<Self, OracleError> {
        let r = target.n();
        if r < 3 {
            return Err(OracleError::Invalid(format!("target on {r} vertices; need at least 3")));
        }
        let clique = target.edge_count() == r * (r - 1) / 2;
        let cycles = if clique {
            vec![(0..r).collect()]
        } else {
            enumerate_hamiltonian_cycles(target, limits)?
        };
        Ok(TargetShape {
            r,
            clique,
            edges: target.edges().collect(),
            cycles,
        })
    }

    /// Target vertex per arc, if some alignment of a target cycle with the
    /// arc order carries every target edge onto adjacent arcs.
    fn align(&self, adjacent: &[u32]) -> Option<Vec<Vertex>> {
        let r = self.r;
        if self.clique {
            return adjacent
                .iter()
                .enumerate()
                .all(|(i, &row)| row | 1 << i == (1u32 << r) - 1)
                .then(|| (0..r).collect());
        }
        for h in &self.cycles {
            for s in 0..r {
                for dir in [1, r - 1] {
                    let order: Vec<Vertex> = (0..r).map(|i| h[(s + dir * i) % r]).collect();
                    let mut arc_of = vec![0; r];
                    for (i, &x) in order.iter().enumerate() {
                        arc_of[x] = i;
                    }
                    if self
                        .edges
                        .iter()
                        .all(|&(x, y)| adjacent[arc_of[x]] >> arc_of[y] & 1 == 1)
                    {
                        return Some(order);
                    }
                }
            }
        }
        None
    }
}

/// Arc starts `q_0 < … < q_{r-1}` on one cycle; the last arc wraps round
/// to `q_0`. Clique targets prune as soon as two finished arcs miss.
fn search_partitions(
    nbr: &[u32],
    cycle: &[Vertex],
    shape: &TargetShape,
) -> Option<(Vec<Vec<Vertex>>, Vec<Vertex>)> {
    let l = cycle.len();
    let r = shape.r;
    if l < r {
        return None;
    }
    let mut starts = Vec::with_capacity(r);
    let mut arc_mask = Vec::with_capacity(r);
    let mut arc_nbr = Vec::with_capacity(r);
    for q0 in 0..=l - r {
        starts.push(q0);
        if let Some(found) = next_start(nbr, cycle, shape, &mut starts, &mut arc_mask, &mut arc_nbr) {
            return Some(found);
        }
        starts.pop();
    }
    None
}

fn next_start(
    nbr: &[u32],
    cycle: &[Vertex],
    shape: &TargetShape,
    starts: &mut Vec<usize>,
    arc_mask: &mut Vec<u32>,
    arc_nbr: &mut Vec<u32>,
) -> Option<(Vec<Vec<Vertex>>, Vec<Vertex>)> {
    let l = cycle.len();
    let r = shape.r;
    let k = starts.len();
    let span = |from: usize, to: usize| {
        (from..to).fold((0u32, 0u32), |(m, n), p| (m | 1 << cycle[p], n | nbr[cycle[p]]))
    };
    if k == r {
        let q0 = starts[0];
        let last = starts[r - 1];
        let (m1, n1) = span(last, l);
        let (m2, n2) = span(0, q0);
        let (mask, nb) = (m1 | m2, n1 | n2);
        let mut masks = arc_mask.clone();
        let mut nbrs = arc_nbr.clone();
        masks.push(mask);
        nbrs.push(nb);
        let adjacent: Vec<u32> = (0..r)
            .map(|i| (0..r).filter(|&j| j != i && nbrs[i] & masks[j] != 0).fold(0, |a, j| a | 1 << j))
            .collect();
        let order = shape.align(&adjacent)?;
        let arcs = (0..r)
            .map(|i| {
                let end = if i + 1 < r { starts[i + 1] } else { starts[0] + l };
                (starts[i]..end).map(|p| cycle[p % l]).collect()
            })
            .collect();
        return Some((arcs, order));
    }
    let prev = starts[k - 1];
    // Leave room for the remaining starts.
    for q in prev + 1..=l - (r - k) {
        let (mask, nb) = span(prev, q);
        if shape.clique && arc_mask.iter().any(|&m| nb & m == 0) {
            continue;
        }
        arc_mask.push(mask);
        arc_nbr.push(nb);
        starts.push(q);
        let found = next_start(nbr, cycle, shape, starts, arc_mask, arc_nbr);
        starts.pop();
        arc_mask.pop();
        arc_nbr.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn neighbour_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

fn witness(g: &Graph, target: &Graph, cycle: Vec<Vertex>, arcs: Vec<Vec<Vertex>>, order: Vec<Vertex>) -> CyclicMinorModel {
    let r = target.n();
    let kind = if target.edge_count() == r * (r - 1) / 2 {
        TargetKind::Clique(r)
    } else {
        TargetKind::Other
    };
    CyclicMinorModel {
        host: g.clone(),
        host_cycle: cycle,
        arcs,
        target: target.clone(),
        target_cycle: order,
        kind,
        origin: Origin::Oracle,
    }
}

/// Exhaustive cyclic-minor test: every cycle of `g`, every partition of it
/// into `|V(target)|` arcs, every alignment with a Hamiltonian cycle of the
/// target. Returns a witness when one exists.
pub fn cyclic_minor_exists(
    g: &Graph,
    target: &Graph,
    limits: &Limits,
) -> Result<Option<CyclicMinorModel>, OracleError> {
    guard("host vertex count", g.n(), limits.max_vertices.min(MASK_BITS))?;
    guard("target vertex count", target.n(), limits.max_vertices)?;
    let shape = TargetShape::new(target, limits)?;
    let nbr = neighbour_masks(g);
    let starts: Vec<Vertex> = g.vertices().collect();
    let found = Execution::default().find_map_first(&starts, |&s| {
        // Cycles whose smallest vertex is s, one orientation each.
        let mut path = vec![s];
        let mut used = 1u32 << s;
        cycles_from(g, &nbr, &shape, &mut path, &mut used)
    });
    Ok(found.map(|(cycle, arcs, order)| witness(g, target, cycle, arcs, order)))
}

type Found = (Vec<Vertex>, Vec<Vec<Vertex>>, Vec<Vertex>);

fn cycles_from(g: &Graph, nbr: &[u32], shape: &TargetShape, path: &mut Vec<Vertex>, used: &mut u32) -> Option<Found> {
    let s = path[0];
    let u = *path.last().unwrap();
    if path.len() >= 3 && path.len() >= shape.r && nbr[u] >> s & 1 == 1 && path[1] < u {
        if let Some((arcs, order)) = search_partitions(nbr, path, shape) {
            return Some((path.clone(), arcs, order));
        }
    }
    for &v in g.neighbors(u) {
        if v > s && *used >> v & 1 == 0 {
            *used |= 1 << v;
            path.push(v);
            let found = cycles_from(g, nbr, shape, path, used);
            path.pop();
            *used &= !(1 << v);
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// The same test restricted to one host cycle.
pub fn cyclic_minor_on_cycle(
    g: &Graph,
    cycle: &[Vertex],
    target: &Graph,
    limits: &Limits,
) -> Result<Option<CyclicMinorModel>, OracleError> {
    // One cycle keeps the search polynomial for a fixed target; only the
    // 32-bit vertex masks bound the host.
    guard("host vertex count", g.n(), MASK_BITS)?;
    if cycle.len() < 3
        || (0..cycle.len()).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    {
        return Err(OracleError::Invalid("not a cycle of the host".into()));
    }
    let shape = TargetShape::new(target, limits)?;
    let nbr = neighbour_masks(g);
    Ok(search_partitions(&nbr, cycle, &shape)
        .map(|(arcs, order)| witness(g, target, cycle.to_vec(), arcs, order)))
}

/// Lexicographically smallest `(row cuts, column cuts)` with a 1 in every
/// block, by enumerating all cut tuples.
pub fn brute_force_grid_partition(m: &BoolMatrix, a: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let all_cuts = |len: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![0];
        fn rec(len: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == a {
                let mut c = cur.clone();
                c.push(len);
                out.push(c);
                return;
            }
            let last = *cur.last().unwrap();
            for next in last + 1..len {
                cur.push(next);
                rec(len, a, cur, out);
                cur.pop();
            }
        }
        if a >= 1 && a <= len {
            rec(len, a, &mut cur, &mut out);
        }
        out
    };
    let rows = all_cuts(m.rows());
    let cols = all_cuts(m.cols());
    for rc in &rows {
        for cc in &cols {
            let ok = (0..a).all(|x| {
                (0..a).all(|y| {
                    (rc[x]..rc[x + 1]).any(|i| (cc[y]..cc[y + 1]).any(|j| m.get(i, j)))
                })
            });
            if ok {
                return Some((rc.clone(), cc.clone()));
            }
        }
    }
    None
}
