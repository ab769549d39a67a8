use super::{guard, Limits};
use crate::error::OracleError;
use crate::graph::{Graph, Vertex};

/// All Hamiltonian cycles, one per rotation/reflection class: each starts
/// at vertex 0 with its second vertex below its last. Lexicographic order.
pub fn enumerate_hamiltonian_cycles(g: &Graph, limits: &Limits) -> Result<Vec<Vec<Vertex>>, OracleError> {
    let n = g.n();
    guard("vertex count", n, limits.max_vertices)?;
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    let mut path = vec![0];
    let mut used = 1u64;
    extend(g, &mut path, &mut used, &mut out);
    Ok(out)
}

fn extend(g: &Graph, path: &mut Vec<Vertex>, used: &mut u64, out: &mut Vec<Vec<Vertex>>) {
    let u = *path.last().unwrap();
    if path.len() == g.n() {
        if g.has_edge(u, 0) && path[1] < u {
            out.push(path.clone());
        }
        return;
    }
    for &v in g.neighbors(u) {
        if *used >> v & 1 == 0 {
            *used |= 1 << v;
            path.push(v);
            extend(g, path, used, out);
            path.pop();
            *used &= !(1 << v);
        }
    }
}

/// Hamiltonian paths of `G[vertices]` starting at `start`, in
/// lexicographic order.
pub fn hamiltonian_paths_from(
    g: &Graph,
    vertices: &[Vertex],
    start: Vertex,
    limits: &Limits,
) -> Result<Vec<Vec<Vertex>>, OracleError> {
    guard("vertex count", vertices.len(), limits.max_vertices)?;
    if !vertices.contains(&start) {
        return Err(OracleError::Invalid(format!("{start} is not among the vertices")));
    }
    let mut allowed = vec![false; g.n()];
    for &v in vertices {
        allowed[v] = true;
    }
    let mut out = Vec::new();
    let mut path = vec![start];
    let mut used = vec![false; g.n()];
    used[start] = true;
    fn go(
        g: &Graph,
        allowed: &[bool],
        target: usize,
        path: &mut Vec<Vertex>,
        used: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if path.len() == target {
            out.push(path.clone());
            return;
        }
        let u = *path.last().unwrap();
        for &v in g.neighbors(u) {
            if allowed[v] && !used[v] {
                used[v] = true;
                path.push(v);
                go(g, allowed, target, path, used, out);
                path.pop();
                used[v] = false;
            }
        }
    }
    go(g, &allowed, vertices.len(), &mut path, &mut used, &mut out);
    Ok(out)
}

/// Largest chord count over all cycles, with a witness cycle; `None` for
/// a forest. Dynamic program over (vertex set, end) with the smallest
/// vertex of the set as the fixed start.
pub fn max_chords_over_cycles(g: &Graph, limits: &Limits) -> Result<Option<(usize, Vec<Vertex>)>, OracleError> {
    let n = g.n();
    guard("vertex count", n, limits.max_subset_vertices)?;
    if n < 3 {
        return Ok(None);
    }
    let nbr: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let full = 1usize << n;
    // reach[mask] has bit v when a path from min(mask) through all of mask ends at v.
    let mut reach = vec![0u32; full];
    for s in 0..n {
        reach[1 << s] = 1 << s;
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let free = nbr[v] as usize & !mask & !((1usize << s) - 1) & (full - 1);
            let mut f = free;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
            if size >= 3 && nbr[v] >> s & 1 == 1 {
                let inside: usize = (0..n)
                    .filter(|&x| mask >> x & 1 == 1)
                    .map(|x| (nbr[x] as usize & mask).count_ones() as usize)
                    .sum::<usize>()
                    / 2;
                let chords = inside - size;
                if best.is_none_or(|(c, _, _)| chords > c) {
                    best = Some((chords, mask, v));
                }
            }
        }
    }
    let Some((chords, mask, end)) = best else {
        return Ok(None);
    };
    // Walk back through the table.
    let mut cycle = vec![end];
    let (mut m, mut v) = (mask, end);
    let s = mask.trailing_zeros() as usize;
    while v != s {
        let prev = m & !(1 << v);
        let u = (0..n)
            .find(|&u| reach[prev] >> u & 1 == 1 && nbr[u] >> v & 1 == 1)
            .expect("the table records a predecessor");
        cycle.push(u);
        m = prev;
        v = u;
    }
    cycle.reverse();
    Ok(Some((chords, cycle)))
}
