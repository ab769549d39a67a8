//! Deterministic graph families. Random families draw from a ChaCha8 stream
//! seeded with the caller's seed, so equal `(family, seed)` pairs always
//! produce identical graphs.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::error::GraphError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { leaves: usize },
    Petersen,
    Icosahedron,
    /// Circular ladder `C_n × K_2`; `n = 3` is the triangular prism.
    Prism { n: usize },
    /// Two triangles sharing one vertex.
    Bowtie,
    /// A `3·side` cycle whose vertices `0..side` are all joined to
    /// `side+3..2side+3` (crossing chords in bipartite configuration).
    BipartiteConfig { side: usize },
    /// Connected random graph with minimum degree at least `k`: a random
    /// spanning tree, then random edges at every deficient vertex, then
    /// `extra` further uniformly random edges.
    RandomMinDegree { n: usize, k: usize, extra: usize },
    RandomRegular { n: usize, d: usize },
    RandomTree { n: usize },
}

impl Family {
    pub const NAMES: [&'static str; 13] = [
        "complete",
        "complete_bipartite",
        "cycle",
        "path",
        "star",
        "petersen",
        "icosahedron",
        "prism",
        "bowtie",
        "bipartite_config",
        "random_min_degree",
        "random_regular",
        "random_tree",
    ];

    /// Builds a family from its CLI name and `key=value` parameters.
    pub fn from_name(name: &str, params: &BTreeMap<String, String>) -> Result<Self, GraphError> {
        let get = |key: &str, default: Option<usize>| -> Result<usize, GraphError> {
            match params.get(key) {
                Some(s) => s.parse().map_err(|_| {
                    GraphError::InvalidParameters(format!("parameter {key}=`{s}` is not an integer"))
                }),
                None => default.ok_or_else(|| {
                    GraphError::InvalidParameters(format!("family `{name}` needs parameter {key}"))
                }),
            }
        };
        let family = match name {
            "complete" => Family::Complete { n: get("n", None)? },
            "complete_bipartite" => Family::CompleteBipartite {
                a: get("a", None)?,
                b: get("b", None)?,
            },
            "cycle" => Family::Cycle { n: get("n", None)? },
            "path" => Family::Path { n: get("n", None)? },
            "star" => Family::Star {
                leaves: get("leaves", None)?,
            },
            "petersen" => Family::Petersen,
            "icosahedron" => Family::Icosahedron,
            "prism" => Family::Prism { n: get("n", Some(3))? },
            "bowtie" => Family::Bowtie,
            "bipartite_config" => Family::BipartiteConfig {
                side: get("side", Some(5))?,
            },
            "random_min_degree" => Family::RandomMinDegree {
                n: get("n", None)?,
                k: get("k", None)?,
                extra: get("extra", Some(0))?,
            },
            "random_regular" => Family::RandomRegular {
                n: get("n", None)?,
                d: get("d", None)?,
            },
            "random_tree" => Family::RandomTree { n: get("n", None)? },
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "complete(n={n})"),
            Family::CompleteBipartite { a, b } => write!(f, "complete_bipartite(a={a},b={b})"),
            Family::Cycle { n } => write!(f, "cycle(n={n})"),
            Family::Path { n } => write!(f, "path(n={n})"),
            Family::Star { leaves } => write!(f, "star(leaves={leaves})"),
            Family::Petersen => f.write_str("petersen"),
            Family::Icosahedron => f.write_str("icosahedron"),
            Family::Prism { n } => write!(f, "prism(n={n})"),
            Family::Bowtie => f.write_str("bowtie"),
            Family::BipartiteConfig { side } => write!(f, "bipartite_config(side={side})"),
            Family::RandomMinDegree { n, k, extra } => {
                write!(f, "random_min_degree(n={n},k={k},extra={extra})")
            }
            Family::RandomRegular { n, d } => write!(f, "random_regular(n={n},d={d})"),
            Family::RandomTree { n } => write!(f, "random_tree(n={n})"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(msg.into())
}

pub fn generate(family: &Family, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Complete { n } => Ok(Graph::complete(n)),
        Family::CompleteBipartite { a, b } => {
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Cycle { n } => Graph::cycle(n),
        Family::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Family::Star { leaves } => Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))),
        Family::Petersen => Graph::from_edges(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)]),
        ),
        Family::Icosahedron => icosahedron(),
        Family::Prism { n } => {
            if n < 3 {
                return Err(invalid("prism needs n >= 3"));
            }
            Graph::from_edges(
                2 * n,
                (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]),
            )
        }
        Family::Bowtie => Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        Family::BipartiteConfig { side } => {
            if side < 2 {
                return Err(invalid("bipartite_config needs side >= 2"));
            }
            let n = 3 * side;
            let cycle = (0..n).map(|i| (i, (i + 1) % n));
            let chords = (0..side).flat_map(|a| (side + 3..2 * side + 3).map(move |b| (a, b)));
            Graph::from_edges(n, cycle.chain(chords))
        }
        Family::RandomMinDegree { n, k, extra } => random_min_degree(n, k, extra, &mut rng),
        Family::RandomRegular { n, d } => random_regular(n, d, &mut rng),
        Family::RandomTree { n } => {
            if n == 0 {
                return Err(invalid("random_tree needs n >= 1"));
            }
            Graph::from_edges(n, random_tree_edges(n, &mut rng))
        }
    }
}

fn icosahedron() -> Result<Graph, GraphError> {
    // 0 = top, 1..=5 upper ring, 6..=10 lower ring, 11 = bottom.
    let mut edges = Vec::with_capacity(30);
    for i in 1..=5 {
        let next = i % 5 + 1;
        edges.push((0, i));
        edges.push((i, next));
        edges.push((5 + i, 5 + next));
        edges.push((i, 5 + i));
        edges.push((i, 5 + next));
        edges.push((11, 5 + i));
    }
    Graph::from_edges(12, edges)
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|i| (order[i], order[rng.gen_range(0..i)]))
        .collect()
}

fn random_min_degree(
    n: usize,
    k: usize,
    extra: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Graph, GraphError> {
    if n < k + 1 || n == 0 {
        return Err(invalid(format!(
            "minimum degree {k} needs at least {} vertices, got {n}",
            k + 1
        )));
    }
    let mut adj: Vec<std::collections::BTreeSet<Vertex>> = vec![Default::default(); n];
    let add = |adj: &mut Vec<std::collections::BTreeSet<Vertex>>, u: Vertex, v: Vertex| {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (u, v) in random_tree_edges(n, rng) {
        add(&mut adj, u, v);
    }
    for v in 0..n {
        while adj[v].len() < k {
            let candidates: Vec<Vertex> = (0..n).filter(|&u| u != v && !adj[v].contains(&u)).collect();
            let u = *candidates.choose(rng).expect("n > k leaves a non-neighbour");
            add(&mut adj, u, v);
        }
    }
    let max_edges = n * (n - 1) / 2;
    let mut remaining = extra;
    while remaining > 0 {
        let current: usize = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        if current >= max_edges {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !adj[u].contains(&v) {
            add(&mut adj, u, v);
            remaining -= 1;
        }
    }
    Ok(Graph::from_raw_adjacency(
        adj.into_iter().map(|s| s.into_iter().collect()).collect(),
    ))
}

/// Pairing model with incremental rejection: stubs are matched one random
/// pair at a time, rejecting loops and repeats, restarting when stuck.
fn random_regular(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Result<Graph, GraphError> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(invalid(format!("no {d}-regular graph on {n} vertices")));
    }
    if 2 * d > n - 1 {
        // Dense case: complement of a sparse regular graph.
        return Ok(random_regular(n, n - 1 - d, rng)?.complement());
    }
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        while !stubs.is_empty() {
            let mut placed = false;
            for _ in 0..(50 * stubs.len()) {
                let i = rng.gen_range(0..stubs.len());
                let j = rng.gen_range(0..stubs.len());
                let (u, v) = (stubs[i], stubs[j]);
                if i == j || u == v || adj[u].contains(&v) {
                    continue;
                }
                adj[u].push(v);
                adj[v].push(u);
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                placed = true;
                break;
            }
            if !placed {
                continue 'attempt;
            }
        }
        return Ok(Graph::from_raw_adjacency(adj));
    }
    Err(invalid(format!(
        "failed to sample a {d}-regular graph on {n} vertices"
    )))
}
