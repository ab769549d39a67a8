use super::{edge, Edge, Graph, Vertex};
use crate::error::GraphError;

/// Record of a contraction: which edges were contracted and where each host
/// vertex ended up.
///
/// Classes are the connected components of `(V(host), contracted_edges)`.
/// When the contraction was done along a distinguished cycle, `arcs` holds
/// the classes that lie on it as vertex sequences in cycle order, and class
/// `i` of the quotient is `arcs[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionPlan {
    pub host: Graph,
    pub contracted_edges: Vec<Edge>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<Vertex>>,
    pub arcs: Option<Vec<Vec<Vertex>>>,
}

impl ContractionPlan {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Quotient of `g` by the partition `class_of` (values in `0..class_count`).
/// Loops are dropped and parallel edges merged.
pub fn quotient_by_classes(g: &Graph, class_of: &[usize], class_count: usize) -> Graph {
    let mut adj = vec![Vec::new(); class_count];
    for (u, v) in g.edges() {
        let (a, b) = (class_of[u], class_of[v]);
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    Graph::from_raw_adjacency(adj)
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Contracts every edge in `edges` and returns the simplified quotient.
/// Quotient vertices are numbered by the smallest host vertex of their class.
pub fn contract_edges(g: &Graph, edges: &[Edge]) -> Result<(Graph, ContractionPlan), GraphError> {
    let mut sets = DisjointSets::new(g.n());
    let mut contracted = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(GraphError::MissingEdge(edge(u, v)));
        }
        sets.union(u, v);
        contracted.push(edge(u, v));
    }
    contracted.sort_unstable();
    contracted.dedup();

    // Roots are class minima because union keeps the smaller root.
    let mut id_of_root = vec![usize::MAX; g.n()];
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let mut class_of = vec![0; g.n()];
    for v in g.vertices() {
        let r = sets.find(v);
        if id_of_root[r] == usize::MAX {
            id_of_root[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[v] = id_of_root[r];
        classes[class_of[v]].push(v);
    }
    let quotient = quotient_by_classes(g, &class_of, classes.len());
    Ok((
        quotient,
        ContractionPlan {
            host: g.clone(),
            contracted_edges: contracted,
            class_of,
            classes,
            arcs: None,
        },
    ))
}

/// Contracts the cycle edges `cycle[i] cycle[i+1]` for which `contract[i]`
/// holds (indices mod `t`). The resulting arcs become quotient vertices
/// `0..r` in cycle order, starting with the arc that contains `cycle[0]`;
/// vertices off the cycle follow as singletons in ascending order.
///
/// The quotient cycle is therefore `0, 1, …, r-1`.
pub fn contract_along_cycle(
    g: &Graph,
    cycle: &[Vertex],
    contract: &[bool],
) -> Result<(Graph, ContractionPlan), GraphError> {
    let t = cycle.len();
    if contract.len() != t {
        return Err(GraphError::InvalidParameters(format!(
            "{} contraction flags for a cycle of length {t}",
            contract.len()
        )));
    }
    if !g.is_cycle(cycle) {
        return Err(GraphError::InvalidParameters(
            "sequence is not a cycle of the graph".into(),
        ));
    }
    // Walk back from position 0 to the start of its arc.
    let mut start = 0;
    let mut steps = 0;
    while steps < t && contract[(start + t - 1) % t] {
        start = (start + t - 1) % t;
        steps += 1;
    }
    let mut arcs: Vec<Vec<Vertex>> = Vec::new();
    let mut current = Vec::new();
    for offset in 0..t {
        let i = (start + offset) % t;
        current.push(cycle[i]);
        if !contract[i] || offset == t - 1 {
            arcs.push(std::mem::take(&mut current));
        }
    }

    let mut class_of = vec![usize::MAX; g.n()];
    for (id, arc) in arcs.iter().enumerate() {
        for &v in arc {
            class_of[v] = id;
        }
    }
    let mut classes = arcs.clone();
    for v in g.vertices() {
        if class_of[v] == usize::MAX {
            class_of[v] = classes.len();
            classes.push(vec![v]);
        }
    }
    let mut contracted: Vec<Edge> = (0..t)
        .filter(|&i| contract[i])
        .map(|i| edge(cycle[i], cycle[(i + 1) % t]))
        .collect();
    contracted.sort_unstable();
    let quotient = quotient_by_classes(g, &class_of, classes.len());
    Ok((
        quotient,
        ContractionPlan {
            host: g.clone(),
            contracted_edges: contracted,
            class_of,
            classes,
            arcs: Some(arcs),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Component labelling by repeated relaxation; shares nothing with the
    /// union-find above.
    fn component_oracle(n: usize, edges: &[Edge]) -> Vec<usize> {
        let mut label: Vec<usize> = (0..n).collect();
        loop {
            let mut changed = false;
            for &(u, v) in edges {
                let m = label[u].min(label[v]);
                if label[u] != m || label[v] != m {
                    label[u] = m;
                    label[v] = m;
                    changed = true;
                }
            }
            if !changed {
                return label;
            }
        }
    }

    #[test]
    fn c4_contract_one_edge_is_c3() {
        let (q, plan) = contract_edges(&Graph::cycle(4).unwrap(), &[(0, 1)]).unwrap();
        assert_eq!(q, Graph::complete(3));
        assert_eq!(plan.class_of, vec![0, 0, 1, 2]);
    }

    #[test]
    fn k4_contract_one_edge_merges_parallels() {
        let (q, _) = contract_edges(&Graph::complete(4), &[(2, 3)]).unwrap();
        assert_eq!(q, Graph::complete(3));
    }

    #[test]
    fn c6_antipodal_edges_give_c4() {
        let c6 = Graph::cycle(6).unwrap();
        let x0 = [(0, 1), (3, 4)];
        let (q, plan) = contract_edges(&c6, &x0).unwrap();
        assert_eq!(q.n(), 4);
        assert!(q.is_cycle(&[0, 1, 2, 3]));
        assert_eq!(q.edge_count(), 4);
        let labels = component_oracle(6, &x0);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(labels[u] == labels[v], plan.class_of[u] == plan.class_of[v]);
            }
        }
    }

    #[test]
    fn missing_edge_is_rejected() {
        assert_eq!(
            contract_edges(&Graph::cycle(5).unwrap(), &[(0, 2)]).unwrap_err(),
            GraphError::MissingEdge((0, 2))
        );
    }

    #[test]
    fn along_cycle_wraps_first_arc() {
        let c6 = Graph::cycle(6).unwrap();
        // Contract 5-0 and 2-3: arcs [5,0], [1], [2,3], [4].
        let flags = [false, false, true, false, false, true];
        let (q, plan) = contract_along_cycle(&c6, &[0, 1, 2, 3, 4, 5], &flags).unwrap();
        assert_eq!(
            plan.arcs.as_deref().unwrap(),
            &[vec![5, 0], vec![1], vec![2, 3], vec![4]]
        );
        assert!(q.is_cycle(&[0, 1, 2, 3]));
        assert_eq!(plan.contracted_edges, vec![(0, 5), (2, 3)]);
    }

    #[test]
    fn along_cycle_everything_contracted() {
        let c5 = Graph::cycle(5).unwrap();
        let (q, plan) = contract_along_cycle(&c5, &[0, 1, 2, 3, 4], &[true; 5]).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(plan.arcs.unwrap().len(), 1);
    }
}
