//! Worked examples through the public API, from parsing to verified models.

use lollipop_core::contraction::plan_all;
use lollipop_core::graph::{contract_edges, degeneracy, degree_stats, generate, parse_edge_list, Family};
use lollipop_core::lollipop::{chord_lower_bound, find_dense_cycle};
use lollipop_core::minor::{build_minor, verify_model, MinorSearch, TargetKind};
use lollipop_core::oracle::{cyclic_minor_exists, max_chords_over_cycles, Limits};
use lollipop_core::{Graph, GraphError};

fn family(f: Family) -> Graph {
    generate(&f, 0).unwrap()
}

#[test]
fn parsing() {
    assert_eq!(parse_edge_list("0 1\n1 2\n2 0").unwrap(), Graph::complete(3));
    assert_eq!(parse_edge_list("0 1\n0 1").unwrap().edge_count(), 1);
    let err = parse_edge_list("0 0").unwrap_err();
    assert_eq!(err, GraphError::LoopAtLine { line: 1 });
    assert_eq!(err.to_string(), "loop at line 1");
}

#[test]
fn small_contractions() {
    let c4 = Graph::cycle(4).unwrap();
    assert_eq!(contract_edges(&c4, &[(0, 1)]).unwrap().0, Graph::cycle(3).unwrap());
    assert_eq!(contract_edges(&Graph::complete(4), &[(2, 3)]).unwrap().0, Graph::complete(3));
}

/// Labels components of `(V, X)` by repeated relaxation, without the
/// union-find used by the library.
fn component_labels(n: usize, xs: &[(usize, usize)]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(u, v) in xs {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
    }
    label
}

#[test]
fn antipodal_edges_of_a_hexagon() {
    let c6 = Graph::cycle(6).unwrap();
    let xs = [(0, 1), (3, 4)];
    let (q, plan) = contract_edges(&c6, &xs).unwrap();
    assert_eq!(q.n(), 4);
    assert_eq!(q.edge_count(), 4);
    assert!((0..4).all(|v| q.degree(v) == 2) && q.is_connected());
    let labels = component_labels(6, &xs);
    for u in 0..6 {
        for v in 0..6 {
            assert_eq!(labels[u] == labels[v], plan.class_of[u] == plan.class_of[v]);
        }
    }
}

#[test]
fn degree_statistics() {
    let k6 = degree_stats(&Graph::complete(6)).unwrap();
    assert_eq!((k6.min_degree, k6.avg_string()), (5, "5".to_string()));
    let p = degree_stats(&family(Family::Petersen)).unwrap();
    assert_eq!((p.min_degree, p.avg_string()), (3, "3".to_string()));
    let star = degree_stats(&family(Family::Star { leaves: 4 })).unwrap();
    assert_eq!((star.min_degree, star.avg_string()), (1, "8/5".to_string()));
}

#[test]
fn degeneracies() {
    assert_eq!(degeneracy(&family(Family::RandomTree { n: 30 })).unwrap().degeneracy, 1);
    assert_eq!(degeneracy(&Graph::complete(5)).unwrap().degeneracy, 4);
    assert_eq!(degeneracy(&family(Family::Icosahedron)).unwrap().degeneracy, 5);
}

#[test]
fn generators() {
    let k77 = family(Family::CompleteBipartite { a: 7, b: 7 });
    assert_eq!((k77.n(), k77.edge_count()), (14, 49));
    let ico = family(Family::Icosahedron);
    assert_eq!((ico.n(), ico.edge_count()), (12, 30));
    assert!(ico.vertices().all(|v| ico.degree(v) == 5));
    let f = Family::RandomMinDegree { n: 50, k: 4, extra: 20 };
    let g = generate(&f, 7).unwrap();
    assert_eq!(g, generate(&f, 7).unwrap());
    assert!(g.min_degree().unwrap() >= 4);
}

#[test]
fn complete_six_end_to_end() {
    let g = Graph::complete(6);
    let cert = find_dense_cycle(&g, 5).unwrap();
    assert_eq!(cert.chords.len(), 9);
    assert_eq!(cert.high_degree_vertices.len(), 6);
    let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
    assert_eq!(r0.quotient, g);
    // c_1 is never active, so G_1 absorbs it into c_t.
    assert_eq!(r1.quotient, Graph::complete(5));
    assert!(r1.min_degree() >= 4);
    assert_eq!(r2.quotient, g);
    assert_eq!(r2.avg_degree(), 5.into());
}

#[test]
fn cycles_keep_minimum_degree_two() {
    for n in 3..12 {
        let g = Graph::cycle(n).unwrap();
        let cert = find_dense_cycle(&g, 2).unwrap();
        assert!(cert.chords.is_empty());
        // Active set {c_2, c_t} plus c_1.
        assert_eq!(cert.high_degree_vertices.len(), 3);
        let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
        assert_eq!(r0.quotient.n(), n.min(4));
        assert!(r0.quotient.is_cycle(&r0.quotient_cycle));
        assert_eq!(r1.min_degree(), 2);
        assert_eq!(r2.avg_degree(), 2.into());
    }
}

#[test]
fn petersen_end_to_end() {
    let g = family(Family::Petersen);
    let cert = find_dense_cycle(&g, 3).unwrap();
    assert_eq!(cert.cycle.len(), 9);
    assert_eq!(cert.chords.len(), 3);
    assert!(cert.chords.len() >= chord_lower_bound(3));
    assert!(cert.high_degree_vertices.len() >= 4);
    let (best, _) = max_chords_over_cycles(&g, &Limits::default()).unwrap().unwrap();
    assert_eq!(best, 3);

    let search = build_minor(&g, TargetKind::Clique(4)).unwrap();
    let model = search.model().unwrap();
    assert_eq!(verify_model(model), Ok(true));
    assert!(cyclic_minor_exists(&g, &Graph::complete(4), &Limits::default()).unwrap().is_some());
}

#[test]
fn dense_random_graphs_yield_k5_and_k6() {
    let g = generate(&Family::RandomMinDegree { n: 14, k: 12, extra: 0 }, 3).unwrap();
    for r in [5, 6] {
        match build_minor(&g, TargetKind::Clique(r)).unwrap() {
            MinorSearch::Found { model, .. } => assert_eq!(verify_model(&model), Ok(true)),
            MinorSearch::NotFound { .. } => panic!("no K{r} in a graph of minimum degree 12"),
        }
    }
}
