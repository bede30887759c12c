//! Broken promises surface as checkable witnesses, never as bad output.

use pancyc::lemmas::{absorb_vertex, delete_one_vertex};
use pancyc::toolbox::shorten_path;
use pancyc::{Cycle, Error, Graph, Path, Witness};

fn assert_independent_witness(g: &Graph, err: Error, k: usize) {
    match err {
        Error::HypothesisViolation {
            witness: Witness::IndependentSet(set),
            ..
        } => {
            assert!(set.len() > k, "witness {set:?} is not larger than k = {k}");
            for &u in &set {
                for &v in &set {
                    assert!(!g.has_edge(u, v), "witness {set:?} has edge {u}-{v}");
                }
            }
        }
        Error::HypothesisViolation { witness, .. } => {
            // a low-degree system certifies alpha > k only indirectly; it
            // must at least name vertices of the graph
            assert!(witness.vertices().iter().all(|&v| v < g.n()));
        }
        other => panic!("expected a hypothesis violation, got {other}"),
    }
}

#[test]
fn shortening_a_bare_path() {
    let g = Graph::path(30);
    let p = Path::new((0..30).collect());
    for k in 1..=4 {
        let err = shorten_path(&g, &p, 3, k).unwrap_err();
        assert_independent_witness(&g, err, k);
    }
}

#[test]
fn absorbing_into_a_triangle_free_graph() {
    // C_20 plus a vertex joined to every other cycle vertex
    let mut edges: Vec<(usize, usize)> = (0..20).map(|i| (i, (i + 1) % 20)).collect();
    edges.extend((0..20).step_by(2).map(|i| (20, i)));
    let g = Graph::from_edges(21, edges).unwrap();
    let err = absorb_vertex(&g, &Cycle::new((0..20).collect()), 20, 2).unwrap_err();
    assert_independent_witness(&g, err, 2);
}

#[test]
fn deleting_from_a_bare_cycle() {
    let g = Graph::cycle(40);
    let err = delete_one_vertex(&g, &Cycle::new((0..40).collect()), 2).unwrap_err();
    assert_independent_witness(&g, err, 2);
}
