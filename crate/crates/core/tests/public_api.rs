use std::sync::Arc;
use std::thread;

use ugqsym::invariants::{invariant_vector, iso_test};
use ugqsym::series::evaluate;
use ugqsym::{Algebra, CanonGraph, LabeledGraph, Limits};

fn g(edges: &[(u32, u32)]) -> CanonGraph {
    CanonGraph::from_edges(edges.iter().copied()).unwrap()
}

#[test]
fn labeled_input_is_canonicalized() {
    let path = LabeledGraph::from_edges([(7, 2), (2, 9)]).unwrap();
    let c = ugqsym::graph::canonical(&path).unwrap();
    assert_eq!(c, g(&[(1, 2), (1, 3)]));
    assert_eq!(c.to_string(), "[1-2,1-3]");
}

#[test]
fn product_evaluates_pointwise() {
    let alg = Algebra::default();
    let k2 = g(&[(1, 2)]);
    let p3 = g(&[(1, 2), (2, 3)]);
    let prod = alg.multiply_basis(&k2, &p3).unwrap();
    for host in [
        g(&[(1, 2), (2, 3), (3, 4), (1, 4)]),
        g(&[(1, 2), (1, 3), (1, 4), (2, 3)]),
    ] {
        let lhs = ugqsym::hopf::evaluate_element(&prod, &host);
        let rhs = ugqsym::hopf::ratio((evaluate(&k2, &host) * evaluate(&p3, &host)) as i64);
        assert_eq!(lhs, rhs, "{host}");
    }
}

#[test]
fn shared_algebra_across_threads() {
    let alg = Arc::new(Algebra::default());
    let x = g(&[(1, 2), (3, 4), (5, 6)]);
    let expected = Algebra::default().antipode_basis(&x).unwrap();
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let (alg, x) = (alg.clone(), x.clone());
            thread::spawn(move || alg.antipode_basis(&x).unwrap())
        })
        .collect();
    for h in handles {
        assert_eq!(*h.join().unwrap(), *expected);
    }
}

#[test]
fn vectors_separate_five_cycle_from_bull() {
    let limits = Limits::default();
    let c5 = g(&[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
    let bull = g(&[(1, 2), (1, 3), (2, 3), (1, 4), (2, 5)]);
    assert!(!iso_test(&c5, &bull, &limits).unwrap());
    let v = invariant_vector(&c5, 5, &limits).unwrap();
    assert_eq!(v.values()[0], 5);
}
