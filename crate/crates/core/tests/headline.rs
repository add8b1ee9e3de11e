use srg_core::constructions::{
    cayley_latin, chang, complement, lattice, quadric_graph, symplectic_graph, triangular, QuadricSign,
};
use srg_core::{kappa2_exact, ConstructedGraph, Kappa2, Kappa2Options};

fn closed_value(cg: &ConstructedGraph) -> usize {
    let r = kappa2_exact(&cg.graph, &Kappa2Options::default()).unwrap();
    assert!(r.closed, "{}", cg.spec);
    let cert = r.certificate.as_ref().unwrap();
    assert_eq!(cert.check(&cg.graph), Ok(()));
    r.value.value().unwrap()
}

#[test]
fn triangular_graphs() {
    for m in 6..=8 {
        assert_eq!(closed_value(&triangular(m).unwrap()), 3 * m - 9);
    }
}

#[test]
fn lattice_graphs() {
    for n in 3..=6 {
        assert_eq!(closed_value(&lattice(n).unwrap()), 3 * n - 4);
    }
}

#[test]
fn latin_square_graphs() {
    for n in 5..=6 {
        assert_eq!(closed_value(&cayley_latin(n).unwrap()), 5 * n - 8);
    }
}

#[test]
fn small_symplectic_and_quadric_graphs() {
    assert_eq!(closed_value(&symplectic_graph(2, 2).unwrap()), 9);
    assert_eq!(closed_value(&quadric_graph(QuadricSign::Plus, 3).unwrap()), 15);
    assert_eq!(closed_value(&quadric_graph(QuadricSign::Minus, 3).unwrap()), 27);
}

#[test]
fn chang_graphs() {
    for i in 1..=3 {
        assert_eq!(closed_value(&chang(i).unwrap()), 16);
    }
}

#[test]
fn sp43() {
    assert_eq!(closed_value(&symplectic_graph(2, 3).unwrap()), 32);
}

#[test]
fn petersen_complement_has_no_valid_cut() {
    let t5 = triangular(5).unwrap();
    let r = kappa2_exact(&t5.graph, &Kappa2Options::default()).unwrap();
    assert_eq!(r.value, Kappa2::NoValidCut);
    assert!(r.closed);
    let petersen = complement(&t5).unwrap();
    assert!(kappa2_exact(&petersen.graph, &Kappa2Options::default())
        .unwrap()
        .value
        .value()
        .is_some());
}

#[test]
fn sp62() {
    assert_eq!(closed_value(&symplectic_graph(3, 2).unwrap()), 45);
}
