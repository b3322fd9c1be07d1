// Small exact values, each computed by hand or by an independent route and
// frozen here.

use std::sync::Arc;

use cluster_denominators::cluster::{d_vector, ClusterAlgebra};
use cluster_denominators::coxeter::{CoxeterWord, Family, GeneratorWord, RootSystem};
use cluster_denominators::geometry::PolygonModel;
use cluster_denominators::laurent::LaurentPolynomial;
use cluster_denominators::roots::{AlmostPositiveRoot, RootModel};
use cluster_denominators::subword::SubwordComplex;

fn rs(f: Family, n: usize) -> Arc<RootSystem> {
    Arc::new(RootSystem::of_type(f, n).unwrap())
}

fn word(s: &str) -> GeneratorWord {
    GeneratorWord::parse_one_based(s).unwrap()
}

fn a2() -> RootModel {
    RootModel::of_type(rs(Family::A, 2), &word("1,2")).unwrap()
}

fn root(model: &RootModel, coords: &[i64]) -> AlmostPositiveRoot {
    model.root(coords.to_vec()).unwrap()
}

#[test]
fn positive_root_counts() {
    let expected = [
        (Family::A, 1, 1),
        (Family::A, 2, 3),
        (Family::A, 4, 10),
        (Family::B, 3, 9),
        (Family::C, 3, 9),
        (Family::D, 4, 12),
        (Family::D, 5, 20),
        (Family::E, 6, 36),
        (Family::E, 7, 63),
        (Family::E, 8, 120),
        (Family::F, 4, 24),
        (Family::G, 2, 6),
    ];
    for (f, n, big_n) in expected {
        assert_eq!(rs(f, n).num_positive(), big_n, "{f}{n}");
    }
}

#[test]
fn sorting_words_and_q_words() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.c_sorting_word(&word("1,2")).unwrap().to_one_based(), vec![1, 2, 1]);
    let q = CoxeterWord::new(&a2, &word("1,2")).unwrap();
    assert_eq!(q.letters(), &[0, 1, 0, 1, 0]);
    let a1 = rs(Family::A, 1);
    assert_eq!(CoxeterWord::new(&a1, &word("1")).unwrap().letters(), &[0, 0]);
    let b2 = rs(Family::B, 2);
    assert_eq!(CoxeterWord::new(&b2, &word("1,2")).unwrap().len(), 6);
    let a3 = rs(Family::A, 3);
    let sorting = a3.c_sorting_word(&word("1,2,3")).unwrap();
    assert_eq!(sorting.len(), 6);
    assert!(a3.is_reduced(&sorting));
    assert_eq!(&a3.evaluate_word(&sorting), a3.longest_element());
}

#[test]
fn eta_values() {
    assert_eq!(rs(Family::A, 2).eta(0), 1);
    assert_eq!(rs(Family::B, 2).eta(0), 0);
    let d4 = rs(Family::D, 4);
    assert!((0..4).all(|s| d4.eta(s) == s));
    let d5 = rs(Family::D, 5);
    assert_eq!((0..5).map(|s| d5.eta(s)).collect::<Vec<_>>(), vec![0, 1, 2, 4, 3]);
}

#[test]
fn a2_positions() {
    let sc = SubwordComplex::new(rs(Family::A, 2), &word("1,2")).unwrap();
    assert!(sc.is_c_cluster(&[0, 1]).unwrap());
    assert!(!sc.is_c_cluster(&[0, 2]).unwrap());
    let start = sc.initial_cluster();
    assert_eq!(sc.root_function(&start, 3), vec![1, 1]);
    assert_eq!(sc.root_function(&start, 4), vec![0, 1]);
    let (j1, _) = sc.flip(&start, 0).unwrap();
    let (j2, _) = sc.flip(&start, 1).unwrap();
    assert_eq!((j1.to_one_based(), j2.to_one_based()), (vec![2, 3], vec![1, 5]));
    assert_eq!((sc.compat_coeff(0, 3).unwrap(), sc.compat_coeff(1, 3).unwrap()), (1, 1));
    assert_eq!(sc.compat_coeff(0, 1).unwrap(), 0);
    assert_eq!(sc.rotation(), &[2, 3, 4, 0, 1]);
    let sc1 = SubwordComplex::new(rs(Family::A, 1), &word("1")).unwrap();
    assert_eq!(sc1.rotation(), &[1, 0]);
}

#[test]
fn a2_jump() {
    let sc = SubwordComplex::new(rs(Family::A, 2), &word("1,2")).unwrap();
    let jump = sc.jump().unwrap();
    assert_eq!(jump.target().word().letters(), &[1, 0, 1, 0, 1]);
    assert!(jump.target().is_c_cluster(&jump.map_positions(&[0, 1])).unwrap());
}

#[test]
fn a2_roots() {
    let m = a2();
    let theta: Vec<String> = (0..5).map(|j| m.theta(j).to_string()).collect();
    assert_eq!(theta, ["-α1", "-α2", "α1", "α1+α2", "α2"]);
    assert_eq!(m.c_compat(&root(&m, &[-1, 0]), &root(&m, &[1, 1])).unwrap(), 1);
    assert_eq!(m.c_compat(&root(&m, &[1, 0]), &root(&m, &[0, 1])).unwrap(), 1);
    for a in m.almost_positive_roots() {
        assert_eq!(m.c_compat(a, a).unwrap(), -1);
    }
    let basis = [root(&m, &[1, 0]), root(&m, &[0, -1])];
    assert_eq!(m.dvector_from_roots(&basis, &root(&m, &[0, 1])).unwrap(), vec![1, 1]);
    let initial = [root(&m, &[-1, 0]), root(&m, &[0, -1])];
    assert_eq!(m.dvector_from_roots(&initial, &root(&m, &[1, 1])).unwrap(), vec![1, 1]);
    assert!(m.dvector_from_roots(&[root(&m, &[1, 0]), root(&m, &[0, 1])], &root(&m, &[1, 1])).is_err());
}

#[test]
fn a2_variables_and_dvectors() {
    let alg = ClusterAlgebra::new(a2(), 100).unwrap();
    let lp = |s: &str| LaurentPolynomial::parse(2, s).unwrap();
    let expected = [
        "x1",
        "x2",
        "x1^-1 + x1^-1*x2",
        "x1^-1*x2^-1 + x1^-1 + x2^-1",
        "x2^-1 + x1*x2^-1",
    ];
    for (j, e) in expected.iter().enumerate() {
        assert_eq!(alg.variable(alg.psi(j)), &lp(e));
    }
    let dvecs: Vec<Vec<i64>> = (0..5).map(|j| d_vector(alg.variable(alg.psi(j)))).collect();
    assert_eq!(dvecs, vec![vec![-1, 0], vec![0, -1], vec![1, 0], vec![1, 1], vec![0, 1]]);
    assert_eq!(alg.compat_degree_vars(alg.psi(0), alg.psi(3)).unwrap(), 1);
}

#[test]
fn canonical_strings() {
    let alg = ClusterAlgebra::new(a2(), 100).unwrap();
    assert_eq!(alg.variable(alg.psi(2)).to_canonical_string(), "x1^-1 + x1^-1*x2^1");
    assert_eq!(alg.variable(alg.psi(3)).to_canonical_string(), "x1^-1*x2^-1 + x1^-1 + x2^-1");
}

#[test]
fn b2_variables() {
    let b2 = rs(Family::B, 2);
    let alg = ClusterAlgebra::of_type(b2, &word("1,2"), 100).unwrap();
    let got: Vec<String> = (0..6).map(|j| alg.variable(alg.psi(j)).to_canonical_string()).collect();
    assert_eq!(
        got,
        [
            "x1^1",
            "x2^1",
            "x1^-1 + x1^-1*x2^2",
            "x1^-1*x2^-1 + x1^-1*x2^1 + x2^-1",
            "x1^-1*x2^-2 + x1^-1 + 2*x2^-2 + x1^1*x2^-2",
            "x2^-1 + x1^1*x2^-1",
        ]
    );
    // (1 + x1 + x2^2)/(x1 x2) and ((1 + x1)^2 + x2^2)/(x1 x2^2) by hand
    let dvecs: Vec<String> = (0..6).map(|j| alg.roots().theta(j).to_string()).collect();
    assert_eq!(dvecs, ["-α1", "-α2", "α1", "α1+α2", "α1+2α2", "α2"]);
}

#[test]
fn polygon_values() {
    let p = PolygonModel::new(Family::A, 2).unwrap();
    let d = |u, v| p.diagonal(u, v).unwrap();
    assert_eq!(p.crossing_number(d(0, 2), d(1, 3)).unwrap(), 1);
    let t = [d(0, 2), d(0, 3)];
    assert_eq!(p.crossing_vector(&t, d(1, 4)).unwrap(), vec![1, 1]);
    assert_eq!(p.crossing_vector(&t, d(1, 3)).unwrap(), vec![1, 0]);
    assert_eq!(p.crossing_vector(&t, d(0, 2)).unwrap(), vec![-1, 0]);
    assert_eq!(PolygonModel::new(Family::A, 1).unwrap().enumerate_geometric_clusters().len(), 2);
    assert_eq!(PolygonModel::new(Family::C, 2).unwrap().enumerate_geometric_clusters().len(), 6);
}
