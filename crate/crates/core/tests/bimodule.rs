use std::sync::Arc;
use std::time::Instant;

use fiatcells::bimodule::linalg::q;
use fiatcells::bimodule::{
    cartan_of, hom_space, load_algebras, realize_ca, tensor_over, verify_exm2, Algebra, Bimodule, Q,
    DEFAULT_MAX_DIM,
};
use fiatcells::constructors::make_ca;
use fiatcells::{find_isomorphism, validate};

/// Zigzag algebra of two vertices: paths `a: 1 → 2`, `b: 2 → 1` with
/// `aba = bab = 0`. Symmetric with Cartan matrix `[[2, 1], [1, 2]]`.
fn zigzag() -> Algebra {
    let labels = ["e1", "e2", "a", "b", "ab", "ba"];
    let n = labels.len();
    let idx = |l: &str| labels.iter().position(|&x| x == l).unwrap();
    let mut mult = vec![vec![vec![q(0); n]; n]; n];
    let rules = [
        ("e1", "e1", "e1"),
        ("e2", "e2", "e2"),
        ("e1", "a", "a"),
        ("a", "e2", "a"),
        ("e2", "b", "b"),
        ("b", "e1", "b"),
        ("e1", "ab", "ab"),
        ("ab", "e1", "ab"),
        ("e2", "ba", "ba"),
        ("ba", "e2", "ba"),
        ("a", "b", "ab"),
        ("b", "a", "ba"),
    ];
    for (x, y, z) in rules {
        mult[idx(x)][idx(y)][idx(z)] = q(1);
    }
    let basis = |k: usize| -> Vec<Q> { (0..n).map(|i| q((i == k) as i64)).collect() };
    let unit: Vec<Q> = basis(0).iter().zip(basis(1)).map(|(a, b)| a + b).collect();
    Algebra::new(labels.iter().map(|s| s.to_string()).collect(), mult, unit, vec![basis(0), basis(1)]).unwrap()
}

#[test]
fn realized_tables_match_formula() {
    let cases: Vec<Vec<Algebra>> = vec![
        vec![Algebra::field()],
        vec![Algebra::dual_numbers()],
        vec![Algebra::field(), Algebra::dual_numbers()],
        vec![Algebra::dual_numbers(), Algebra::field(), Algebra::field()],
        vec![zigzag()],
    ];
    for algs in cases {
        let data = cartan_of(&algs).unwrap();
        let realized = realize_ca(&algs, DEFAULT_MAX_DIM).unwrap();
        assert!(validate(&realized).is_valid());
        assert_eq!(realized, make_ca(&data).unwrap(), "{:?}", data.components);
    }
}

#[test]
fn zigzag_cartan_matrix() {
    assert_eq!(cartan_of(&[zigzag()]).unwrap().components, vec![vec![vec![2, 1], vec![1, 2]]]);
}

#[test]
fn fixture_algebras_load_and_realize() {
    let algs = load_algebras(include_str!("fixtures/algebras_dual.json")).unwrap();
    let realized = realize_ca(&algs, DEFAULT_MAX_DIM).unwrap();
    assert!(find_isomorphism(&realized, &fiatcells::constructors::make_s2()).is_some());
}

fn corner_dim(m: &Bimodule, e: &[Q], f: &[Q]) -> usize {
    (&m.act_left(e) * &m.act_right(f)).rank()
}

#[test]
fn hom_from_projective_is_a_corner() {
    for a in [Arc::new(zigzag()), Arc::new(Algebra::direct_sum(&[Algebra::field(), Algebra::dual_numbers()]))] {
        let idem = a.idempotents().to_vec();
        let mut targets = vec![Bimodule::regular(&a)];
        for e in &idem {
            for f in &idem {
                targets.push(Bimodule::projective(&a, e, f, &a));
            }
        }
        let p = Bimodule::projective(&a, &idem[0], &idem[idem.len() - 1], &a);
        targets.push(tensor_over(&p, &Bimodule::regular(&a), DEFAULT_MAX_DIM).unwrap());
        targets.push(tensor_over(&p, &p, DEFAULT_MAX_DIM).unwrap());
        for m in &targets {
            for e in &idem {
                for f in &idem {
                    let proj = Bimodule::projective(&a, e, f, &a);
                    assert_eq!(hom_space(&proj, m).unwrap().len(), corner_dim(m, e, f));
                }
            }
        }
    }
}

#[test]
fn exm2_relations_and_timing() {
    let start = Instant::now();
    let report = verify_exm2();
    assert!(report.all_pass(), "{report:?}");
    assert_eq!(report.hom_dims, [4, 2, 2, 2]);
    assert!(start.elapsed().as_secs_f64() < 5.0);
}
