mod common;

use common::{eval_one, hecke_label, inversions, HeckeOracle};
use fiatcells::constructors::{kl_polynomial, make_hecke, Permutation};
use fiatcells::Multiset;

fn perm(w: &[usize]) -> Permutation {
    Permutation::from_one_line(w).unwrap()
}

#[test]
fn kl_polynomials_match_bar_invariant_basis() {
    for n in 2..=4 {
        let oracle = HeckeOracle::new(n);
        for w in &oracle.elements {
            for y in &oracle.elements {
                let want = oracle.kl(y, w);
                let got = kl_polynomial(n, &perm(y), &perm(w)).q_coeffs().unwrap_or_default();
                let trim = |v: &[i64]| {
                    let mut v = v.to_vec();
                    while v.last() == Some(&0) {
                        v.pop();
                    }
                    v
                };
                assert_eq!(trim(&got), trim(&want), "P[{y:?}, {w:?}] in S{n}");
            }
        }
    }
}

#[test]
fn oracle_knows_the_first_singular_polynomial() {
    let oracle = HeckeOracle::new(4);
    assert_eq!(oracle.kl(&vec![1, 3, 2, 4], &vec![3, 4, 1, 2]), vec![1, 1]);
    assert_eq!(oracle.kl(&vec![1, 2, 3, 4], &vec![4, 2, 3, 1]), vec![1, 1]);
}

#[test]
fn hecke_tables_match_structure_constants_at_one() {
    for n in 2..=4 {
        let oracle = HeckeOracle::new(n);
        let cat = make_hecke(n).unwrap();
        assert_eq!(cat.num_morphs(), oracle.elements.len());
        for x in &oracle.elements {
            for y in &oracle.elements {
                let g = cat.find_morph(&hecke_label(x)).unwrap();
                let f = cat.find_morph(&hecke_label(y)).unwrap();
                let want: Multiset = oracle
                    .structure_constants(x, y)
                    .iter()
                    .map(|(z, p)| (cat.find_morph(&hecke_label(z)).unwrap(), eval_one(p) as u64))
                    .filter(|(_, c)| *c > 0)
                    .collect();
                assert_eq!(cat.compose(g, f).unwrap(), &want, "{} ∘ {}", cat.label(g), cat.label(f));
            }
        }
    }
}

#[test]
fn longest_element_squares_to_n_factorial() {
    for (n, fact) in [(2, 2), (3, 6), (4, 24)] {
        let oracle = HeckeOracle::new(n);
        let w0: Vec<usize> = (1..=n).rev().collect();
        let sc = oracle.structure_constants(&w0, &w0);
        assert_eq!(sc.len(), 1);
        assert_eq!(eval_one(&sc[&w0]), fact);
        let cat = make_hecke(n).unwrap();
        let top = cat.find_morph(&hecke_label(&w0)).unwrap();
        assert_eq!(cat.compose(top, top).unwrap(), &Multiset::singleton(top, fact as u64));
        assert_eq!(inversions(&w0), n * (n - 1) / 2);
    }
}
