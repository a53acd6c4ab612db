//! Kazhdan–Lusztig polynomials and canonical-basis structure constants for
//! the symmetric group.
//!
//! Normalization: `b_w = Σ_y v^{ℓ(w)-ℓ(y)} P_{y,w}(v^{-2}) H_y` in the Hecke
//! algebra with `(H_s + v)(H_s - v^{-1}) = 0`, so `b_s b_s = (v + v^{-1}) b_s`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::laurent::LaurentPoly;
use super::perm::Permutation;

/// KL polynomials `P_{x,w}` for all pairs of `S_n`, with their μ-coefficients.
#[derive(Debug)]
pub struct KlTable {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    // left_mul[i-1][w] = index of s_i w
    left_mul: Vec<Vec<usize>>,
    // p[x * N + w], coefficients of q^0, q^1, ...; empty means zero
    p: Vec<Vec<i64>>,
    // mu[w] = (z, μ(z, w)) for z < w with μ != 0
    mu: Vec<Vec<(usize, i64)>>,
}

impl KlTable {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        let elements = Permutation::all(n);
        let big = elements.len();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let lengths: Vec<usize> = elements.iter().map(Permutation::length).collect();
        let left_mul: Vec<Vec<usize>> = (1..n)
            .map(|i| {
                elements
                    .iter()
                    .map(|w| index[&w.left_mul_simple(i)])
                    .collect()
            })
            .collect();

        let mut table = KlTable {
            n,
            elements,
            index,
            lengths,
            left_mul,
            p: vec![Vec::new(); big * big],
            mu: vec![Vec::new(); big],
        };
        table.p[0] = vec![1];
        for w in 1..big {
            table.fill_column(w);
        }
        table
    }

    fn fill_column(&mut self, w: usize) {
        let big = self.elements.len();
        let s = self.elements[w]
            .first_left_descent()
            .expect("non-identity has a descent");
        let sm = &self.left_mul[s - 1];
        let v = sm[w];
        let lw = self.lengths[w];
        let corrections: Vec<(usize, i64)> = self.mu[v]
            .iter()
            .copied()
            .filter(|&(z, _)| self.lengths[sm[z]] < self.lengths[z])
            .collect();
        for x in 0..big {
            let sx = sm[x];
            let c = usize::from(self.lengths[sx] < self.lengths[x]);
            let mut acc: Vec<i64> = Vec::new();
            add_shifted(&mut acc, &self.p[sx * big + v], 1 - c, 1);
            add_shifted(&mut acc, &self.p[x * big + v], c, 1);
            for &(z, mu) in &corrections {
                let shift = (lw - self.lengths[z]) / 2;
                add_shifted(&mut acc, &self.p[x * big + z], shift, -mu);
            }
            while acc.last() == Some(&0) {
                acc.pop();
            }
            self.p[x * big + w] = acc;
        }
        let mut mu = Vec::new();
        for z in 0..big {
            let d = lw as i64 - self.lengths[z] as i64;
            if d > 0 && d % 2 == 1 {
                let k = ((d - 1) / 2) as usize;
                let c = self.p[z * big + w].get(k).copied().unwrap_or(0);
                if c != 0 {
                    mu.push((z, c));
                }
            }
        }
        self.mu[w] = mu;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    /// Index of `s_i w`.
    pub fn left_mul(&self, i: usize, w: usize) -> usize {
        self.left_mul[i - 1][w]
    }

    /// Coefficients of `P_{x,w}` in `q`; empty when `x` is not below `w`.
    pub fn p_coeffs(&self, x: usize, w: usize) -> &[i64] {
        &self.p[x * self.elements.len() + w]
    }

    pub fn mu(&self, z: usize, w: usize) -> i64 {
        self.mu[w]
            .iter()
            .find(|&&(y, _)| y == z)
            .map_or(0, |&(_, m)| m)
    }

    pub fn mu_list(&self, w: usize) -> &[(usize, i64)] {
        &self.mu[w]
    }

    /// `b_s · Σ c_w b_w` for the simple reflection `s_i`.
    pub fn left_mul_canonical(&self, i: usize, vec: &[LaurentPoly]) -> Vec<LaurentPoly> {
        let q2 = LaurentPoly::quantum_two();
        let sm = &self.left_mul[i - 1];
        let mut out = vec![LaurentPoly::zero(); vec.len()];
        for (w, a) in vec.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sw = sm[w];
            if self.lengths[sw] < self.lengths[w] {
                out[w] += &(&q2 * a);
            } else {
                out[sw] += a;
                for &(z, mu) in &self.mu[w] {
                    if self.lengths[sm[z]] < self.lengths[z] {
                        out[z] += &a.scale(mu);
                    }
                }
            }
        }
        out
    }
}

fn add_shifted(acc: &mut Vec<i64>, src: &[i64], shift: usize, scale: i64) {
    if src.is_empty() {
        return;
    }
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, 0);
    }
    for (k, &c) in src.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

/// Memoized table for `S_n`, shared across threads.
pub fn kl_table(n: usize) -> Arc<KlTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KlTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("KL cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(KlTable::new(n)))
        .clone()
}

/// `P_{x,w}` as a Laurent polynomial in `v` with `q = v²`; zero unless
/// `x <= w` in Bruhat order.
pub fn kl_polynomial(n: usize, x: &Permutation, w: &Permutation) -> LaurentPoly {
    let table = kl_table(n);
    let (Some(xi), Some(wi)) = (table.index_of(x), table.index_of(w)) else {
        return LaurentPoly::zero();
    };
    LaurentPoly::from_q_coeffs(table.p_coeffs(xi, wi))
}

/// Structure constants `b_x b_y = Σ_z h_{x,y,z} b_z`.
#[derive(Debug)]
pub struct KlProducts {
    pub table: Arc<KlTable>,
    // prod[x * N + y] = sparse (z, h_{x,y,z})
    prod: Vec<Vec<(usize, LaurentPoly)>>,
}

impl KlProducts {
    pub fn new(table: Arc<KlTable>) -> Self {
        let big = table.len();
        let mut prod = vec![Vec::new(); big * big];
        for y in 0..big {
            let mut col: Vec<Vec<LaurentPoly>> = Vec::with_capacity(big);
            let mut unit = vec![LaurentPoly::zero(); big];
            unit[y] = LaurentPoly::one();
            col.push(unit);
            for x in 1..big {
                let s = table.element(x).first_left_descent().expect("descent");
                let xp = table.left_mul(s, x);
                // b_s b_{x'} = b_x + Σ μ(z, x') b_z over z < x' with s z < z
                let mut v = table.left_mul_canonical(s, &col[xp]);
                for &(z, mu) in table.mu_list(xp) {
                    if table.length(table.left_mul(s, z)) < table.length(z) {
                        for (k, c) in col[z].iter().enumerate() {
                            if !c.is_zero() {
                                v[k] -= &c.scale(mu);
                            }
                        }
                    }
                }
                col.push(v);
            }
            for (x, v) in col.into_iter().enumerate() {
                prod[x * big + y] = v
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        KlProducts { table, prod }
    }

    pub fn product(&self, x: usize, y: usize) -> &[(usize, LaurentPoly)] {
        &self.prod[x * self.table.len() + y]
    }

    pub fn coefficient(&self, x: usize, y: usize, z: usize) -> LaurentPoly {
        self.product(x, y)
            .iter()
            .find(|(k, _)| *k == z)
            .map_or_else(LaurentPoly::zero, |(_, c)| c.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn identity_normalization() {
        for n in 1..=4 {
            let t = kl_table(n);
            for w in 0..t.len() {
                assert_eq!(t.p_coeffs(w, w), &[1]);
            }
        }
    }

    #[test]
    fn s3_all_trivial() {
        let t = kl_table(3);
        for x in 0..t.len() {
            for w in 0..t.len() {
                let below = t.element(x).bruhat_leq(t.element(w));
                let want: &[i64] = if below { &[1] } else { &[] };
                assert_eq!(t.p_coeffs(x, w), want);
            }
        }
    }

    #[test]
    fn s4_singular_pair() {
        let w = Permutation::from_word(4, &[2, 1, 3, 2]).unwrap();
        assert_eq!(w, p("3 4 1 2"));
        let s2 = Permutation::simple(4, 2).unwrap();
        assert_eq!(kl_polynomial(4, &s2, &w).q_coeffs(), Some(vec![1, 1]));
        assert_eq!(
            kl_polynomial(4, &Permutation::identity(4), &w).q_coeffs(),
            Some(vec![1, 1])
        );
    }

    #[test]
    fn support_is_bruhat_interval_and_degree_bound() {
        for n in 2..=5 {
            let t = kl_table(n);
            for x in 0..t.len() {
                for w in 0..t.len() {
                    let c = t.p_coeffs(x, w);
                    let below = t.element(x).bruhat_leq(t.element(w));
                    assert_eq!(!c.is_empty(), below, "{} {}", t.element(x), t.element(w));
                    if below {
                        assert_eq!(c[0], 1);
                        assert!(c.iter().all(|&a| a >= 0));
                        if x != w {
                            let deg = (c.len() - 1) as i64;
                            let gap = t.length(w) as i64 - t.length(x) as i64;
                            assert!(2 * deg < gap);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quadratic_relation_in_canonical_basis() {
        let t = kl_table(3);
        let prods = KlProducts::new(t.clone());
        let s = t.index_of(&Permutation::simple(3, 1).unwrap()).unwrap();
        assert_eq!(prods.product(s, s), &[(s, LaurentPoly::quantum_two())]);
        let w0 = t.len() - 1;
        let q2 = LaurentPoly::quantum_two();
        let q2_cubed = &(&q2 * &q2) * &q2;
        assert_eq!(prods.product(w0, w0), &[(w0, &q2_cubed - &q2)]);
    }
}
