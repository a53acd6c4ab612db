//! Reference implementations used only by tests. Nothing here calls the
//! library's cell, KL or m-coefficient code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fiatcells::constructors::{make_ca, make_hecke, make_s2, make_sl2_singular, random_cartan_data, CartanData};
use fiatcells::{MorphId, MultiCat, Multiset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn comp(cat: &MultiCat, g: MorphId, f: MorphId) -> Option<&Multiset> {
    cat.compose(g, f).ok()
}

/// Laurent polynomial in `v` as exponent -> coefficient.
pub type Poly = BTreeMap<i32, i64>;

fn add_into(acc: &mut Poly, p: &Poly, scale: i64, shift: i32) {
    for (&e, &c) in p {
        let slot = acc.entry(e + shift).or_insert(0);
        *slot += c * scale;
        if *slot == 0 {
            acc.remove(&(e + shift));
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e, &c) in a {
        add_into(&mut out, b, c, e);
    }
    out
}

/// One-line notation, values `1..=n`.
pub type Perm = Vec<usize>;

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// `s_i w`: swaps the values `i` and `i + 1`.
fn s_times(i: usize, w: &[usize]) -> Perm {
    w.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect()
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Element of the Hecke algebra in the standard basis.
pub type HeckeElt = BTreeMap<Perm, Poly>;

/// `H_s · x` with `H_s² = 1 + (v⁻¹ - v) H_s`.
fn left_mul_s(i: usize, x: &HeckeElt) -> HeckeElt {
    let mut out = HeckeElt::new();
    for (w, p) in x {
        let sw = s_times(i, w);
        if inversions(&sw) > inversions(w) {
            add_into(out.entry(sw).or_default(), p, 1, 0);
        } else {
            add_into(out.entry(sw).or_default(), p, 1, 0);
            let slot = out.entry(w.clone()).or_default();
            add_into(slot, p, 1, -1);
            add_into(slot, p, -1, 1);
        }
    }
    out.retain(|_, p| !p.is_empty());
    out
}

/// Reduced word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    // peel left descents: s_i w < w iff i+1 appears before i
    while let Some(i) = (1..w.len()).find(|&i| {
        let (pi, pj) = (w.iter().position(|&x| x == i).unwrap(), w.iter().position(|&x| x == i + 1).unwrap());
        pj < pi
    }) {
        word.push(i);
        w = s_times(i, &w);
    }
    word
}

fn left_mul_standard(w: &[usize], x: &HeckeElt) -> HeckeElt {
    let mut out = x.clone();
    for &i in reduced_word(w).iter().rev() {
        out = left_mul_s(i, &out);
    }
    out
}

pub fn hecke_mul(a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
    let mut out = HeckeElt::new();
    for (w, p) in a {
        for (y, q) in left_mul_standard(w, b) {
            add_into(out.entry(y).or_default(), &mul(p, &q), 1, 0);
        }
    }
    out.retain(|_, p| !p.is_empty());
    out
}

/// Canonical basis: the unique bar-invariant `b_w ∈ H_w + Σ v Z[v] H_y`,
/// built as `b_s b_{w'}` minus lower corrections.
pub struct HeckeOracle {
    pub n: usize,
    pub elements: Vec<Perm>,
    pub canonical: BTreeMap<Perm, HeckeElt>,
}

impl HeckeOracle {
    pub fn new(n: usize) -> Self {
        let mut elements = all_perms(n);
        elements.sort_by_key(|w| inversions(w));
        let mut canonical: BTreeMap<Perm, HeckeElt> = BTreeMap::new();
        let id: Perm = (1..=n).collect();
        canonical.insert(id.clone(), HeckeElt::from([(id.clone(), Poly::from([(0, 1)]))]));
        for w in &elements[1..] {
            let i = reduced_word(w)[0];
            let shorter = s_times(i, w);
            let mut bs = HeckeElt::new();
            bs.insert(s_times(i, &id), Poly::from([(0, 1)]));
            bs.insert(id.clone(), Poly::from([(1, 1)]));
            let mut x = hecke_mul(&bs, &canonical[&shorter]);
            let mut lower: Vec<&Perm> = x.keys().filter(|y| *y != w).collect::<Vec<_>>();
            lower.sort_by_key(|y| std::cmp::Reverse(inversions(y)));
            let lower: Vec<Perm> = lower.into_iter().cloned().collect();
            for y in lower {
                let c = x.get(&y).and_then(|p| p.get(&0)).copied().unwrap_or(0);
                if c != 0 {
                    for (z, p) in &canonical[&y] {
                        add_into(x.entry(z.clone()).or_default(), p, -c, 0);
                    }
                    x.retain(|_, p| !p.is_empty());
                }
            }
            canonical.insert(w.clone(), x);
        }
        HeckeOracle { n, elements, canonical }
    }

    /// KL polynomial `P_{y,w}` as coefficients of `q^0, q^1, ...`.
    pub fn kl(&self, y: &Perm, w: &Perm) -> Vec<i64> {
        let h = self.canonical[w].get(y).cloned().unwrap_or_default();
        let d = inversions(w) as i32 - inversions(y) as i32;
        let mut out = Vec::new();
        for (&e, &c) in &h {
            // v^{d - 2j} ↔ q^j
            let j = ((d - e) / 2) as usize;
            assert_eq!((d - e) % 2, 0);
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            out[j] = c;
        }
        out
    }

    /// `b_x b_y` in the canonical basis, peeled off from the top.
    pub fn structure_constants(&self, x: &Perm, y: &Perm) -> BTreeMap<Perm, Poly> {
        let mut rest = hecke_mul(&self.canonical[x], &self.canonical[y]);
        let mut out = BTreeMap::new();
        while let Some(top) = rest.keys().max_by_key(|w| (inversions(w), (*w).clone())).cloned() {
            let c = rest[&top].clone();
            for (z, p) in &self.canonical[&top] {
                let prod = mul(&c, p);
                add_into(rest.entry(z.clone()).or_default(), &prod, -1, 0);
            }
            rest.retain(|_, p| !p.is_empty());
            out.insert(top, c);
        }
        out
    }
}

pub fn eval_one(p: &Poly) -> i64 {
    p.values().sum()
}

pub fn hecke_label(w: &[usize]) -> String {
    if w.iter().enumerate().all(|(i, &x)| x == i + 1) {
        "1".into()
    } else {
        format!("theta_{}", w.iter().map(|x| x.to_string()).collect::<String>())
    }
}

/// Reflexive transitive closure of `f -> k` for `k` a summand of `h∘f`
/// (right) or `f∘h` (left), by Floyd-Warshall.
pub fn naive_order(cat: &MultiCat, right: bool, left: bool) -> Vec<Vec<bool>> {
    let n = cat.num_morphs();
    let mut r = vec![vec![false; n]; n];
    for f in 0..n {
        r[f][f] = true;
        for h in 0..n {
            let pairs = [(right, h, f), (left, f, h)];
            for (g, x) in pairs.into_iter().filter(|p| p.0).map(|p| (p.1, p.2)) {
                if let Some(out) = comp(cat, MorphId(g), MorphId(x)) {
                    for (k, _) in out.iter() {
                        r[f][k.0] = true;
                    }
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Equivalence classes of a preorder, as sorted member lists sorted by
/// smallest member.
pub fn naive_classes(order: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = order.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&j| order[i][j] && order[j][i]).collect();
        for &j in &class {
            seen[j] = true;
        }
        out.push(class);
    }
    out
}

/// Seeded random Cartan data: at most 3 components of at most 3 vertices,
/// entries at most 3.
pub fn random_cartans(count: usize, seed: u64) -> Vec<CartanData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_cartan_data(&mut rng, 3, 3, 3)).collect()
}

/// Every table the property suite quantifies over.
pub fn corpus() -> Vec<(String, MultiCat)> {
    let mut out = vec![
        ("s2".to_string(), make_s2()),
        ("sl2".to_string(), make_sl2_singular()),
        ("hecke3".to_string(), make_hecke(3).unwrap()),
        ("hecke4".to_string(), make_hecke(4).unwrap()),
    ];
    for (k, data) in random_cartans(100, 2024).into_iter().enumerate() {
        out.push((format!("ca{k} {:?}", data.components), make_ca(&data).unwrap()));
    }
    out
}

/// Identities a fiat table must satisfy, checked directly from the
/// composition table. Returns one message per violation.
pub fn fiat_identities(cat: &MultiCat) -> Vec<String> {
    let n = cat.num_morphs();
    let ids: Vec<MorphId> = (0..n).map(MorphId).collect();
    let rt = naive_order(cat, true, false);
    let lt = naive_order(cat, false, true);
    let lr = naive_order(cat, true, true);
    let same = |o: &Vec<Vec<bool>>, a: MorphId, b: MorphId| o[a.0][b.0] && o[b.0][a.0];
    let l = |m: MorphId| cat.label(m).to_string();
    let mut bad = Vec::new();

    for &f in &ids {
        for &g in &ids {
            // two-sided order is generated by the one-sided ones
            if lr[f.0][g.0] && !composite_reach(&rt, &lt, f.0, g.0) {
                bad.push(format!("order factorization fails for {} <= {}", l(f), l(g)));
            }
        }
        if !same(&lr, f, cat.star(f)) {
            bad.push(format!("{} not two-sided equivalent to its dual", l(f)));
        }
        // star swaps left and right orders
        for &g in &ids {
            if rt[f.0][g.0] != lt[cat.star(f).0][cat.star(g).0] {
                bad.push(format!("star does not swap orders at {}, {}", l(f), l(g)));
            }
        }
    }

    let two = naive_classes(&lr);
    for q in &two {
        let members: Vec<MorphId> = q.iter().map(|&k| MorphId(k)).collect();
        let rights = naive_classes_within(&rt, q);
        let lefts = naive_classes_within(&lt, q);
        let regular = rights
            .iter()
            .all(|a| rights.iter().all(|b| a == b || !rt[a[0]][b[0]]));
        if !regular {
            continue;
        }
        for lc in &lefts {
            for rc in &rights {
                let meet = lc.iter().filter(|k| rc.contains(k)).count();
                if meet == 0 {
                    bad.push(format!("empty intersection in cell of {}", l(members[0])));
                }
            }
        }
        let strongly = lefts
            .iter()
            .all(|lc| rights.iter().all(|rc| lc.iter().filter(|k| rc.contains(k)).count() == 1));
        if !strongly {
            continue;
        }
        // Duflo: unique self-dual element per right cell
        let mut duflo = BTreeMap::new();
        for rc in &rights {
            let sd: Vec<usize> = rc.iter().copied().filter(|&k| cat.star(MorphId(k)).0 == k).collect();
            if sd.len() != 1 {
                bad.push(format!("right cell of {} has {} self-dual elements", l(MorphId(rc[0])), sd.len()));
                continue;
            }
            for &k in rc {
                duflo.insert(k, sd[0]);
            }
        }
        let in_q = |k: usize| q.contains(&k);
        // m(f,h): star(h)∘f restricted to the cell
        let m = |f: MorphId, h: MorphId| -> Option<(Option<usize>, u64)> {
            let out = comp(cat, cat.star(h), f)?;
            let inside: Vec<(usize, u64)> = out.iter().filter(|(k, _)| in_q(k.0)).map(|(k, c)| (k.0, c)).collect();
            match inside.as_slice() {
                [] => Some((None, 0)),
                [(k, c)] => Some((Some(*k), *c)),
                _ => None,
            }
        };
        let diag = |f: MorphId| m(f, f).map(|(_, c)| c).unwrap_or(0);
        for &f in &members {
            for &h in &members {
                if cat.tgt(f) != cat.tgt(h) {
                    continue;
                }
                match m(f, h) {
                    None => bad.push(format!("star({})∘{} is not pure", l(h), l(f))),
                    Some((target, c)) => {
                        if same(&rt, f, h) {
                            if c > 0 && target != Some(duflo[&f.0]) {
                                bad.push(format!("star({})∘{} misses the Duflo element", l(h), l(f)));
                            }
                            if m(h, f).map(|x| x.1) != Some(c) {
                                bad.push(format!("m({},{}) is not symmetric", l(f), l(h)));
                            }
                        }
                    }
                }
            }
        }
        for &h in members.iter().filter(|&&h| cat.star(h) == h) {
            let mhh = diag(h);
            for &f in members.iter().filter(|&&f| same(&lt, f, h)) {
                let mff = diag(f);
                if mff == 0 || mff > mhh || mhh % mff != 0 {
                    bad.push(format!("m({0},{0}) = {1} against m({2},{2}) = {3}", l(f), mff, l(h), mhh));
                }
                let g = MorphId(duflo[&f.0]);
                if mff * diag(g) != diag(cat.star(f)) * mhh {
                    bad.push(format!("product identity fails at {}", l(f)));
                }
            }
        }
        for lc in &lefts {
            let vals: Vec<u64> = lc.iter().map(|&k| diag(MorphId(k))).collect();
            if vals.windows(2).any(|w| w[0] != w[1]) {
                bad.push(format!("m not constant on left cell of {}", l(MorphId(lc[0]))));
            }
        }
        // Cartan blocks symmetric
        for rc in &rights {
            let d = duflo[&rc[0]];
            for j in 0..cat.num_objects() {
                let basis: Vec<MorphId> =
                    rc.iter().map(|&k| MorphId(k)).filter(|&k| cat.tgt(k).0 == j).collect();
                for &a in &basis {
                    for &b in &basis {
                        let ab = comp(cat, cat.star(a), b).map_or(0, |o| o.get(MorphId(d)));
                        let ba = comp(cat, cat.star(b), a).map_or(0, |o| o.get(MorphId(d)));
                        if ab != ba {
                            bad.push(format!("Cartan block not symmetric at {}, {}", l(a), l(b)));
                        }
                    }
                }
            }
        }
    }

    // annihilators of simples are right coideals
    for &g in &ids {
        let ann: Vec<MorphId> = ids
            .iter()
            .copied()
            .filter(|&f| cat.src(f) == cat.tgt(g) && !lt[cat.star(f).0][g.0])
            .collect();
        for &f in &ann {
            for &h in &ids {
                if let Some(out) = comp(cat, h, f) {
                    for (k, _) in out.iter() {
                        if !ann.contains(&k) {
                            bad.push(format!("annihilator of {} is not a coideal at {}∘{}", l(g), l(h), l(f)));
                        }
                    }
                }
            }
        }
    }
    bad
}

fn composite_reach(rt: &[Vec<bool>], lt: &[Vec<bool>], f: usize, g: usize) -> bool {
    let n = rt.len();
    (0..n).any(|k| rt[f][k] && lt[k][g]) || (0..n).any(|k| lt[f][k] && rt[k][g])
}

fn naive_classes_within(order: &[Vec<bool>], set: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &i in set {
        if out.iter().any(|c| c.contains(&i)) {
            continue;
        }
        out.push(set.iter().copied().filter(|&j| order[i][j] && order[j][i]).collect());
    }
    out
}

/// Two-sided classes with nothing strictly above them.
pub fn maximal_classes(cat: &MultiCat) -> Vec<Vec<usize>> {
    let lr = naive_order(cat, true, true);
    naive_classes(&lr)
        .into_iter()
        .filter(|c| (0..lr.len()).all(|k| !lr[c[0]][k] || lr[k][c[0]]))
        .collect()
}
