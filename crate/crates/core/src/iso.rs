//! Isomorphisms of tables: bijections on objects and morphs preserving
//! sources, targets, identities, composition multiplicities and the star.

use crate::model::{MorphId, MultiCat, ObjectId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub objects: Vec<ObjectId>,
    pub morphs: Vec<MorphId>,
}

impl Isomorphism {
    /// Readable `label -> label` pairs.
    pub fn describe(&self, a: &MultiCat, b: &MultiCat) -> Vec<(String, String)> {
        a.morph_ids()
            .map(|m| {
                (
                    a.label(m).to_string(),
                    b.label(self.morphs[m.0]).to_string(),
                )
            })
            .collect()
    }
}

// Invariants preserved by any isomorphism; candidates must agree on them.
fn signature(cat: &MultiCat, m: MorphId) -> (bool, bool, Vec<u64>, usize, usize, u64) {
    let square = cat.compose_opt(m, m);
    let mut sq: Vec<u64> = square
        .map(|s| s.iter().map(|(_, k)| k).collect())
        .unwrap_or_default();
    sq.sort_unstable();
    let left = cat
        .morph_ids()
        .filter(|&g| cat.compose_opt(g, m).is_some_and(|s| !s.is_empty()))
        .count();
    let right = cat
        .morph_ids()
        .filter(|&f| cat.compose_opt(m, f).is_some_and(|s| !s.is_empty()))
        .count();
    let through_star = cat.compose_opt(cat.star(m), m).map_or(0, |s| s.total());
    (
        cat.is_identity(m),
        cat.is_self_dual(m),
        sq,
        left,
        right,
        through_star,
    )
}

/// Backtracking search, pruned by per-morph invariants and partial checks.
pub fn find_isomorphism(a: &MultiCat, b: &MultiCat) -> Option<Isomorphism> {
    if a.num_objects() != b.num_objects() || a.num_morphs() != b.num_morphs() {
        return None;
    }
    let sig_a: Vec<_> = a.morph_ids().map(|m| signature(a, m)).collect();
    let sig_b: Vec<_> = b.morph_ids().map(|m| signature(b, m)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut search = Search {
        a,
        b,
        sig_a,
        sig_b,
        obj: vec![None; a.num_objects()],
        obj_used: vec![false; b.num_objects()],
        mor: vec![None; a.num_morphs()],
        mor_used: vec![false; b.num_morphs()],
    };
    if search.assign(0) {
        Some(Isomorphism {
            objects: search
                .obj
                .into_iter()
                .map(|o| o.expect("all objects mapped"))
                .collect(),
            morphs: search
                .mor
                .into_iter()
                .map(|m| m.expect("all morphs mapped"))
                .collect(),
        })
    } else {
        None
    }
}

struct Search<'a, S> {
    a: &'a MultiCat,
    b: &'a MultiCat,
    sig_a: Vec<S>,
    sig_b: Vec<S>,
    obj: Vec<Option<ObjectId>>,
    obj_used: Vec<bool>,
    mor: Vec<Option<MorphId>>,
    mor_used: Vec<bool>,
}

impl<S: PartialEq> Search<'_, S> {
    fn assign(&mut self, k: usize) -> bool {
        if k == self.a.num_morphs() {
            return self.objects_complete() && self.full_check();
        }
        let m = MorphId(k);
        for c in self.b.morph_ids() {
            if self.mor_used[c.0] || self.sig_a[k] != self.sig_b[c.0] {
                continue;
            }
            let mut bound = Vec::new();
            if !self.bind_object(self.a.src(m), self.b.src(c), &mut bound)
                || !self.bind_object(self.a.tgt(m), self.b.tgt(c), &mut bound)
            {
                self.unbind(&bound);
                continue;
            }
            self.mor[k] = Some(c);
            self.mor_used[c.0] = true;
            if self.consistent(m) && self.assign(k + 1) {
                return true;
            }
            self.mor[k] = None;
            self.mor_used[c.0] = false;
            self.unbind(&bound);
        }
        false
    }

    fn bind_object(&mut self, x: ObjectId, y: ObjectId, bound: &mut Vec<ObjectId>) -> bool {
        match self.obj[x.0] {
            Some(z) => z == y,
            None if self.obj_used[y.0] => false,
            None => {
                self.obj[x.0] = Some(y);
                self.obj_used[y.0] = true;
                bound.push(x);
                true
            }
        }
    }

    fn unbind(&mut self, bound: &[ObjectId]) {
        for x in bound {
            if let Some(y) = self.obj[x.0].take() {
                self.obj_used[y.0] = false;
            }
        }
    }

    fn objects_complete(&self) -> bool {
        self.obj.iter().all(Option::is_some)
    }

    // Checks every constraint whose morphs are all assigned and involve `m`.
    fn consistent(&self, m: MorphId) -> bool {
        let (a, b) = (self.a, self.b);
        let phi = |x: MorphId| self.mor[x.0];
        if let (Some(s), Some(pm)) = (phi(a.star(m)), phi(m)) {
            if b.star(pm) != s {
                return false;
            }
        }
        for x in a.morph_ids().filter(|x| x.0 <= m.0) {
            for (g, f) in [(m, x), (x, m)] {
                let Some(out) = a.compose_opt(g, f) else {
                    continue;
                };
                let (pg, pf) = (phi(g).expect("assigned"), phi(f).expect("assigned"));
                let Some(img) = b.compose_opt(pg, pf) else {
                    return false;
                };
                if out.total() != img.total() || out.len() != img.len() {
                    return false;
                }
                for (k, mult) in out.iter() {
                    if let Some(pk) = phi(k) {
                        if img.get(pk) != mult {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn full_check(&self) -> bool {
        let (a, b) = (self.a, self.b);
        let phi = |x: MorphId| self.mor[x.0].expect("assigned");
        a.morph_ids().all(|m| b.star(phi(m)) == phi(a.star(m)))
            && a.morph_ids().all(|g| {
                a.morph_ids().all(
                    |f| match (a.compose_opt(g, f), b.compose_opt(phi(g), phi(f))) {
                        (None, None) => true,
                        (Some(x), Some(y)) => &x.map(phi) == y,
                        _ => false,
                    },
                )
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_ca, make_hecke, make_s2, make_sl2_singular, CartanData};

    #[test]
    fn ca_matches_builtins() {
        let sl2 = make_ca(&CartanData::new(vec![vec![vec![1]], vec![vec![2]]]).unwrap()).unwrap();
        let iso = find_isomorphism(&sl2, &make_sl2_singular()).expect("isomorphic");
        let pairs = iso.describe(&sl2, &make_sl2_singular());
        assert!(pairs.contains(&("P[2,2]".to_string(), "theta".to_string())));
        assert!(pairs.contains(&("1_t1".to_string(), "1_j".to_string())));
        let s2 = make_ca(&CartanData::new(vec![vec![vec![2]]]).unwrap()).unwrap();
        assert!(find_isomorphism(&s2, &make_s2()).is_some());
        assert!(find_isomorphism(&make_hecke(2).unwrap(), &make_s2()).is_some());
    }

    #[test]
    fn distinguishes_tables() {
        let s3 = make_ca(&CartanData::new(vec![vec![vec![3]]]).unwrap()).unwrap();
        assert!(find_isomorphism(&s3, &make_s2()).is_none());
        let two = make_ca(&CartanData::new(vec![vec![vec![2, 1], vec![1, 2]]]).unwrap()).unwrap();
        let other = make_ca(&CartanData::new(vec![vec![vec![2, 0], vec![0, 2]]]).unwrap()).unwrap();
        assert!(find_isomorphism(&two, &other).is_none());
        assert!(find_isomorphism(&two, &two).is_some());
    }
}
