use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{MorphId, Morphism, MultiCat, Multiset, ObjectId};

/// Dual numbers: one object, `F ∘ F = 2F`.
pub fn make_s2() -> MultiCat {
    let morphs = vec![
        Morphism::identity("1_i", ObjectId(0)),
        Morphism::new("F", ObjectId(0), ObjectId(0)),
    ];
    let f = MorphId(1);
    MultiCat::new(
        vec!["i".into()],
        morphs,
        vec![MorphId(0), f],
        [(f, f, Multiset::singleton(f, 2))],
    )
    .expect("builtin table is well formed")
}

/// Singular block of sl₂: `θ = θ_out ∘ θ_on` on the regular object `i`.
pub fn make_sl2_singular() -> MultiCat {
    let (i, j) = (ObjectId(0), ObjectId(1));
    let morphs = vec![
        Morphism::identity("1_i", i),
        Morphism::identity("1_j", j),
        Morphism::new("theta_on", i, j),
        Morphism::new("theta_out", j, i),
        Morphism::new("theta", i, i),
    ];
    let (one_j, on, out, theta) = (MorphId(1), MorphId(2), MorphId(3), MorphId(4));
    let entries = [
        (out, on, Multiset::singleton(theta, 1)),
        (on, out, Multiset::singleton(one_j, 2)),
        (theta, theta, Multiset::singleton(theta, 2)),
        (on, theta, Multiset::singleton(on, 2)),
        (theta, out, Multiset::singleton(out, 2)),
    ];
    MultiCat::new(
        vec!["i".into(), "j".into()],
        morphs,
        vec![MorphId(0), one_j, out, on, theta],
        entries,
    )
    .expect("builtin table is well formed")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("Cartan data has no components")]
    Empty,
    #[error("component {0} is empty")]
    EmptyComponent(usize),
    #[error("component {0} is not a square matrix")]
    NotSquare(usize),
    #[error(
        "component {component} is not symmetric at ({a},{b}); weak symmetry forces \
         dim eAf = dim fAe since (fA)* is isomorphic to Af"
    )]
    Asymmetric {
        component: usize,
        a: usize,
        b: usize,
    },
    #[error("component {component} has zero diagonal entry at vertex {vertex}")]
    ZeroDiagonal { component: usize, vertex: usize },
}

/// Cartan matrices of the blocks `A_1, ..., A_k`; `components[t][f][e]` is
/// `dim f A_t e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub components: Vec<Vec<Vec<u64>>>,
}

impl CartanData {
    pub fn new(components: Vec<Vec<Vec<u64>>>) -> Result<Self, CartanError> {
        let data = CartanData { components };
        data.check()?;
        Ok(data)
    }

    pub fn check(&self) -> Result<(), CartanError> {
        if self.components.is_empty() {
            return Err(CartanError::Empty);
        }
        for (t, c) in self.components.iter().enumerate() {
            if c.is_empty() {
                return Err(CartanError::EmptyComponent(t));
            }
            if c.iter().any(|row| row.len() != c.len()) {
                return Err(CartanError::NotSquare(t));
            }
            for a in 0..c.len() {
                if c[a][a] == 0 {
                    return Err(CartanError::ZeroDiagonal {
                        component: t,
                        vertex: a,
                    });
                }
                for b in 0..a {
                    if c[a][b] != c[b][a] {
                        return Err(CartanError::Asymmetric { component: t, a, b });
                    }
                }
            }
        }
        Ok(())
    }

    /// Global vertices as `(component, local index)`, component-major.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(t, c)| (0..c.len()).map(move |a| (t, a)))
            .collect()
    }

    /// `dim e A f`, zero across components.
    pub fn pairing(&self, e: (usize, usize), f: (usize, usize)) -> u64 {
        if e.0 != f.0 {
            return 0;
        }
        self.components[e.0][e.1][f.1]
    }

    fn merged(&self, t: usize) -> bool {
        self.components[t] == [[1]]
    }
}

/// Label of the projective morph `A f ⊗ e A` for global vertex numbers.
pub fn projective_label(f: usize, e: usize) -> String {
    format!("P[{},{}]", f + 1, e + 1)
}

/// Projective functors on `A = A_1 ⊕ ... ⊕ A_k`.
///
/// Objects are components `t1..tk`. Vertices are numbered globally from 1 in
/// component order; `P[f,e]` models `A f ⊗ e A` with source the component of
/// `e` and target the component of `f`, and
/// `P[f,e] ∘ P[f',e'] = dim(e A f') · P[f,e']`.
/// For a component equal to `[[1]]` the identity is its unique projective
/// morph and is labelled `1_t`.
pub fn make_ca(data: &CartanData) -> Result<MultiCat, CartanError> {
    data.check()?;
    let objects: Vec<String> = (1..=data.components.len())
        .map(|t| format!("t{t}"))
        .collect();
    let verts = data.vertices();
    let mut morphs = Vec::new();
    for (t, _) in data.components.iter().enumerate() {
        if !data.merged(t) {
            morphs.push(Morphism::identity(format!("1_t{}", t + 1), ObjectId(t)));
        }
    }
    // proj[f][e] = morph id of P[f,e]
    let mut proj = vec![vec![MorphId(0); verts.len()]; verts.len()];
    for (fi, f) in verts.iter().enumerate() {
        for (ei, e) in verts.iter().enumerate() {
            let m = if data.merged(f.0) && data.merged(e.0) && f.0 == e.0 {
                Morphism::identity(format!("1_t{}", f.0 + 1), ObjectId(f.0))
            } else {
                Morphism::new(projective_label(fi, ei), ObjectId(e.0), ObjectId(f.0))
            };
            proj[fi][ei] = MorphId(morphs.len());
            morphs.push(m);
        }
    }
    let mut star = vec![MorphId(0); morphs.len()];
    for (id, m) in morphs.iter().enumerate() {
        if m.identity {
            star[id] = MorphId(id);
        }
    }
    for fi in 0..verts.len() {
        for ei in 0..verts.len() {
            star[proj[fi][ei].0] = proj[ei][fi];
        }
    }
    let mut entries = Vec::new();
    for (fi, _) in verts.iter().enumerate() {
        for (ei, e) in verts.iter().enumerate() {
            for (f2, f2v) in verts.iter().enumerate() {
                if f2v.0 != e.0 {
                    continue;
                }
                let c = data.pairing(*e, *f2v);
                for e2 in 0..verts.len() {
                    let (g, f) = (proj[fi][ei], proj[f2][e2]);
                    if morphs[g.0].identity || morphs[f.0].identity {
                        continue;
                    }
                    let out = if c == 0 {
                        Multiset::new()
                    } else {
                        Multiset::singleton(proj[fi][e2], c)
                    };
                    entries.push((g, f, out));
                }
            }
        }
    }
    Ok(MultiCat::new(objects, morphs, star, entries).expect("C_A table is well formed"))
}

/// Random valid Cartan data: up to `max_components` components of up to
/// `max_vertices` vertices, entries at most `max_entry`.
pub fn random_cartan_data<R: Rng>(
    rng: &mut R,
    max_components: usize,
    max_vertices: usize,
    max_entry: u64,
) -> CartanData {
    let k = rng.gen_range(1..=max_components);
    let components = (0..k)
        .map(|_| {
            let v = rng.gen_range(1..=max_vertices);
            let mut c = vec![vec![0u64; v]; v];
            for a in 0..v {
                c[a][a] = rng.gen_range(1..=max_entry);
                for b in 0..a {
                    let x = rng.gen_range(0..=max_entry);
                    c[a][b] = x;
                    c[b][a] = x;
                }
            }
            c
        })
        .collect();
    CartanData::new(components).expect("generated data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::validate;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn builtins_valid() {
        assert!(validate(&make_s2()).is_valid());
        assert!(validate(&make_sl2_singular()).is_valid());
    }

    #[test]
    fn ca_rejects_bad_data() {
        assert_eq!(CartanData::new(vec![]), Err(CartanError::Empty));
        assert!(matches!(
            CartanData::new(vec![vec![vec![2, 1], vec![0, 2]]]),
            Err(CartanError::Asymmetric {
                component: 0,
                a: 1,
                b: 0
            })
        ));
        assert!(matches!(
            CartanData::new(vec![vec![vec![0]]]),
            Err(CartanError::ZeroDiagonal { .. })
        ));
        assert!(matches!(
            CartanData::new(vec![vec![vec![1, 1]]]),
            Err(CartanError::NotSquare(0))
        ));
    }

    #[test]
    fn ca_sl2_shape() {
        let cat = make_ca(&CartanData::new(vec![vec![vec![1]], vec![vec![2]]]).unwrap()).unwrap();
        assert_eq!(cat.num_morphs(), 5);
        assert!(validate(&cat).is_valid());
        let p22 = cat.find_morph("P[2,2]").unwrap();
        let p21 = cat.find_morph("P[2,1]").unwrap();
        let p12 = cat.find_morph("P[1,2]").unwrap();
        assert_eq!(cat.compose(p22, p22).unwrap(), &Multiset::singleton(p22, 2));
        assert_eq!(
            cat.compose(p12, p21).unwrap(),
            &Multiset::singleton(cat.find_morph("1_t1").unwrap(), 2)
        );
        assert_eq!(cat.star(p21), p12);
    }

    #[test]
    fn random_data_validates() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let data = random_cartan_data(&mut rng, 3, 3, 3);
            let cat = make_ca(&data).unwrap();
            assert!(validate(&cat).is_valid(), "{:?}", data);
        }
    }
}
