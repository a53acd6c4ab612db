use thiserror::Error;

use super::kl::{kl_table, KlProducts};
use super::perm::Permutation;
use crate::model::{MorphId, Morphism, MultiCat, Multiset, ObjectId};

pub const DEFAULT_MAX_N: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeckeError {
    #[error("n = {n} is outside the supported range 2..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error("negative structure constant in b_{x} b_{y} at b_{z}")]
    Negative { x: String, y: String, z: String },
}

/// Label of `θ_w`; the identity is `1`.
pub fn hecke_label(w: &Permutation) -> String {
    if w.is_identity() {
        "1".to_string()
    } else {
        format!("theta_{}", w.compact())
    }
}

/// Elements of `S_n` in the order of the morphs of [`make_hecke`]:
/// `MorphId(k)` is `θ` of the `k`-th element.
pub fn hecke_elements(n: usize) -> Vec<Permutation> {
    kl_table(n).elements().to_vec()
}

pub fn make_hecke(n: usize) -> Result<MultiCat, HeckeError> {
    make_hecke_with_limit(n, DEFAULT_MAX_N)
}

/// Projective functors on the principal block of category O for `sl_n`,
/// as the Kazhdan–Lusztig basis structure constants at `v = 1`.
pub fn make_hecke_with_limit(n: usize, max_n: usize) -> Result<MultiCat, HeckeError> {
    if n < 2 || n > max_n {
        return Err(HeckeError::OutOfRange { n, max: max_n });
    }
    let table = kl_table(n);
    let prods = KlProducts::new(table.clone());
    let big = table.len();
    let o = ObjectId(0);
    let morphs: Vec<Morphism> = table
        .elements()
        .iter()
        .map(|w| {
            if w.is_identity() {
                Morphism::identity(hecke_label(w), o)
            } else {
                Morphism::new(hecke_label(w), o, o)
            }
        })
        .collect();
    let star: Vec<MorphId> = table
        .elements()
        .iter()
        .map(|w| MorphId(table.index_of(&w.inverse()).expect("in S_n")))
        .collect();
    let mut entries = Vec::with_capacity(big * big);
    for x in 1..big {
        for y in 1..big {
            let mut out = Multiset::new();
            for (z, h) in prods.product(x, y) {
                if !h.is_nonnegative() {
                    return Err(HeckeError::Negative {
                        x: morphs[x].label.clone(),
                        y: morphs[y].label.clone(),
                        z: morphs[*z].label.clone(),
                    });
                }
                let at_one = h.eval_one();
                if at_one > 0 {
                    out.add(MorphId(*z), at_one as u64);
                }
            }
            entries.push((MorphId(x), MorphId(y), out));
        }
    }
    Ok(MultiCat::new(vec!["i".into()], morphs, star, entries).expect("Hecke table is well formed"))
}
