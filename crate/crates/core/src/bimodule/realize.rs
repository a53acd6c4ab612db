//! Projective functors computed from actual bimodules, as an independent
//! check of the formula-level `C_A` tables.

use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use super::algebra::Algebra;
use super::linalg::{Subspace, Q};
use super::module::{isomorphic, tensor_over, Bimodule, BimoduleError, DecomposeError, Decomposer};
use crate::constructors::{projective_label, CartanData, CartanError};
use crate::model::{MorphId, Morphism, MultiCat, Multiset, ObjectId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("no algebras given")]
    Empty,
    #[error("component {component}: dim eAf = {ef} but dim fAe = {fe} for vertices {e}, {f}")]
    Asymmetric {
        component: usize,
        e: usize,
        f: usize,
        ef: usize,
        fe: usize,
    },
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error("decomposition failed for {what}: {source}")]
    Decompose {
        what: String,
        source: DecomposeError,
    },
    #[error("{0} is not a single indecomposable")]
    NotIndecomposable(String),
    #[error("unit law fails: {0}")]
    UnitLaw(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

/// `dim f A_t e` for every component.
pub fn cartan_of(algebras: &[Algebra]) -> Result<CartanData, CartanError> {
    let components = algebras
        .iter()
        .map(|a| {
            let idem = a.idempotents();
            idem.iter()
                .map(|f| idem.iter().map(|e| a.corner_dim(f, e) as u64).collect())
                .collect()
        })
        .collect();
    CartanData::new(components)
}

struct Realized {
    labels: Vec<String>,
    morphs: Vec<Morphism>,
    bimodules: Vec<Bimodule>,
}

/// Builds every identity and projective bimodule over `A = A_1 ⊕ ... ⊕ A_k`,
/// tensors all composable pairs over `A` and decomposes the results.
///
/// Morphs are named and ordered exactly as in [`crate::constructors::make_ca`].
pub fn realize_ca(algebras: &[Algebra], max_dim: usize) -> Result<MultiCat, RealizeError> {
    if algebras.is_empty() {
        return Err(RealizeError::Empty);
    }
    for (t, a) in algebras.iter().enumerate() {
        let idem = a.idempotents();
        for (i, e) in idem.iter().enumerate() {
            for (j, f) in idem.iter().enumerate().take(i) {
                let (ef, fe) = (a.corner_dim(e, f), a.corner_dim(f, e));
                if ef != fe {
                    return Err(RealizeError::Asymmetric {
                        component: t,
                        e: i,
                        f: j,
                        ef,
                        fe,
                    });
                }
            }
        }
    }
    let big = Arc::new(Algebra::direct_sum(algebras));
    let comp_of: Vec<usize> = algebras
        .iter()
        .enumerate()
        .flat_map(|(t, a)| std::iter::repeat_n(t, a.idempotents().len()))
        .collect();
    let verts: Vec<Vec<Q>> = big.idempotents().to_vec();
    let regular = Bimodule::regular(&big);

    let proj: Vec<Vec<Bimodule>> = verts
        .iter()
        .map(|f| {
            verts
                .iter()
                .map(|e| Bimodule::projective(&big, f, e, &big))
                .collect()
        })
        .collect();
    let mut identity_bimods = Vec::new();
    let mut merged = vec![None; algebras.len()];
    for t in 0..algebras.len() {
        let unit: Vec<Q> = verts
            .iter()
            .zip(&comp_of)
            .filter(|(_, &c)| c == t)
            .fold(vec![Q::zero(); big.dim()], |acc, (e, _)| {
                acc.iter().zip(e).map(|(a, b)| a + b).collect()
            });
        let ident = regular.restrict(&Subspace::span(big.dim(), &big.left_mul(&unit)));
        for (v, _) in comp_of.iter().enumerate().filter(|(_, &c)| c == t) {
            if isomorphic(&ident, &proj[v][v])? {
                merged[t] = Some(v);
            }
        }
        identity_bimods.push(ident);
    }

    let mut r = Realized {
        labels: vec![],
        morphs: vec![],
        bimodules: vec![],
    };
    for t in 0..algebras.len() {
        if merged[t].is_none() {
            r.push(
                Morphism::identity(format!("1_t{}", t + 1), ObjectId(t)),
                identity_bimods[t].clone(),
            );
        }
    }
    for f in 0..verts.len() {
        for e in 0..verts.len() {
            let t = comp_of[f];
            let morph = if f == e && merged[t] == Some(f) {
                Morphism::identity(format!("1_t{}", t + 1), ObjectId(t))
            } else {
                Morphism::new(projective_label(f, e), ObjectId(comp_of[e]), ObjectId(t))
            };
            r.push(morph, proj[f][e].clone());
        }
    }

    let decomposer =
        Decomposer::new(r.bimodules.clone()).map_err(|source| RealizeError::Decompose {
            what: "candidate list".into(),
            source,
        })?;
    let n = r.morphs.len();
    let single = |what: &str, m: &Bimodule| -> Result<MorphId, RealizeError> {
        let mults = decomposer
            .decompose(m)
            .map_err(|source| RealizeError::Decompose {
                what: what.to_string(),
                source,
            })?;
        let nonzero: Vec<usize> = (0..n).filter(|&k| mults[k] != 0).collect();
        match nonzero.as_slice() {
            [k] if mults[*k] == 1 => Ok(MorphId(*k)),
            _ => Err(RealizeError::NotIndecomposable(what.to_string())),
        }
    };

    let mut star = Vec::with_capacity(n);
    for k in 0..n {
        star.push(single(
            &format!("dual of {}", r.labels[k]),
            &r.bimodules[k].left_dual(),
        )?);
    }

    let mut entries = Vec::new();
    for g in 0..n {
        for f in 0..n {
            if r.morphs[g].src != r.morphs[f].tgt {
                continue;
            }
            let what = format!("{} ∘ {}", r.labels[g], r.labels[f]);
            let product = tensor_over(&r.bimodules[g], &r.bimodules[f], max_dim)?;
            let mults =
                decomposer
                    .decompose(&product)
                    .map_err(|source| RealizeError::Decompose {
                        what: what.clone(),
                        source,
                    })?;
            let out: Multiset = mults
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(k, &m)| (MorphId(k), m))
                .collect();
            if r.morphs[g].identity || r.morphs[f].identity {
                let other = if r.morphs[g].identity { f } else { g };
                if out != Multiset::singleton(MorphId(other), 1) {
                    return Err(RealizeError::UnitLaw(what));
                }
                continue;
            }
            entries.push((MorphId(g), MorphId(f), out));
        }
    }
    let objects = (1..=algebras.len()).map(|t| format!("t{t}")).collect();
    Ok(MultiCat::new(objects, r.morphs, star, entries).expect("realized table is well formed"))
}

impl Realized {
    fn push(&mut self, m: Morphism, b: Bimodule) {
        self.labels.push(m.label.clone());
        self.morphs.push(m);
        self.bimodules.push(b);
    }
}
