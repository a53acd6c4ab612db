//! Bimodule maps between `F = D ⊗ D` and `1 = D` for the dual numbers `D`,
//! and the relations they satisfy.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use super::algebra::Algebra;
use super::linalg::{q, Matrix, Q};
use super::module::{hom_space, is_bimodule_map, Bimodule};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("the proposed images do not define a bimodule map")]
    NotAMap,
}

/// The unique bimodule map `M → N` sending `gen` to `image`, if `gen`
/// generates `M` and the assignment extends.
pub fn map_from_generator(
    m: &Bimodule,
    gen: &[Q],
    n: &Bimodule,
    image: &[Q],
) -> Result<Matrix, GeneratorError> {
    let (dm, dn) = (m.dim(), n.dim());
    // rows: X (a·gen·b) = a·image·b for basis a, b; unknowns X row-major
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    for (la_m, la_n) in m.left_action().iter().zip(n.left_action()) {
        for (rb_m, rb_n) in m.right_action().iter().zip(n.right_action()) {
            let src = rb_m.apply(&la_m.apply(gen));
            let dst = rb_n.apply(&la_n.apply(image));
            for i in 0..dn {
                let mut row = vec![q(0); dn * dm];
                for j in 0..dm {
                    row[i * dm + j] = src[j].clone();
                }
                rows.push(row);
                rhs.push(dst[i].clone());
            }
        }
    }
    let system = Matrix::from_columns(dn * dm, &rows).transpose();
    let sol = system.solve(&rhs).ok_or(GeneratorError::NotAMap)?;
    if !system.nullspace().is_empty() {
        return Err(GeneratorError::NotAMap);
    }
    let mut x = Matrix::zeros(dn, dm);
    for i in 0..dn {
        for j in 0..dm {
            x[(i, j)] = sol[i * dm + j].clone();
        }
    }
    if !is_bimodule_map(&x, m, n) {
        return Err(GeneratorError::NotAMap);
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exm2Report {
    pub relations: Vec<RelationCheck>,
    /// `dim End(F), dim Hom(F,1), dim Hom(1,F), dim End(1)`
    pub hom_dims: [usize; 4],
}

impl Exm2Report {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.holds) && self.hom_dims == [4, 2, 2, 2]
    }
}

/// Builds `α: F → 1` (`1⊗1 ↦ 1`), `β: 1 → F` (`1 ↦ 1⊗x + x⊗1`) and
/// `γ: F → F` (`1⊗1 ↦ 1⊗x - x⊗1`) and checks
/// `γ² = -(βα)²`, `(αβ)² = 0` with `αβ ≠ 0`, `αγ = 0`, `γβ = 0`.
pub fn verify_exm2() -> Exm2Report {
    let d = Arc::new(Algebra::dual_numbers());
    let one = d.unit().to_vec();
    let f = Bimodule::projective(&d, &one, &one, &d);
    let unit = Bimodule::regular(&d);
    // F has basis a⊗b for a, b in {1, x}, index 2a + b
    let t = |a: usize, b: usize| -> Vec<Q> {
        let mut v = vec![q(0); 4];
        v[2 * a + b] = q(1);
        v
    };
    let add = |x: Vec<Q>, y: Vec<Q>, sign: i64| -> Vec<Q> {
        x.iter().zip(&y).map(|(a, b)| a + b * q(sign)).collect()
    };
    let gen = t(0, 0);
    let alpha = map_from_generator(&f, &gen, &unit, &[q(1), q(0)]).expect("alpha extends");
    let beta = map_from_generator(&unit, &[q(1), q(0)], &f, &add(t(0, 1), t(1, 0), 1))
        .expect("beta extends");
    let gamma =
        map_from_generator(&f, &gen, &f, &add(t(0, 1), t(1, 0), -1)).expect("gamma extends");

    let ba = &beta * &alpha;
    let ab = &alpha * &beta;
    let relations = vec![
        RelationCheck {
            name: "gamma^2 = -(beta alpha)^2",
            holds: &gamma * &gamma == -&(&ba * &ba),
        },
        RelationCheck {
            name: "(alpha beta)^2 = 0",
            holds: (&ab * &ab).is_zero(),
        },
        RelationCheck {
            name: "alpha beta != 0",
            holds: !ab.is_zero(),
        },
        RelationCheck {
            name: "alpha gamma = 0",
            holds: (&alpha * &gamma).is_zero(),
        },
        RelationCheck {
            name: "gamma beta = 0",
            holds: (&gamma * &beta).is_zero(),
        },
        RelationCheck {
            name: "gamma in End(F)",
            holds: is_bimodule_map(&gamma, &f, &f),
        },
    ];
    let dims = |a: &Bimodule, b: &Bimodule| hom_space(a, b).expect("same algebras").len();
    Exm2Report {
        relations,
        hom_dims: [
            dims(&f, &f),
            dims(&f, &unit),
            dims(&unit, &f),
            dims(&unit, &unit),
        ],
    }
}
