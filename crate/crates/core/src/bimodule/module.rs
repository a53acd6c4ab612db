use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use super::algebra::Algebra;
use super::linalg::{cokernel, q, Matrix, Subspace, Q};

pub const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BimoduleError {
    #[error("action matrices have the wrong shape")]
    Shape,
    #[error("left action is not multiplicative or not unital")]
    LeftAction,
    #[error("right action is not multiplicative or not unital")]
    RightAction,
    #[error("left and right actions do not commute")]
    NotCommuting,
    #[error("algebras do not match")]
    AlgebraMismatch,
    #[error("tensor intermediate of dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
}

/// `A`-`B` bimodule on column vectors. The right action is stored as
/// matrices `R_b` with `v·b = R_b v`, so `R_{bb'} = R_{b'} R_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub left: Arc<Algebra>,
    pub right: Arc<Algebra>,
    dim: usize,
    left_action: Vec<Matrix>,
    right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Self, BimoduleError> {
        let square = |m: &Matrix| m.rows() == dim && m.cols() == dim;
        if left_action.len() != left.dim()
            || right_action.len() != right.dim()
            || !left_action.iter().all(square)
            || !right_action.iter().all(square)
        {
            return Err(BimoduleError::Shape);
        }
        let m = Bimodule {
            left,
            right,
            dim,
            left_action,
            right_action,
        };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<(), BimoduleError> {
        let id = Matrix::identity(self.dim);
        if self.act_left(self.left.unit()) != id {
            return Err(BimoduleError::LeftAction);
        }
        if self.act_right(self.right.unit()) != id {
            return Err(BimoduleError::RightAction);
        }
        for a in 0..self.left.dim() {
            for b in 0..self.left.dim() {
                let ab = self.left.mul(&self.left.basis(a), &self.left.basis(b));
                if self.act_left(&ab) != &self.left_action[a] * &self.left_action[b] {
                    return Err(BimoduleError::LeftAction);
                }
            }
        }
        for a in 0..self.right.dim() {
            for b in 0..self.right.dim() {
                let ab = self.right.mul(&self.right.basis(a), &self.right.basis(b));
                if self.act_right(&ab) != &self.right_action[b] * &self.right_action[a] {
                    return Err(BimoduleError::RightAction);
                }
            }
        }
        for l in &self.left_action {
            for r in &self.right_action {
                if l * r != r * l {
                    return Err(BimoduleError::NotCommuting);
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &[Matrix] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right_action
    }

    /// Matrix of `v ↦ x·v`.
    pub fn act_left(&self, x: &[Q]) -> Matrix {
        combine(self.dim, &self.left_action, x)
    }

    /// Matrix of `v ↦ v·x`.
    pub fn act_right(&self, x: &[Q]) -> Matrix {
        combine(self.dim, &self.right_action, x)
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(a: &Arc<Algebra>) -> Self {
        let left = (0..a.dim()).map(|k| a.left_mul(&a.basis(k))).collect();
        let right = (0..a.dim()).map(|k| a.right_mul(&a.basis(k))).collect();
        Bimodule::new(a.clone(), a.clone(), a.dim(), left, right).expect("regular bimodule")
    }

    /// Sub-bimodule on an invariant subspace.
    pub fn restrict(&self, sub: &Subspace) -> Self {
        let left = self.left_action.iter().map(|m| sub.restrict(m)).collect();
        let right = self.right_action.iter().map(|m| sub.restrict(m)).collect();
        Bimodule::new(
            self.left.clone(),
            self.right.clone(),
            sub.dim(),
            left,
            right,
        )
        .expect("invariant subspace")
    }

    /// `A e ⊗ f B` over the base field.
    pub fn projective(a: &Arc<Algebra>, e: &[Q], f: &[Q], b: &Arc<Algebra>) -> Self {
        let ae = a.left_ideal(e);
        let fb = b.right_ideal(f);
        let left: Vec<Matrix> = (0..a.dim())
            .map(|k| {
                ae.restrict(&a.left_mul(&a.basis(k)))
                    .kron(&Matrix::identity(fb.dim()))
            })
            .collect();
        let right: Vec<Matrix> = (0..b.dim())
            .map(|k| Matrix::identity(ae.dim()).kron(&fb.restrict(&b.right_mul(&b.basis(k)))))
            .collect();
        Bimodule::new(a.clone(), b.clone(), ae.dim() * fb.dim(), left, right)
            .expect("projective bimodule")
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Self, BimoduleError> {
        if self.left != other.left || self.right != other.right {
            return Err(BimoduleError::AlgebraMismatch);
        }
        let sum = |x: &[Matrix], y: &[Matrix]| -> Vec<Matrix> {
            x.iter()
                .zip(y)
                .map(|(a, b)| Matrix::direct_sum(a, b))
                .collect()
        };
        Bimodule::new(
            self.left.clone(),
            self.right.clone(),
            self.dim + other.dim,
            sum(&self.left_action, &other.left_action),
            sum(&self.right_action, &other.right_action),
        )
    }

    /// `Hom_A(M, A)` for the left algebra `A`, a `B`-`A` bimodule with
    /// `(b·φ)(m) = φ(m·b)` and `(φ·a)(m) = φ(m)·a`.
    pub fn left_dual(&self) -> Bimodule {
        let a = &self.left;
        let (n, d) = (a.dim(), self.dim);
        // X is n×d, row-major; X L^M_k = L^A_k X
        let constraints: Vec<Matrix> = (0..n)
            .map(|k| {
                let lm = &self.left_action[k];
                let la = a.left_mul(&a.basis(k));
                &Matrix::identity(n).kron(&lm.transpose()) - &la.kron(&Matrix::identity(d))
            })
            .collect();
        let sols = Matrix::vstack(&constraints).nullspace();
        let space = Subspace::span(n * d, &Matrix::from_columns(n * d, &sols));
        let left: Vec<Matrix> = self
            .right_action
            .iter()
            .map(|r| space.restrict(&Matrix::identity(n).kron(&r.transpose())))
            .collect();
        let right: Vec<Matrix> = (0..n)
            .map(|k| space.restrict(&a.right_mul(&a.basis(k)).kron(&Matrix::identity(d))))
            .collect();
        Bimodule::new(self.right.clone(), a.clone(), space.dim(), left, right)
            .expect("dual bimodule")
    }
}

fn combine(dim: usize, mats: &[Matrix], x: &[Q]) -> Matrix {
    let mut out = Matrix::zeros(dim, dim);
    for (m, c) in mats.iter().zip(x) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// `M ⊗_B N` as the cokernel of the balancing map `m·b ⊗ n - m ⊗ b·n`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule, max_dim: usize) -> Result<Bimodule, BimoduleError> {
    if m.right != n.left {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let dim = m.dim * n.dim;
    if dim > max_dim {
        return Err(BimoduleError::TooLarge { dim, cap: max_dim });
    }
    let (im, in_) = (Matrix::identity(m.dim), Matrix::identity(n.dim));
    let balancing: Vec<Matrix> = (0..m.right.dim())
        .map(|b| &m.right_action[b].kron(&in_) - &im.kron(&n.left_action[b]))
        .collect();
    let coker = if balancing.is_empty() {
        cokernel(&Matrix::zeros(dim, 0))
    } else {
        cokernel(&Matrix::hstack(&balancing))
    };
    let induced = |op: Matrix| &(&coker.projection * &op) * &coker.section;
    let left = m
        .left_action
        .iter()
        .map(|a| induced(a.kron(&in_)))
        .collect();
    let right = n.right_action.iter().map(|c| induced(im.kron(c))).collect();
    Bimodule::new(
        m.left.clone(),
        n.right.clone(),
        coker.projection.rows(),
        left,
        right,
    )
}

/// Basis of bimodule maps `M → N`, as `dim N × dim M` matrices.
pub fn hom_space(m: &Bimodule, n: &Bimodule) -> Result<Vec<Matrix>, BimoduleError> {
    if m.left != n.left || m.right != n.right {
        return Err(BimoduleError::AlgebraMismatch);
    }
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return Ok(vec![]);
    }
    let (im, inn) = (Matrix::identity(dm), Matrix::identity(dn));
    let mut constraints = Vec::new();
    for (x, y) in m
        .left_action
        .iter()
        .zip(&n.left_action)
        .chain(m.right_action.iter().zip(&n.right_action))
    {
        // X x = y X, with X row-major
        constraints.push(&inn.kron(&x.transpose()) - &y.kron(&im));
    }
    let sols = Matrix::vstack(&constraints).nullspace();
    Ok(sols
        .into_iter()
        .map(|v| {
            let mut x = Matrix::zeros(dn, dm);
            for i in 0..dn {
                for j in 0..dm {
                    x[(i, j)] = v[i * dm + j].clone();
                }
            }
            x
        })
        .collect())
}

pub fn is_bimodule_map(x: &Matrix, m: &Bimodule, n: &Bimodule) -> bool {
    x.rows() == n.dim
        && x.cols() == m.dim
        && m.left_action
            .iter()
            .zip(&n.left_action)
            .all(|(a, b)| x * a == b * x)
        && m.right_action
            .iter()
            .zip(&n.right_action)
            .all(|(a, b)| x * a == b * x)
}

/// Whether `M ≅ N`, by looking for an invertible element of `Hom(M, N)`
/// among a fixed sequence of integer combinations of a basis. Invertible
/// maps form a dense open subset when they exist, so a miss on every
/// combination is reported as non-isomorphic.
pub fn isomorphic(m: &Bimodule, n: &Bimodule) -> Result<bool, BimoduleError> {
    if m.dim != n.dim {
        return Ok(false);
    }
    if m.dim == 0 {
        return Ok(true);
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(false);
    }
    for round in 0..8i64 {
        let mut x = Matrix::zeros(n.dim, m.dim);
        for (k, b) in basis.iter().enumerate() {
            let c = (k as i64 + 1) * (round + 1) + round * round * (k as i64 % 3);
            x = &x + &b.scale(&q(c));
        }
        if x.rank() == m.dim {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `dim End(M) / rad End(M)`, with the radical found as the kernel of the
/// trace form (valid in characteristic zero).
pub fn semisimple_end_dim(m: &Bimodule) -> Result<usize, BimoduleError> {
    let ends = hom_space(m, m)?;
    let k = ends.len();
    let mut form = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            form[(i, j)] = (&ends[i] * &ends[j]).trace();
        }
    }
    Ok(form.rank())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error("candidate {0} does not have a local endomorphism ring")]
    NotLocal(usize),
    #[error("candidates are not distinguished by hom dimensions")]
    Singular,
    #[error("no decomposition into the candidates: {0}")]
    Inconsistent(String),
}

/// Hom-count decomposition against a fixed list of indecomposables.
pub struct Decomposer {
    candidates: Vec<Bimodule>,
    gram: Matrix,
}

impl Decomposer {
    pub fn new(candidates: Vec<Bimodule>) -> Result<Self, DecomposeError> {
        for (i, c) in candidates.iter().enumerate() {
            if semisimple_end_dim(c)? != 1 {
                return Err(DecomposeError::NotLocal(i));
            }
        }
        let k = candidates.len();
        let mut gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                gram[(i, j)] = q(hom_space(&candidates[i], &candidates[j])?.len() as i64);
            }
        }
        if k > 0 && gram.rank() < k {
            return Err(DecomposeError::Singular);
        }
        Ok(Decomposer { candidates, gram })
    }

    pub fn candidates(&self) -> &[Bimodule] {
        &self.candidates
    }

    /// Multiplicity of each candidate in `m`.
    pub fn decompose(&self, m: &Bimodule) -> Result<Vec<u64>, DecomposeError> {
        let k = self.candidates.len();
        let mut counts = Vec::with_capacity(k);
        for c in &self.candidates {
            counts.push(q(hom_space(c, m)?.len() as i64));
        }
        let x = if k == 0 {
            vec![]
        } else {
            self.gram.solve(&counts).ok_or(DecomposeError::Singular)?
        };
        let mut mults = Vec::with_capacity(k);
        for (i, v) in x.iter().enumerate() {
            if !v.is_integer() || v < &q(0) {
                return Err(DecomposeError::Inconsistent(format!(
                    "multiplicity {v} for candidate {i}"
                )));
            }
            mults.push(v.to_integer().try_into().expect("small multiplicity"));
        }
        let total: usize = mults
            .iter()
            .zip(&self.candidates)
            .map(|(&n, c)| n as usize * c.dim)
            .sum();
        if total != m.dim {
            return Err(DecomposeError::Inconsistent(format!(
                "summands have total dimension {total}, module has {}",
                m.dim
            )));
        }
        Ok(mults)
    }
}

pub fn decompose_against(
    m: &Bimodule,
    candidates: &[Bimodule],
) -> Result<Vec<u64>, DecomposeError> {
    Decomposer::new(candidates.to_vec())?.decompose(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Arc<Algebra> {
        Arc::new(Algebra::dual_numbers())
    }

    fn free(a: &Arc<Algebra>) -> Bimodule {
        let one = a.unit().to_vec();
        Bimodule::projective(a, &one, &one, a)
    }

    #[test]
    fn tensor_dimensions() {
        let a = d();
        let reg = Bimodule::regular(&a);
        assert_eq!(tensor_over(&reg, &reg, DEFAULT_MAX_DIM).unwrap().dim(), 2);
        let f = free(&a);
        assert_eq!(f.dim(), 4);
        let ff = tensor_over(&f, &f, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(ff.dim(), 8);
        assert_eq!(
            decompose_against(&ff, &[f.clone(), reg.clone()]).unwrap(),
            vec![2, 0]
        );
        assert_eq!(decompose_against(&reg, std::slice::from_ref(&reg)).unwrap(), vec![1]);
        assert!(matches!(
            tensor_over(&f, &f, 10),
            Err(BimoduleError::TooLarge { dim: 16, cap: 10 })
        ));
    }

    #[test]
    fn hom_dimensions() {
        let a = d();
        let (f, one) = (free(&a), Bimodule::regular(&a));
        assert_eq!(hom_space(&f, &f).unwrap().len(), 4);
        assert_eq!(hom_space(&f, &one).unwrap().len(), 2);
        assert_eq!(hom_space(&one, &f).unwrap().len(), 2);
        assert_eq!(hom_space(&one, &one).unwrap().len(), 2);
        for x in hom_space(&one, &f).unwrap() {
            assert!(is_bimodule_map(&x, &one, &f));
        }
    }

    #[test]
    fn sum_decomposes() {
        let a = Arc::new(Algebra::direct_sum(&[
            Algebra::field(),
            Algebra::dual_numbers(),
        ]));
        let e = a.idempotents()[1].clone();
        let p = Bimodule::projective(&a, &e, &e, &a);
        let comp = Subspace::span(a.dim(), &a.left_mul(&e));
        let ident = Bimodule::regular(&a).restrict(&comp);
        assert_eq!((p.dim(), ident.dim()), (4, 2));
        let sum = p.direct_sum(&ident).unwrap();
        assert_eq!(
            decompose_against(&sum, &[p.clone(), ident.clone()]).unwrap(),
            vec![1, 1]
        );
        assert!(matches!(
            decompose_against(&sum, std::slice::from_ref(&p)),
            Err(DecomposeError::Inconsistent(_))
        ));
    }

    #[test]
    fn duals_and_locality() {
        let a = d();
        let f = free(&a);
        assert!(isomorphic(&f.left_dual(), &f).unwrap());
        assert!(isomorphic(&Bimodule::regular(&a).left_dual(), &Bimodule::regular(&a)).unwrap());
        assert!(!isomorphic(
            &f,
            &Bimodule::regular(&a)
                .direct_sum(&Bimodule::regular(&a))
                .unwrap()
        )
        .unwrap());
        assert_eq!(semisimple_end_dim(&f).unwrap(), 1);
        let two = Bimodule::regular(&a)
            .direct_sum(&Bimodule::regular(&a))
            .unwrap();
        assert_eq!(semisimple_end_dim(&two).unwrap(), 4);
    }
}
