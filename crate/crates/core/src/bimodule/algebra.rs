use num_traits::{One, Zero};
use thiserror::Error;

use super::linalg::{q, Matrix, Subspace, Q};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra has dimension zero")]
    Empty,
    #[error("structure constants have the wrong shape")]
    Shape,
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    Associativity(String, String, String),
    #[error("the unit vector is not a two-sided unit")]
    Unit,
    #[error("idempotent {0} does not square to itself")]
    NotIdempotent(usize),
    #[error("idempotents {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("idempotents do not sum to the unit")]
    IdempotentSum,
}

/// Finite-dimensional algebra over the rationals given by structure
/// constants, together with a chosen complete set of orthogonal primitive
/// idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    // mult[a][b] = coordinates of basis_a · basis_b
    mult: Vec<Vec<Vec<Q>>>,
    unit: Vec<Q>,
    idempotents: Vec<Vec<Q>>,
}

impl Algebra {
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Vec<Vec<Q>>>,
        unit: Vec<Q>,
        idempotents: Vec<Vec<Q>>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let shape_ok = mult.len() == n
            && mult
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && unit.len() == n
            && idempotents.iter().all(|e| e.len() == n);
        if !shape_ok {
            return Err(AlgebraError::Shape);
        }
        let alg = Algebra {
            labels,
            mult,
            unit,
            idempotents,
        };
        alg.check()?;
        Ok(alg)
    }

    fn check(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let basis = |k: usize| basis_vector(n, k);
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(&basis(a), &basis(b));
                for c in 0..n {
                    if self.mul(&ab, &basis(c))
                        != self.mul(&basis(a), &self.mul(&basis(b), &basis(c)))
                    {
                        return Err(AlgebraError::Associativity(
                            self.labels[a].clone(),
                            self.labels[b].clone(),
                            self.labels[c].clone(),
                        ));
                    }
                }
            }
            if self.mul(&self.unit, &basis(a)) != basis(a)
                || self.mul(&basis(a), &self.unit) != basis(a)
            {
                return Err(AlgebraError::Unit);
            }
        }
        let mut sum = vec![Q::zero(); n];
        for (i, e) in self.idempotents.iter().enumerate() {
            if &self.mul(e, e) != e {
                return Err(AlgebraError::NotIdempotent(i));
            }
            for (j, f) in self.idempotents.iter().enumerate() {
                if i != j && self.mul(e, f).iter().any(|x| !x.is_zero()) {
                    return Err(AlgebraError::NotOrthogonal(i, j));
                }
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
        }
        if sum != self.unit {
            return Err(AlgebraError::IdempotentSum);
        }
        Ok(())
    }

    /// The base field, one idempotent.
    pub fn field() -> Self {
        Algebra::new(
            vec!["1".into()],
            vec![vec![vec![q(1)]]],
            vec![q(1)],
            vec![vec![q(1)]],
        )
        .expect("field is an algebra")
    }

    /// Dual numbers `Q[x]/(x²)` on the basis `1, x`.
    pub fn dual_numbers() -> Self {
        let (z, o) = (q(0), q(1));
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        Algebra::new(
            vec!["1".into(), "x".into()],
            mult,
            vec![o.clone(), z.clone()],
            vec![vec![o, z]],
        )
        .expect("dual numbers are an algebra")
    }

    /// Direct product; basis labels become `label.t` for component `t` (from 1).
    pub fn direct_sum(parts: &[Algebra]) -> Self {
        let n: usize = parts.iter().map(Algebra::dim).sum();
        let mut labels = Vec::with_capacity(n);
        let mut mult = vec![vec![vec![Q::zero(); n]; n]; n];
        let mut unit = vec![Q::zero(); n];
        let mut idempotents = Vec::new();
        let mut off = 0;
        for (t, part) in parts.iter().enumerate() {
            let d = part.dim();
            labels.extend(part.labels.iter().map(|l| format!("{l}.{}", t + 1)));
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        mult[off + a][off + b][off + c] = part.mult[a][b][c].clone();
                    }
                }
                unit[off + a] = part.unit[a].clone();
            }
            for e in &part.idempotents {
                let mut v = vec![Q::zero(); n];
                v[off..off + d].clone_from_slice(e);
                idempotents.push(v);
            }
            off += d;
        }
        Algebra::new(labels, mult, unit, idempotents).expect("direct sum of algebras")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Q>] {
        &self.idempotents
    }

    pub fn basis(&self, k: usize) -> Vec<Q> {
        basis_vector(self.dim(), k)
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let coef = xa * yb;
                for (c, m) in self.mult[a][b].iter().enumerate() {
                    if !m.is_zero() {
                        out[c] += &coef * m;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul(&self, x: &[Q]) -> Matrix {
        let cols: Vec<Vec<Q>> = (0..self.dim())
            .map(|b| self.mul(x, &self.basis(b)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul(&self, x: &[Q]) -> Matrix {
        let cols: Vec<Vec<Q>> = (0..self.dim())
            .map(|b| self.mul(&self.basis(b), x))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// `dim x A y`.
    pub fn corner_dim(&self, x: &[Q], y: &[Q]) -> usize {
        (&self.left_mul(x) * &self.right_mul(y)).rank()
    }

    /// The subspace `A·x`.
    pub fn left_ideal(&self, x: &[Q]) -> Subspace {
        Subspace::span(self.dim(), &self.right_mul(x))
    }

    /// The subspace `x·A`.
    pub fn right_ideal(&self, x: &[Q]) -> Subspace {
        Subspace::span(self.dim(), &self.left_mul(x))
    }
}

fn basis_vector(n: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[k] = Q::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_and_corners() {
        let d = Algebra::dual_numbers();
        assert_eq!(d.dim(), 2);
        let e = d.idempotents()[0].clone();
        assert_eq!(d.corner_dim(&e, &e), 2);
        let sum = Algebra::direct_sum(&[Algebra::field(), d]);
        assert_eq!(sum.dim(), 3);
        assert_eq!(sum.labels(), ["1.1", "1.2", "x.2"]);
        let idem = sum.idempotents().to_vec();
        assert_eq!(sum.corner_dim(&idem[0], &idem[1]), 0);
        assert_eq!(sum.corner_dim(&idem[1], &idem[1]), 2);
        assert_eq!(sum.left_ideal(&idem[1]).dim(), 2);
    }

    #[test]
    fn rejects_bad_structure() {
        let (z, o) = (q(0), q(1));
        // x·x = 1 with unit 1 is fine; break the unit instead
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), z.clone()]],
        ];
        let err = Algebra::new(
            vec!["1".into(), "x".into()],
            mult,
            vec![o.clone(), z.clone()],
            vec![vec![o, z]],
        );
        assert_eq!(err, Err(AlgebraError::Unit));
        let bad_idem = Algebra::new(
            vec!["1".into()],
            vec![vec![vec![q(1)]]],
            vec![q(1)],
            vec![vec![q(2)]],
        );
        assert_eq!(bad_idem, Err(AlgebraError::NotIdempotent(0)));
    }
}
