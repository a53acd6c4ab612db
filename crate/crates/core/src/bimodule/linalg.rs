//! Dense matrices over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-1/2"`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (BigInt, BigInt) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (!b.is_zero()).then(|| Q::new(a, b))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = q(x);
            }
        }
        m
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Q) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn hstack(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let t: Vec<Matrix> = blocks.iter().map(Matrix::transpose).collect();
        Matrix::hstack(&t).transpose()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let x = &m[(r, j)] * &factor;
                    m[(i, j)] -= x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Q::zero(); self.cols];
                v[fc] = Q::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self · x = b`.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::hstack(&[self.clone(), Matrix::from_columns(self.rows, &[b.to_vec()])]);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = Matrix::hstack(&[self.clone(), Matrix::identity(n)]).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Subspace with a basis in reduced column echelon form: the rows listed in
/// `pivots` of `basis` form an identity matrix, so coordinates of a vector
/// in the subspace are read off at those rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &Matrix) -> Subspace {
        assert_eq!(vectors.rows, ambient);
        let (r, pivots) = vectors.transpose().rref();
        let dim = pivots.len();
        let mut basis = Matrix::zeros(ambient, dim);
        for k in 0..dim {
            for i in 0..ambient {
                basis[(i, k)] = r[(k, i)].clone();
            }
        }
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn coords(&self, v: &[Q]) -> Vec<Q> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Matrix of `op` on the subspace, assuming it is invariant.
    pub fn restrict(&self, op: &Matrix) -> Matrix {
        let image = op * &self.basis;
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (k, &p) in self.pivots.iter().enumerate() {
            for j in 0..self.dim() {
                out[(k, j)] = image[(p, j)].clone();
            }
        }
        debug_assert!(&self.basis * &out == image, "subspace not invariant");
        out
    }

    pub fn is_invariant(&self, op: &Matrix) -> bool {
        let image = op * &self.basis;
        let r = self.restrict_unchecked(&image);
        &self.basis * &r == image
    }

    fn restrict_unchecked(&self, image: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.dim(), image.cols);
        for (k, &p) in self.pivots.iter().enumerate() {
            for j in 0..image.cols {
                out[(k, j)] = image[(p, j)].clone();
            }
        }
        out
    }
}

/// Quotient `W / im(phi)` with projection and a section.
pub struct Cokernel {
    pub projection: Matrix,
    pub section: Matrix,
}

pub fn cokernel(phi: &Matrix) -> Cokernel {
    let w = phi.rows;
    let image = Subspace::span(w, phi);
    // standard vectors at the non-pivot rows complete the echelon basis, and
    // v = B·v[pivots] + (v - B·v[pivots]) splits along it
    let rest: Vec<usize> = (0..w).filter(|i| !image.pivots.contains(i)).collect();
    let mut projection = Matrix::zeros(rest.len(), w);
    let mut section = Matrix::zeros(w, rest.len());
    for (k, &i) in rest.iter().enumerate() {
        projection[(k, i)] = Q::one();
        for (c, &p) in image.pivots.iter().enumerate() {
            projection[(k, p)] = -image.basis[(i, c)].clone();
        }
        section[(i, k)] = Q::one();
    }
    Cokernel {
        projection,
        section,
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&q(-1))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let x = &self[(i, j)];
                    if x.is_negative() || !x.is_integer() {
                        x.to_string()
                    } else {
                        format!(" {x}")
                    }
                })
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nullspace_and_rank() {
        let m = Matrix::from_ints(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.apply(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(
            parse_q("-1/2"),
            Some(Q::new(BigInt::from(-1), BigInt::from(2)))
        );
        assert_eq!(parse_q("4"), Some(q(4)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(parse_q("x"), None);
    }

    #[test]
    fn cokernel_of_line() {
        let phi = Matrix::from_ints(&[vec![1], vec![1]]);
        let c = cokernel(&phi);
        assert_eq!(c.projection.rows(), 1);
        assert!((&c.projection * &phi).is_zero());
        assert_eq!(&c.projection * &c.section, Matrix::identity(1));
    }

    fn small() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
                .prop_map(|rows| Matrix::from_ints(&rows))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small()) {
            prop_assert_eq!(m.rank() + m.nullspace().len(), m.cols());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn cokernel_dimension(m in small()) {
            let c = cokernel(&m);
            prop_assert_eq!(c.projection.rows(), m.rows() - m.rank());
            prop_assert!((&c.projection * &m).is_zero());
            prop_assert_eq!(&c.projection * &c.section, Matrix::identity(c.projection.rows()));
        }

        #[test]
        fn inverse_roundtrip(m in small()) {
            if let Some(inv) = m.inverse() {
                prop_assert_eq!(&m * &inv, Matrix::identity(m.rows()));
            } else {
                prop_assert!(m.rows() != m.cols() || m.rank() < m.rows());
            }
        }
    }
}
