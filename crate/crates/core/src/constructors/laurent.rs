use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Integer Laurent polynomial in `v`, stored densely from its lowest
/// nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        let mut p = LaurentPoly {
            low: exp,
            coeffs: vec![c],
        };
        p.normalize();
        p
    }

    /// `v + v⁻¹`
    pub fn quantum_two() -> Self {
        Self::from_terms([(1, 1), (-1, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p += &Self::monomial(c, e);
        }
        p
    }

    /// Polynomial in `q` given by coefficients `q^0, q^1, ...`, as a Laurent
    /// polynomial in `v` with `q = v²`.
    pub fn from_q_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (2 * k as i32, c)))
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.low += k as i32;
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `v -> v⁻¹`
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut p = LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        };
        p.normalize();
        p
    }

    pub fn shift(&self, by: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Coefficients in `q = v²` when only even exponents `>= 0` occur.
    pub fn q_coeffs(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return Some(vec![]);
        }
        if self.low < 0 || self.terms().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        let top = self.max_degree().unwrap() / 2;
        Some((0..=top).map(|k| self.coeff(2 * k)).collect())
    }

    fn add_scaled(&mut self, other: &LaurentPoly, sign: i64) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.scale(sign);
            return;
        }
        let low = self.low.min(other.low);
        let high = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in other.terms() {
            coeffs[(e - low) as usize] += sign * c;
        }
        self.low = low;
        self.coeffs = coeffs;
        self.normalize();
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, -1);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = LaurentPoly {
            low: self.low + rhs.low,
            coeffs,
        };
        p.normalize();
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("v")?,
                (1, _) => write!(f, "{a}v")?,
                (_, 1) => write!(f, "v^{e}")?,
                _ => write!(f, "{a}v^{e}")?,
            }
        }
        Ok(())
    }
}

/// Renders coefficients of a polynomial in `q`, e.g. `1 + q`.
pub fn format_q_poly(coeffs: &[i64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, _) => c.to_string(),
            (1, 1) => "q".to_string(),
            (1, _) => format!("{c}q"),
            (_, 1) => format!("q^{k}"),
            _ => format!("{c}q^{k}"),
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i32..5, -3i64..4), 0..5).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn quantum_two_squared() {
        let q2 = LaurentPoly::quantum_two();
        let sq = &q2 * &q2;
        assert_eq!(sq, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(sq.eval_one(), 4);
        assert_eq!(q2.bar(), q2);
    }

    #[test]
    fn q_coefficients() {
        let p = LaurentPoly::from_q_coeffs(&[1, 1]);
        assert_eq!(p.q_coeffs(), Some(vec![1, 1]));
        assert_eq!(format_q_poly(&[1, 1]), "1 + q");
        assert_eq!(LaurentPoly::quantum_two().q_coeffs(), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &a), &LaurentPoly::zero());
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }
    }
}
