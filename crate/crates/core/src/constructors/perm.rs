use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..n")]
    NotBijective(Vec<usize>),
    #[error("simple reflection s{index} does not exist in S{n}")]
    BadGenerator { index: usize, n: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Permutation of `{1..n}` in one-line notation: `w[k-1] = w(k)`.
///
/// Products compose right to left: `(x * y)(k) = x(y(k))`. The simple
/// reflection `s_i` swaps `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn from_one_line(values: &[usize]) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijective(values.to_vec()));
            }
            seen[v] = true;
        }
        Ok(Permutation(values.iter().map(|&v| v as u8).collect()))
    }

    /// Parses `"3 1 2"` (or `"3,1,2"`) as one-line notation.
    pub fn parse(s: &str) -> Result<Self, PermError> {
        let values = parse_ints(s)?;
        Self::from_one_line(&values)
    }

    pub fn simple(n: usize, i: usize) -> Result<Self, PermError> {
        if i == 0 || i >= n {
            return Err(PermError::BadGenerator { index: i, n });
        }
        let mut w = Self::identity(n);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    /// Product `s_{w[0]} s_{w[1]} ...` of simple reflections.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, PermError> {
        let mut w = Self::identity(n);
        for &i in word.iter().rev() {
            if i == 0 || i >= n {
                return Err(PermError::BadGenerator { index: i, n });
            }
            w = w.left_mul_simple(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = k as u8 + 1;
        }
        Permutation(inv)
    }

    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&k| self.0[k as usize - 1]).collect())
    }

    /// `s_i * w`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `w * s_i`: swaps positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// `s_i w < w`: `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// `w s_i < w`
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    pub fn first_left_descent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.has_left_descent(i))
    }

    /// Reduced word `[i1, i2, ...]` with `self = s_{i1} s_{i2} ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = w.first_left_descent() {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Bruhat order by the tableau criterion: for every `k`, the sorted
    /// prefix `w(1..k)` of `self` is dominated entrywise by that of `other`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n());
        (1..=self.n()).all(|k| {
            let mut a: Vec<u8> = self.0[..k].to_vec();
            let mut b: Vec<u8> = other.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a.iter().zip(&b).all(|(x, y)| x <= y)
        })
    }

    /// All of `S_n`, sorted by length then lexicographically.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        heap_permutations(&mut cur, n, &mut out);
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        out
    }

    /// Compact label: one-line digits for `n <= 9`, otherwise dotted.
    pub fn compact(&self) -> String {
        if self.n() <= 9 {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

fn heap_permutations(a: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation(a.clone()));
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<usize>, PermError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| PermError::Parse(s.to_string()))
        })
        .collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
