use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::hecke::{hecke_elements, make_hecke, HeckeError};
use super::perm::Permutation;
use crate::cells::{CellKind, CellStructure};

/// Young tableau as rows of entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rows increase left to right, columns increase top to bottom, entries
    /// are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let shape = self.shape();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=self.size()).collect::<Vec<_>>() {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|p| p[1].iter().enumerate().all(|(c, &v)| p[0][c] < v));
        rows_ok && cols_ok
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Insertion tableau `p` and recording tableau `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Row insertion of `w(1), ..., w(n)`.
pub fn robinson_schensted(w: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, x) in w.one_line().into_iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > carry) {
                Some(k) => {
                    carry = std::mem::replace(&mut p[row][k], carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    TableauPair {
        p: Tableau { rows: p },
        q: Tableau { rows: q },
    }
}

/// Reverse bumping; `None` if the pair is not a valid RS image.
pub fn inverse_robinson_schensted(pair: &TableauPair) -> Option<Permutation> {
    if pair.p.shape() != pair.q.shape() || !pair.p.is_standard() || !pair.q.is_standard() {
        return None;
    }
    let n = pair.p.size();
    let mut p = pair.p.rows.clone();
    let mut q = pair.q.rows.clone();
    let mut out = vec![0usize; n];
    for step in (1..=n).rev() {
        let row = q.iter().position(|r| r.last() == Some(&step))?;
        q[row].pop();
        let mut carry = p[row].pop()?;
        for r in (0..row).rev() {
            // largest entry smaller than carry gets bumped up
            let k = p[r].iter().rposition(|&y| y < carry)?;
            carry = std::mem::replace(&mut p[r][k], carry);
        }
        out[step - 1] = carry;
        if q[row].is_empty() {
            q.pop();
            p.pop();
        }
    }
    Permutation::from_one_line(&out).ok()
}

/// Which tableau of the pair a cell partition is read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauSide {
    Insertion,
    Recording,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsCellReport {
    pub n: usize,
    pub right_cells: usize,
    pub left_cells: usize,
    pub two_sided_cells: usize,
    pub standard_tableaux: usize,
    /// Tableau whose equality classes are exactly the right cells, if any.
    pub right_by: Option<TableauSide>,
    pub left_by: Option<TableauSide>,
    pub two_sided_by_shape: bool,
}

impl RsCellReport {
    pub fn consistent(&self) -> bool {
        matches!(
            (self.right_by, self.left_by),
            (Some(TableauSide::Insertion), Some(TableauSide::Recording))
                | (Some(TableauSide::Recording), Some(TableauSide::Insertion))
        ) && self.two_sided_by_shape
    }
}

/// Compares the cells of the Hecke table of `S_n` with the classes of equal
/// insertion tableau, equal recording tableau and equal shape.
pub fn rs_cell_check(n: usize) -> Result<RsCellReport, HeckeError> {
    let cat = make_hecke(n)?;
    let elems = hecke_elements(n);
    let pairs: Vec<TableauPair> = elems.iter().map(robinson_schensted).collect();
    let s = CellStructure::new(&cat);

    let matches = |kind: CellKind, key: &dyn Fn(usize) -> Tableau| -> bool {
        let part = s.partition(kind);
        cat.morph_ids().all(|a| {
            cat.morph_ids()
                .all(|b| part.same(a, b) == (key(a.0) == key(b.0)))
        })
    };
    let by_p = |kind: CellKind| matches(kind, &|k| pairs[k].p.clone());
    let by_q = |kind: CellKind| matches(kind, &|k| pairs[k].q.clone());
    let (rp, rq, lp, lq) = (
        by_p(CellKind::Right),
        by_q(CellKind::Right),
        by_p(CellKind::Left),
        by_q(CellKind::Left),
    );
    // S2 fits both assignments; prefer the one every larger n uses
    let (right_by, left_by) = if rq && lp {
        (Some(TableauSide::Recording), Some(TableauSide::Insertion))
    } else if rp && lq {
        (Some(TableauSide::Insertion), Some(TableauSide::Recording))
    } else {
        let side = |p: bool, q: bool| {
            if p {
                Some(TableauSide::Insertion)
            } else if q {
                Some(TableauSide::Recording)
            } else {
                None
            }
        };
        (side(rp, rq), side(lp, lq))
    };
    let two_sided_by_shape = cat.morph_ids().all(|a| {
        cat.morph_ids()
            .all(|b| s.two_sided.same(a, b) == (pairs[a.0].p.shape() == pairs[b.0].p.shape()))
    });
    let mut tableaux: BTreeMap<Tableau, ()> = BTreeMap::new();
    for pair in &pairs {
        tableaux.insert(pair.p.clone(), ());
    }
    Ok(RsCellReport {
        n,
        right_cells: s.right.len(),
        left_cells: s.left.len(),
        two_sided_cells: s.two_sided.len(),
        standard_tableaux: tableaux.len(),
        right_by,
        left_by,
        two_sided_by_shape,
    })
}
