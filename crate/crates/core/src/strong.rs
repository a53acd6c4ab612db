//! Invariants of strongly regular two-sided cells.
//!
//! Composites inside a cell `Q` are read in the 2-category attached to `Q`:
//! summands lying outside `Q` are dropped. Such summands are always strictly
//! above `Q` in the two-sided order, since every summand of `h ∘ f` is
//! `>=_R f`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cells::{CellError, CellStructure};
use crate::model::{MorphId, Morphism, MultiCat, Multiset, ObjectId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrongError {
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error("two-sided cell {0} is not strongly regular")]
    NotStronglyRegular(usize),
    #[error("right cell {right_class} has {count} self-dual elements, expected exactly one")]
    DufloCount { right_class: usize, count: usize },
    #[error("{0} and {1} do not lie in one two-sided cell")]
    DifferentCells(String, String),
    #[error("{0} and {1} are not composable")]
    NotComposable(String, String),
    #[error("star({h})∘{f} = {composite} is not a multiple of {expected}")]
    Purity {
        f: String,
        h: String,
        composite: String,
        expected: String,
    },
    #[error("right cell {right_class} has no element with target {object}")]
    EmptyBasis { right_class: usize, object: String },
    #[error("right class index {0} out of range")]
    RightClassOutOfRange(usize),
}

/// m-coefficients of one strongly regular two-sided cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTable {
    pub cell: usize,
    /// `(f, h) -> m_{f,h}` for every pair with `star(h) ∘ f` composable.
    pub m: BTreeMap<(MorphId, MorphId), u64>,
    /// The summand `g` with `star(h) ∘ f = m·g`, when nonzero.
    pub target: BTreeMap<(MorphId, MorphId), MorphId>,
    pub duflo: BTreeMap<usize, MorphId>,
}

impl MTable {
    pub fn get(&self, f: MorphId, h: MorphId) -> Option<u64> {
        self.m.get(&(f, h)).copied()
    }

    pub fn diagonal(&self, f: MorphId) -> u64 {
        self.m[&(f, f)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanBlock {
    pub right_class: usize,
    pub target_object: ObjectId,
    pub basis: Vec<MorphId>,
    /// `matrix[a][b]` = multiplicity of the Duflo element in
    /// `star(basis[a]) ∘ basis[b]`.
    pub matrix: Vec<Vec<u64>>,
}

impl CartanBlock {
    pub fn is_symmetric(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|a| (0..n).all(|b| self.matrix[a][b] == self.matrix[b][a]))
    }

    /// Lexicographically smallest matrix over simultaneous basis
    /// permutations. Blocks equal up to relabeling have equal canonical forms.
    pub fn canonical(&self) -> Vec<Vec<u64>> {
        let n = self.matrix.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<Vec<u64>>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let cand: Vec<Vec<u64>> = p
                .iter()
                .map(|&a| p.iter().map(|&b| self.matrix[a][b]).collect())
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        });
        best.unwrap_or_default()
    }
}

fn permute_all(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute_all(p, k + 1, visit);
        p.swap(k, i);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eq62Verdict {
    pub holds: bool,
    /// A left cell on which `f -> m_{f,f}` is not constant.
    pub witness: Option<usize>,
}

/// Summands dropped when restricting to a cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RestrictionReport {
    /// `(g, f, summand, multiplicity)` in the labels of the original table.
    pub discarded: Vec<(MorphId, MorphId, MorphId, u64)>,
}

fn require_strong(s: &CellStructure<'_>, q: usize) -> Result<(), StrongError> {
    let verdict = s.classify_two_sided(q)?;
    if verdict.strongly_regular {
        Ok(())
    } else {
        Err(StrongError::NotStronglyRegular(q))
    }
}

/// The unique self-dual element of a strongly regular right cell.
pub fn duflo_element(s: &CellStructure<'_>, right_class: usize) -> Result<MorphId, StrongError> {
    if right_class >= s.right.len() {
        return Err(StrongError::RightClassOutOfRange(right_class));
    }
    let members = s.right.members(right_class);
    require_strong(s, s.two_sided.class(members[0]))?;
    let cat = s.cat();
    let dual: Vec<MorphId> = members
        .iter()
        .copied()
        .filter(|&m| cat.is_self_dual(m))
        .collect();
    match dual.as_slice() {
        [g] => Ok(*g),
        _ => Err(StrongError::DufloCount {
            right_class,
            count: dual.len(),
        }),
    }
}

/// `m_{f,h}`: `star(h) ∘ f = m·g` with `{g} = L_{star h} ∩ R_f`, inside the
/// cell of `f` and `h`.
pub fn m_coeff(
    s: &CellStructure<'_>,
    f: MorphId,
    h: MorphId,
) -> Result<(Option<MorphId>, u64), StrongError> {
    let cat = s.cat();
    let q = s.two_sided.class(f);
    if s.two_sided.class(h) != q {
        return Err(StrongError::DifferentCells(
            cat.label(f).into(),
            cat.label(h).into(),
        ));
    }
    require_strong(s, q)?;
    m_coeff_unchecked(s, f, h)
}

fn m_coeff_unchecked(
    s: &CellStructure<'_>,
    f: MorphId,
    h: MorphId,
) -> Result<(Option<MorphId>, u64), StrongError> {
    let cat = s.cat();
    let q = s.two_sided.class(f);
    let hs = cat.star(h);
    let mut composite = cat
        .compose(hs, f)
        .map_err(|_| StrongError::NotComposable(cat.label(hs).into(), cat.label(f).into()))?
        .clone();
    composite.retain(|m| s.two_sided.class(m) == q);
    let expected = cat
        .morph_ids()
        .find(|&g| s.left.same(g, hs) && s.right.same(g, f));
    match (composite.single(), expected) {
        _ if composite.is_empty() => Ok((None, 0)),
        (Some((g, k)), Some(e)) if g == e => Ok((Some(g), k)),
        _ => Err(StrongError::Purity {
            f: cat.label(f).into(),
            h: cat.label(h).into(),
            composite: composite.render(cat),
            expected: expected.map_or("nothing".into(), |e| cat.label(e).to_string()),
        }),
    }
}

pub fn m_table(s: &CellStructure<'_>, q: usize) -> Result<MTable, StrongError> {
    if q >= s.two_sided.len() {
        return Err(CellError::ClassOutOfRange(q).into());
    }
    require_strong(s, q)?;
    let cat = s.cat();
    let members = s.two_sided.members(q);
    let mut table = MTable {
        cell: q,
        m: BTreeMap::new(),
        target: BTreeMap::new(),
        duflo: BTreeMap::new(),
    };
    for &f in members {
        for &h in members {
            if cat.tgt(f) != cat.tgt(h) {
                continue;
            }
            let (g, m) = m_coeff_unchecked(s, f, h)?;
            table.m.insert((f, h), m);
            if let Some(g) = g {
                table.target.insert((f, h), g);
            }
        }
    }
    for r in s.right_cells_in(q) {
        table.duflo.insert(r, duflo_element(s, r)?);
    }
    Ok(table)
}

/// Whether `f -> m_{f,f}` is constant on every left cell of `q`.
pub fn check_eq62(s: &CellStructure<'_>, q: usize) -> Result<Eq62Verdict, StrongError> {
    let table = m_table(s, q)?;
    Ok(eq62_from_table(s, &table))
}

pub(crate) fn eq62_from_table(s: &CellStructure<'_>, table: &MTable) -> Eq62Verdict {
    for l in s.left_cells_in(table.cell) {
        let mut values = s.left.members(l).iter().map(|&f| table.diagonal(f));
        let first = values.next();
        if values.any(|v| Some(v) != first) {
            return Eq62Verdict {
                holds: false,
                witness: Some(l),
            };
        }
    }
    Eq62Verdict {
        holds: true,
        witness: None,
    }
}

/// Cartan matrix of the cell representation of `right_class` at object `j`.
pub fn cartan_matrix(
    s: &CellStructure<'_>,
    right_class: usize,
    j: ObjectId,
) -> Result<CartanBlock, StrongError> {
    let cat = s.cat();
    let duflo = duflo_element(s, right_class)?;
    let basis: Vec<MorphId> = s
        .right
        .members(right_class)
        .iter()
        .copied()
        .filter(|&m| cat.tgt(m) == j)
        .collect();
    if basis.is_empty() {
        return Err(StrongError::EmptyBasis {
            right_class,
            object: cat.object_label(j).to_string(),
        });
    }
    let matrix = basis
        .iter()
        .map(|&h| {
            basis
                .iter()
                .map(|&f| {
                    cat.compose_opt(cat.star(h), f)
                        .map_or(0, |ms| ms.get(duflo))
                })
                .collect()
        })
        .collect();
    Ok(CartanBlock {
        right_class,
        target_object: j,
        basis,
        matrix,
    })
}

/// Every nonempty Cartan block of a right cell, in object order.
pub fn cartan_blocks(
    s: &CellStructure<'_>,
    right_class: usize,
) -> Result<Vec<CartanBlock>, StrongError> {
    let cat = s.cat();
    let mut out = Vec::new();
    for j in cat.objects() {
        if s.right
            .members(right_class)
            .iter()
            .any(|&m| cat.tgt(m) == j)
        {
            out.push(cartan_matrix(s, right_class, j)?);
        }
    }
    Ok(out)
}

/// Table on identities and `q`, composites restricted to those morphs.
///
/// Returns the restricted table and the dropped summands. Panics only if the
/// dropped summands are not strictly above `q`, which cannot happen for a
/// table whose cells come from [`CellStructure`].
pub fn cell_subcategory(
    s: &CellStructure<'_>,
    q: usize,
) -> Result<(MultiCat, RestrictionReport), StrongError> {
    if q >= s.two_sided.len() {
        return Err(CellError::ClassOutOfRange(q).into());
    }
    require_strong(s, q)?;
    let cat = s.cat();
    let keep: Vec<MorphId> = cat
        .morph_ids()
        .filter(|&m| cat.is_identity(m) || s.two_sided.class(m) == q)
        .collect();
    let mut new_index = vec![None; cat.num_morphs()];
    for (i, &m) in keep.iter().enumerate() {
        new_index[m.0] = Some(MorphId(i));
    }
    let morphs: Vec<Morphism> = keep.iter().map(|&m| cat.morph(m).clone()).collect();
    let star: Vec<MorphId> = keep
        .iter()
        .map(|&m| new_index[cat.star(m).0].expect("cells are closed under star"))
        .collect();
    let qrep = s.two_sided.members(q)[0];
    let mut report = RestrictionReport::default();
    let mut entries = Vec::new();
    for &g in &keep {
        for &f in &keep {
            if cat.is_identity(g) || cat.is_identity(f) {
                continue;
            }
            let Some(out) = cat.compose_opt(g, f) else {
                continue;
            };
            let mut kept = Multiset::new();
            for (m, k) in out.iter() {
                match new_index[m.0] {
                    Some(nm) if s.two_sided.class(m) == q => kept.add(nm, k),
                    _ => {
                        assert!(
                            s.leq_lr(qrep, m) && !s.leq_lr(m, qrep),
                            "dropped summand {} is not above the cell",
                            cat.label(m)
                        );
                        report.discarded.push((g, f, m, k));
                    }
                }
            }
            entries.push((new_index[g.0].unwrap(), new_index[f.0].unwrap(), kept));
        }
    }
    let sub = MultiCat::new(cat.object_labels().to_vec(), morphs, star, entries)
        .expect("restriction of a well-formed table is well-formed");
    Ok((sub, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_s2, make_sl2_singular};
    use crate::model::validate;

    #[test]
    fn s2_invariants() {
        let cat = make_s2();
        let s = CellStructure::new(&cat);
        let f = cat.find_morph("F").unwrap();
        let r = s.right.class(f);
        assert_eq!(duflo_element(&s, r).unwrap(), f);
        assert_eq!(m_coeff(&s, f, f).unwrap(), (Some(f), 2));
        let block = cartan_matrix(&s, r, ObjectId(0)).unwrap();
        assert_eq!(block.matrix, vec![vec![2]]);
        let (sub, report) = cell_subcategory(&s, s.two_sided.class(f)).unwrap();
        assert_eq!(sub, cat);
        assert!(report.discarded.is_empty());
    }

    #[test]
    fn sl2_m_coefficients() {
        let cat = make_sl2_singular();
        let s = CellStructure::new(&cat);
        let m = |l| cat.find_morph(l).unwrap();
        assert_eq!(
            m_coeff(&s, m("theta"), m("theta")).unwrap(),
            (Some(m("theta")), 2)
        );
        assert_eq!(
            m_coeff(&s, m("theta_out"), m("theta_out")).unwrap(),
            (Some(m("1_j")), 2)
        );
        assert_eq!(
            m_coeff(&s, m("theta_on"), m("theta_on")).unwrap(),
            (Some(m("theta")), 1)
        );
        assert!(matches!(
            m_coeff(&s, m("theta"), m("1_i")),
            Err(StrongError::DifferentCells(..))
        ));
    }

    #[test]
    fn sl2_duflo_and_cartan() {
        let cat = make_sl2_singular();
        let s = CellStructure::new(&cat);
        let m = |l| cat.find_morph(l).unwrap();
        let (i, j) = (cat.find_object("i").unwrap(), cat.find_object("j").unwrap());
        let r1 = s.right.class(m("theta_out"));
        let r2 = s.right.class(m("theta_on"));
        assert_eq!(duflo_element(&s, r1).unwrap(), m("1_j"));
        assert_eq!(duflo_element(&s, r2).unwrap(), m("theta"));
        assert_eq!(cartan_matrix(&s, r1, j).unwrap().matrix, vec![vec![1]]);
        assert_eq!(cartan_matrix(&s, r1, i).unwrap().matrix, vec![vec![2]]);
        assert_eq!(cartan_matrix(&s, r2, i).unwrap().matrix, vec![vec![2]]);
        assert_eq!(cartan_matrix(&s, r2, j).unwrap().matrix, vec![vec![1]]);
    }

    #[test]
    fn sl2_table_and_eq62() {
        let cat = make_sl2_singular();
        let s = CellStructure::new(&cat);
        let q = s.two_sided.class(cat.find_morph("theta").unwrap());
        let table = m_table(&s, q).unwrap();
        let diag: Vec<u64> = ["1_j", "theta_on", "theta_out", "theta"]
            .iter()
            .map(|l| table.diagonal(cat.find_morph(l).unwrap()))
            .collect();
        assert_eq!(diag, vec![1, 1, 2, 2]);
        assert_eq!(table.duflo.len(), 2);
        assert!(check_eq62(&s, q).unwrap().holds);
    }

    #[test]
    fn sl2_big_cell_subcategory() {
        let cat = make_sl2_singular();
        let s = CellStructure::new(&cat);
        let q = s.two_sided.class(cat.find_morph("theta").unwrap());
        let (sub, report) = cell_subcategory(&s, q).unwrap();
        assert_eq!(sub.num_morphs(), 5);
        assert!(report.discarded.is_empty());
        assert!(validate(&sub).is_valid());
        let ss = CellStructure::new(&sub);
        assert_eq!(ss.two_sided.len(), 2);
    }

    #[test]
    fn canonical_block_ignores_basis_order() {
        let a = CartanBlock {
            right_class: 0,
            target_object: ObjectId(0),
            basis: vec![MorphId(0), MorphId(1)],
            matrix: vec![vec![2, 1], vec![1, 3]],
        };
        let b = CartanBlock {
            matrix: vec![vec![3, 1], vec![1, 2]],
            ..a.clone()
        };
        assert_eq!(a.canonical(), b.canonical());
    }
}
