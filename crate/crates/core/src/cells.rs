//! Left, right and two-sided preorders, their cells, and the action
//! predicates on simples of principal representations.
//!
//! `f <=_R g` iff `g` is reachable from `f` in the graph with an edge
//! `f -> k` whenever `k` is a summand of some `h ∘ f`. Left uses `f ∘ h`,
//! two-sided uses both kinds of edges. All three are reflexive.

use std::fmt;

use thiserror::Error;

use crate::model::{MorphId, MultiCat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

impl CellKind {
    pub const ALL: [CellKind; 3] = [CellKind::Right, CellKind::Left, CellKind::TwoSided];

    pub fn name(self) -> &'static str {
        match self {
            CellKind::Left => "left",
            CellKind::Right => "right",
            CellKind::TwoSided => "two-sided",
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CellKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(CellKind::Left),
            "right" => Ok(CellKind::Right),
            "two-sided" | "twosided" | "lr" => Ok(CellKind::TwoSided),
            _ => Err(format!("unknown cell kind {s:?}")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("class index {0} out of range")]
    ClassOutOfRange(usize),
    #[error("{0} and {1} are not composable")]
    NotComposable(String, String),
}

/// Reflexive-transitive closure of a relation on `n` points.
#[derive(Clone, Debug)]
pub struct Reach {
    n: usize,
    bits: Vec<bool>,
}

impl Reach {
    fn from_edges(n: usize, adj: &[Vec<usize>]) -> Self {
        let mut bits = vec![false; n * n];
        let mut stack = Vec::new();
        for start in 0..n {
            let row = &mut bits[start * n..(start + 1) * n];
            row[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        Reach { n, bits }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }
}

fn closure(cat: &MultiCat, kind: CellKind) -> Reach {
    let n = cat.num_morphs();
    let mut adj = vec![Vec::new(); n];
    for f in cat.morph_ids() {
        for h in cat.morph_ids() {
            if matches!(kind, CellKind::Right | CellKind::TwoSided) {
                if let Some(out) = cat.compose_opt(h, f) {
                    adj[f.0].extend(out.support().map(|k| k.0));
                }
            }
            if matches!(kind, CellKind::Left | CellKind::TwoSided) {
                if let Some(out) = cat.compose_opt(f, h) {
                    adj[f.0].extend(out.support().map(|k| k.0));
                }
            }
        }
        adj[f.0].sort_unstable();
        adj[f.0].dedup();
    }
    Reach::from_edges(n, &adj)
}

/// Equivalence classes of one preorder with the induced order between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPartition {
    pub kind: CellKind,
    /// Sorted members; classes are sorted by their smallest member.
    pub classes: Vec<Vec<MorphId>>,
    pub class_of: Vec<usize>,
    /// Hasse edges `(lower, upper)` of the order between classes.
    pub hasse: Vec<(usize, usize)>,
    order: Vec<bool>,
}

impl CellPartition {
    fn from_reach(kind: CellKind, reach: &Reach) -> Self {
        let n = reach.n;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<MorphId>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let members: Vec<MorphId> = (a..n)
                .filter(|&b| reach.leq(a, b) && reach.leq(b, a))
                .map(MorphId)
                .collect();
            for m in &members {
                class_of[m.0] = idx;
            }
            classes.push(members);
        }
        let k = classes.len();
        let mut order = vec![false; k * k];
        for (x, cx) in classes.iter().enumerate() {
            for (y, cy) in classes.iter().enumerate() {
                order[x * k + y] = reach.leq(cx[0].0, cy[0].0);
            }
        }
        let mut hasse = Vec::new();
        for x in 0..k {
            for y in 0..k {
                if x == y || !order[x * k + y] {
                    continue;
                }
                let covered =
                    (0..k).any(|z| z != x && z != y && order[x * k + z] && order[z * k + y]);
                if !covered {
                    hasse.push((x, y));
                }
            }
        }
        CellPartition {
            kind,
            classes,
            class_of,
            hasse,
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, m: MorphId) -> usize {
        self.class_of[m.0]
    }

    pub fn members(&self, class: usize) -> &[MorphId] {
        &self.classes[class]
    }

    /// `a <= b` in the order between classes.
    pub fn class_leq(&self, a: usize, b: usize) -> bool {
        self.order[a * self.classes.len() + b]
    }

    pub fn same(&self, a: MorphId, b: MorphId) -> bool {
        self.class_of[a.0] == self.class_of[b.0]
    }

    pub fn labels(&self, cat: &MultiCat) -> Vec<Vec<String>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&m| cat.label(m).to_string()).collect())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularityWitness {
    /// Two distinct right cells of the class, the first `<=_R` the second.
    ComparableRightCells(usize, usize),
    /// A left/right pair inside a regular class whose intersection is empty.
    EmptyIntersection { left: usize, right: usize },
    /// A left/right pair whose intersection has more than one element.
    LargeIntersection {
        left: usize,
        right: usize,
        size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub two_sided_class: usize,
    pub regular: bool,
    pub strongly_regular: bool,
    pub witnesses: Vec<RegularityWitness>,
}

/// All three preorders and partitions of one table, computed once.
#[derive(Clone, Debug)]
pub struct CellStructure<'a> {
    cat: &'a MultiCat,
    right_reach: Reach,
    left_reach: Reach,
    lr_reach: Reach,
    pub right: CellPartition,
    pub left: CellPartition,
    pub two_sided: CellPartition,
}

impl<'a> CellStructure<'a> {
    pub fn new(cat: &'a MultiCat) -> Self {
        let right_reach = closure(cat, CellKind::Right);
        let left_reach = closure(cat, CellKind::Left);
        let lr_reach = closure(cat, CellKind::TwoSided);
        CellStructure {
            cat,
            right: CellPartition::from_reach(CellKind::Right, &right_reach),
            left: CellPartition::from_reach(CellKind::Left, &left_reach),
            two_sided: CellPartition::from_reach(CellKind::TwoSided, &lr_reach),
            right_reach,
            left_reach,
            lr_reach,
        }
    }

    pub fn cat(&self) -> &'a MultiCat {
        self.cat
    }

    pub fn leq(&self, kind: CellKind, f: MorphId, g: MorphId) -> bool {
        match kind {
            CellKind::Right => self.right_reach.leq(f.0, g.0),
            CellKind::Left => self.left_reach.leq(f.0, g.0),
            CellKind::TwoSided => self.lr_reach.leq(f.0, g.0),
        }
    }

    pub fn leq_r(&self, f: MorphId, g: MorphId) -> bool {
        self.leq(CellKind::Right, f, g)
    }

    pub fn leq_l(&self, f: MorphId, g: MorphId) -> bool {
        self.leq(CellKind::Left, f, g)
    }

    pub fn leq_lr(&self, f: MorphId, g: MorphId) -> bool {
        self.leq(CellKind::TwoSided, f, g)
    }

    pub fn partition(&self, kind: CellKind) -> &CellPartition {
        match kind {
            CellKind::Right => &self.right,
            CellKind::Left => &self.left,
            CellKind::TwoSided => &self.two_sided,
        }
    }

    /// Checks `<=_LR = <=_R ⋆ <=_L = <=_L ⋆ <=_R` on all pairs; returns the
    /// first pair where the three relations disagree.
    pub fn verify_order_factorization(&self) -> Result<(), (MorphId, MorphId)> {
        let ids: Vec<MorphId> = self.cat.morph_ids().collect();
        for &f in &ids {
            for &g in &ids {
                let lr = self.leq_lr(f, g);
                let rl = ids.iter().any(|&m| self.leq_r(f, m) && self.leq_l(m, g));
                let lrl = ids.iter().any(|&m| self.leq_l(f, m) && self.leq_r(m, g));
                if lr != rl || lr != lrl {
                    return Err((f, g));
                }
            }
        }
        Ok(())
    }

    /// Right classes contained in two-sided class `q`.
    pub fn right_cells_in(&self, q: usize) -> Vec<usize> {
        sub_classes(&self.right, &self.two_sided, q)
    }

    pub fn left_cells_in(&self, q: usize) -> Vec<usize> {
        sub_classes(&self.left, &self.two_sided, q)
    }

    pub fn classify_two_sided(&self, q: usize) -> Result<RegularityVerdict, CellError> {
        if q >= self.two_sided.len() {
            return Err(CellError::ClassOutOfRange(q));
        }
        let rights = self.right_cells_in(q);
        let lefts = self.left_cells_in(q);
        let mut witnesses = Vec::new();
        for &a in &rights {
            for &b in &rights {
                if a != b && self.right.class_leq(a, b) {
                    witnesses.push(RegularityWitness::ComparableRightCells(a, b));
                }
            }
        }
        let regular = witnesses.is_empty();
        let mut strongly_regular = regular;
        for &l in &lefts {
            for &r in &rights {
                let size = self
                    .left
                    .members(l)
                    .iter()
                    .filter(|&&m| self.right.class(m) == r)
                    .count();
                if size == 0 && regular {
                    // impossible for fiat input; flags the table instead
                    witnesses.push(RegularityWitness::EmptyIntersection { left: l, right: r });
                    strongly_regular = false;
                } else if size > 1 {
                    strongly_regular = false;
                    if regular {
                        witnesses.push(RegularityWitness::LargeIntersection {
                            left: l,
                            right: r,
                            size,
                        });
                    }
                }
            }
        }
        Ok(RegularityVerdict {
            two_sided_class: q,
            regular,
            strongly_regular,
            witnesses,
        })
    }

    /// Whether `f` kills the simple `L_g` of a principal representation.
    pub fn acts_nonzero(&self, f: MorphId, g: MorphId) -> Result<bool, CellError> {
        if self.cat.src(f) != self.cat.tgt(g) {
            return Err(self.not_composable(f, g));
        }
        Ok(self.leq_l(self.cat.star(f), g))
    }

    /// Composable morphs annihilating `L_g`. Always a `<=_R`-coideal.
    pub fn annihilator_of_simple(&self, g: MorphId) -> Vec<MorphId> {
        let tgt = self.cat.tgt(g);
        let ann: Vec<MorphId> = self
            .cat
            .from_object(tgt)
            .filter(|&f| !self.leq_l(self.cat.star(f), g))
            .collect();
        debug_assert!(self.is_right_coideal(&ann, tgt));
        ann
    }

    /// Closed upwards under `<=_R` among morphs with source `src`.
    pub fn is_right_coideal(&self, set: &[MorphId], src: crate::model::ObjectId) -> bool {
        set.iter().all(|&f| {
            self.cat
                .from_object(src)
                .filter(|&h| self.leq_r(f, h))
                .all(|h| set.contains(&h))
        })
    }

    /// `[f L_g : L_h]` in the principal representation: the multiplicity of
    /// `g` in `star(f) ∘ h`.
    pub fn comp_mult_principal(
        &self,
        f: MorphId,
        g: MorphId,
        h: MorphId,
    ) -> Result<u64, CellError> {
        let cat = self.cat;
        if cat.src(f) != cat.tgt(g) {
            return Err(self.not_composable(f, g));
        }
        if cat.src(h) != cat.src(g) || cat.tgt(h) != cat.tgt(f) {
            return Err(self.not_composable(f, h));
        }
        let fs = cat.star(f);
        let mult = cat
            .compose_opt(fs, h)
            .map(|ms| ms.get(g))
            .ok_or_else(|| self.not_composable(fs, h))?;
        debug_assert!(mult == 0 || self.leq_r(h, g));
        Ok(mult)
    }

    fn not_composable(&self, a: MorphId, b: MorphId) -> CellError {
        CellError::NotComposable(self.cat.label(a).to_string(), self.cat.label(b).to_string())
    }
}

fn sub_classes(fine: &CellPartition, coarse: &CellPartition, q: usize) -> Vec<usize> {
    let mut out: Vec<usize> = coarse.classes[q].iter().map(|&m| fine.class(m)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn leq_r(cat: &MultiCat, f: MorphId, g: MorphId) -> bool {
    closure(cat, CellKind::Right).leq(f.0, g.0)
}

pub fn leq_l(cat: &MultiCat, f: MorphId, g: MorphId) -> bool {
    closure(cat, CellKind::Left).leq(f.0, g.0)
}

pub fn leq_lr(cat: &MultiCat, f: MorphId, g: MorphId) -> bool {
    closure(cat, CellKind::TwoSided).leq(f.0, g.0)
}

pub fn cells(cat: &MultiCat, kind: CellKind) -> CellPartition {
    CellPartition::from_reach(kind, &closure(cat, kind))
}
