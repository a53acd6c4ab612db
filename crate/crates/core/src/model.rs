//! Decategorified data of a finite based category with involution.
//!
//! A [`MultiCat`] stores, on isomorphism classes only, the objects, the
//! indecomposable 1-morphisms, the multiplicity table of their composites and
//! the involution `star`. Nothing here knows about 2-morphisms.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphId(pub usize);

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for MorphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An indecomposable 1-morphism `src -> tgt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub label: String,
    pub src: ObjectId,
    pub tgt: ObjectId,
    pub identity: bool,
}

impl Morphism {
    pub fn new(label: impl Into<String>, src: ObjectId, tgt: ObjectId) -> Self {
        Morphism {
            label: label.into(),
            src,
            tgt,
            identity: false,
        }
    }

    pub fn identity(label: impl Into<String>, object: ObjectId) -> Self {
        Morphism {
            label: label.into(),
            src: object,
            tgt: object,
            identity: true,
        }
    }
}

/// Direct-sum decomposition of a composite: indecomposable -> multiplicity.
///
/// Zero multiplicities are never stored; the empty multiset is the zero
/// composite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multiset {
    entries: BTreeMap<MorphId, u64>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(m: MorphId, mult: u64) -> Self {
        let mut s = Self::new();
        s.add(m, mult);
        s
    }

    pub fn add(&mut self, m: MorphId, mult: u64) {
        if mult == 0 {
            return;
        }
        let slot = self.entries.entry(m).or_insert(0);
        *slot = slot.checked_add(mult).expect("multiplicity overflow");
    }

    pub fn get(&self, m: MorphId) -> u64 {
        self.entries.get(&m).copied().unwrap_or(0)
    }

    pub fn contains(&self, m: MorphId) -> bool {
        self.entries.contains_key(&m)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct summands.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MorphId, u64)> + '_ {
        self.entries.iter().map(|(&m, &k)| (m, k))
    }

    pub fn support(&self) -> impl Iterator<Item = MorphId> + '_ {
        self.entries.keys().copied()
    }

    /// `Some((m, k))` when the multiset is `k` copies of a single `m`.
    pub fn single(&self) -> Option<(MorphId, u64)> {
        if self.entries.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn map(&self, f: impl Fn(MorphId) -> MorphId) -> Multiset {
        let mut out = Multiset::new();
        for (m, k) in self.iter() {
            out.add(f(m), k);
        }
        out
    }

    pub fn retain(&mut self, keep: impl Fn(MorphId) -> bool) {
        self.entries.retain(|&m, _| keep(m));
    }

    pub fn render(&self, cat: &MultiCat) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(m, k)| {
                if k == 1 {
                    cat.label(m).to_string()
                } else {
                    format!("{}{}", k, cat.label(m))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl FromIterator<(MorphId, u64)> for Multiset {
    fn from_iter<I: IntoIterator<Item = (MorphId, u64)>>(iter: I) -> Self {
        let mut s = Multiset::new();
        for (m, k) in iter {
            s.add(m, k);
        }
        s
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("no objects")]
    NoObjects,
    #[error("morphism {0} refers to object index {1} which does not exist")]
    UnknownObject(String, usize),
    #[error("morphism index {0} out of range")]
    UnknownMorph(usize),
    #[error("object {0} has more than one identity")]
    DuplicateIdentity(String),
    #[error("object {0} has no identity")]
    MissingIdentity(String),
    #[error("identity {0} must have equal source and target")]
    IdentityNotEndo(String),
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("{0} and {1} are not composable")]
    NotComposable(String, String),
    #[error("duplicate composition entry for ({0}, {1})")]
    DuplicateEntry(String, String),
    #[error("star map has {0} entries, expected {1}")]
    StarLength(usize, usize),
}

/// Finite based category with involution, at multiplicity level.
///
/// Composition `compose(g, f)` is `g ∘ f` (apply `f` first) and is defined
/// exactly when `src(g) == tgt(f)`. Composites with an identity follow the
/// unit law and are never read from the stored table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiCat {
    objects: Vec<String>,
    morphs: Vec<Morphism>,
    identities: Vec<MorphId>,
    star: Vec<MorphId>,
    // dense n*n, row g, column f; None when not composable
    table: Vec<Option<Multiset>>,
}

impl MultiCat {
    /// Assembles a table. Structural consistency (index ranges, one identity
    /// per object, composable entries) is enforced; the category axioms are
    /// not, see [`crate::validate`].
    ///
    /// Composable non-identity pairs without an entry are zero composites.
    pub fn new(
        objects: Vec<String>,
        morphs: Vec<Morphism>,
        star: Vec<MorphId>,
        entries: impl IntoIterator<Item = (MorphId, MorphId, Multiset)>,
    ) -> Result<Self, ModelError> {
        if objects.is_empty() {
            return Err(ModelError::NoObjects);
        }
        let n = morphs.len();
        let mut identities: Vec<Option<MorphId>> = vec![None; objects.len()];
        let mut seen = std::collections::HashSet::new();
        for (i, m) in morphs.iter().enumerate() {
            if !seen.insert(m.label.as_str()) {
                return Err(ModelError::DuplicateLabel(m.label.clone()));
            }
            for o in [m.src, m.tgt] {
                if o.0 >= objects.len() {
                    return Err(ModelError::UnknownObject(m.label.clone(), o.0));
                }
            }
            if m.identity {
                if m.src != m.tgt {
                    return Err(ModelError::IdentityNotEndo(m.label.clone()));
                }
                let slot = &mut identities[m.src.0];
                if slot.is_some() {
                    return Err(ModelError::DuplicateIdentity(objects[m.src.0].clone()));
                }
                *slot = Some(MorphId(i));
            }
        }
        let identities = identities
            .into_iter()
            .enumerate()
            .map(|(o, id)| id.ok_or_else(|| ModelError::MissingIdentity(objects[o].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        if star.len() != n {
            return Err(ModelError::StarLength(star.len(), n));
        }
        if let Some(bad) = star.iter().find(|s| s.0 >= n) {
            return Err(ModelError::UnknownMorph(bad.0));
        }

        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                if morphs[g].src == morphs[f].tgt {
                    table[g * n + f] = Some(Multiset::new());
                }
            }
        }
        let mut explicit = vec![false; n * n];
        for (g, f, out) in entries {
            if g.0 >= n {
                return Err(ModelError::UnknownMorph(g.0));
            }
            if f.0 >= n {
                return Err(ModelError::UnknownMorph(f.0));
            }
            if let Some(bad) = out.support().find(|m| m.0 >= n) {
                return Err(ModelError::UnknownMorph(bad.0));
            }
            let idx = g.0 * n + f.0;
            let (gl, fl) = (morphs[g.0].label.clone(), morphs[f.0].label.clone());
            if table[idx].is_none() {
                return Err(ModelError::NotComposable(gl, fl));
            }
            if explicit[idx] {
                return Err(ModelError::DuplicateEntry(gl, fl));
            }
            explicit[idx] = true;
            table[idx] = Some(out);
        }
        // unit law overrides anything stored for identity pairs
        for g in 0..n {
            for f in 0..n {
                let idx = g * n + f;
                if table[idx].is_none() {
                    continue;
                }
                if morphs[g].identity {
                    table[idx] = Some(Multiset::singleton(MorphId(f), 1));
                } else if morphs[f].identity {
                    table[idx] = Some(Multiset::singleton(MorphId(g), 1));
                }
            }
        }
        Ok(MultiCat {
            objects,
            morphs,
            identities,
            star,
            table,
        })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphs(&self) -> usize {
        self.morphs.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.objects.len()).map(ObjectId)
    }

    pub fn morph_ids(&self) -> impl Iterator<Item = MorphId> {
        (0..self.morphs.len()).map(MorphId)
    }

    pub fn object_label(&self, o: ObjectId) -> &str {
        &self.objects[o.0]
    }

    pub fn object_labels(&self) -> &[String] {
        &self.objects
    }

    pub fn morph(&self, m: MorphId) -> &Morphism {
        &self.morphs[m.0]
    }

    pub fn morphs(&self) -> &[Morphism] {
        &self.morphs
    }

    pub fn label(&self, m: MorphId) -> &str {
        &self.morphs[m.0].label
    }

    pub fn src(&self, m: MorphId) -> ObjectId {
        self.morphs[m.0].src
    }

    pub fn tgt(&self, m: MorphId) -> ObjectId {
        self.morphs[m.0].tgt
    }

    pub fn is_identity(&self, m: MorphId) -> bool {
        self.morphs[m.0].identity
    }

    pub fn identity(&self, o: ObjectId) -> MorphId {
        self.identities[o.0]
    }

    pub fn star(&self, m: MorphId) -> MorphId {
        self.star[m.0]
    }

    pub fn is_self_dual(&self, m: MorphId) -> bool {
        self.star[m.0] == m
    }

    pub fn find_morph(&self, label: &str) -> Option<MorphId> {
        self.morphs
            .iter()
            .position(|m| m.label == label)
            .map(MorphId)
    }

    pub fn find_object(&self, label: &str) -> Option<ObjectId> {
        self.objects.iter().position(|o| o == label).map(ObjectId)
    }

    pub fn composable(&self, g: MorphId, f: MorphId) -> bool {
        self.src(g) == self.tgt(f)
    }

    /// `g ∘ f` as a multiset of indecomposables.
    pub fn compose(&self, g: MorphId, f: MorphId) -> Result<&Multiset, ModelError> {
        self.compose_opt(g, f).ok_or_else(|| {
            ModelError::NotComposable(self.label(g).to_string(), self.label(f).to_string())
        })
    }

    pub(crate) fn compose_opt(&self, g: MorphId, f: MorphId) -> Option<&Multiset> {
        self.table[g.0 * self.morphs.len() + f.0].as_ref()
    }

    /// Stored non-unit composites in `(g, f)` order, skipping zero composites.
    pub fn nonunit_entries(&self) -> impl Iterator<Item = (MorphId, MorphId, &Multiset)> + '_ {
        let n = self.morphs.len();
        self.table
            .iter()
            .enumerate()
            .filter_map(move |(idx, cell)| {
                let (g, f) = (MorphId(idx / n), MorphId(idx % n));
                match cell {
                    Some(ms) if !ms.is_empty() && !self.is_identity(g) && !self.is_identity(f) => {
                        Some((g, f, ms))
                    }
                    _ => None,
                }
            })
    }

    /// Morphs whose source is `o`.
    pub fn from_object(&self, o: ObjectId) -> impl Iterator<Item = MorphId> + '_ {
        self.morph_ids().filter(move |&m| self.src(m) == o)
    }

    /// Morphs whose target is `o`.
    pub fn into_object(&self, o: ObjectId) -> impl Iterator<Item = MorphId> + '_ {
        self.morph_ids().filter(move |&m| self.tgt(m) == o)
    }

    /// Same table with `star` and one composite replaced; used to build
    /// mutated fixtures.
    pub fn with_entry(&self, g: MorphId, f: MorphId, out: Multiset) -> Result<Self, ModelError> {
        let mut entries: Vec<(MorphId, MorphId, Multiset)> = self
            .nonunit_entries()
            .filter(|&(a, b, _)| (a, b) != (g, f))
            .map(|(a, b, ms)| (a, b, ms.clone()))
            .collect();
        entries.push((g, f, out));
        MultiCat::new(
            self.objects.clone(),
            self.morphs.clone(),
            self.star.clone(),
            entries,
        )
    }

    pub fn with_star(&self, m: MorphId, image: MorphId) -> Result<Self, ModelError> {
        let mut star = self.star.clone();
        if m.0 >= star.len() {
            return Err(ModelError::UnknownMorph(m.0));
        }
        star[m.0] = image;
        let entries: Vec<_> = self
            .nonunit_entries()
            .map(|(a, b, ms)| (a, b, ms.clone()))
            .collect();
        MultiCat::new(self.objects.clone(), self.morphs.clone(), star, entries)
    }
}

/// A failed law, with the witnessing morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SummandTyping {
        g: MorphId,
        f: MorphId,
        summand: MorphId,
    },
    UnitLaw {
        identity: MorphId,
        morph: MorphId,
    },
    Associativity {
        h: MorphId,
        g: MorphId,
        f: MorphId,
        lhs: Multiset,
        rhs: Multiset,
    },
    StarTyping {
        morph: MorphId,
    },
    StarMovesIdentity {
        morph: MorphId,
    },
    StarNotInvolutive {
        morph: MorphId,
    },
    StarNotAntiHom {
        g: MorphId,
        f: MorphId,
    },
}

impl Violation {
    /// Stable name of the law that failed.
    pub fn law(&self) -> &'static str {
        match self {
            Violation::SummandTyping { .. } => "summand-typing",
            Violation::UnitLaw { .. } => "unit-law",
            Violation::Associativity { .. } => "associativity",
            Violation::StarTyping { .. } => "star-typing",
            Violation::StarMovesIdentity { .. } => "star-fixes-identities",
            Violation::StarNotInvolutive { .. } => "star-involutive",
            Violation::StarNotAntiHom { .. } => "star-anti-automorphism",
        }
    }

    pub fn describe(&self, cat: &MultiCat) -> String {
        let l = |m: &MorphId| cat.label(*m).to_string();
        match self {
            Violation::SummandTyping { g, f, summand } => format!(
                "{} in {}∘{} has the wrong source or target",
                l(summand),
                l(g),
                l(f)
            ),
            Violation::UnitLaw { identity, morph } => {
                format!("unit law fails for {} with {}", l(identity), l(morph))
            }
            Violation::Associativity { h, g, f, lhs, rhs } => format!(
                "({}∘{})∘{} = {} but {}∘({}∘{}) = {}",
                l(h),
                l(g),
                l(f),
                lhs.render(cat),
                l(h),
                l(g),
                l(f),
                rhs.render(cat)
            ),
            Violation::StarTyping { morph } => format!(
                "star not source/target-compatible at {} (star = {})",
                l(morph),
                cat.label(cat.star(*morph))
            ),
            Violation::StarMovesIdentity { morph } => {
                format!("star moves identity {}", l(morph))
            }
            Violation::StarNotInvolutive { morph } => format!(
                "star(star({})) = {}",
                l(morph),
                cat.label(cat.star(cat.star(*morph)))
            ),
            Violation::StarNotAntiHom { g, f } => format!(
                "star({}∘{}) differs from star({})∘star({})",
                l(g),
                l(f),
                l(f),
                l(g)
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn laws(&self) -> Vec<&'static str> {
        let mut laws: Vec<_> = self.violations.iter().map(Violation::law).collect();
        laws.dedup();
        laws
    }
}

/// Exhaustive check of every table axiom. Violations are reported, never
/// raised.
pub fn validate(cat: &MultiCat) -> ValidationReport {
    let mut violations = Vec::new();
    let ids: Vec<MorphId> = cat.morph_ids().collect();

    for &g in &ids {
        for &f in &ids {
            if let Some(out) = cat.compose_opt(g, f) {
                for s in out.support() {
                    if cat.src(s) != cat.src(f) || cat.tgt(s) != cat.tgt(g) {
                        violations.push(Violation::SummandTyping { g, f, summand: s });
                    }
                }
            }
        }
    }

    for o in cat.objects() {
        let one = cat.identity(o);
        for &f in &ids {
            if cat.tgt(f) == o && cat.compose_opt(one, f) != Some(&Multiset::singleton(f, 1)) {
                violations.push(Violation::UnitLaw {
                    identity: one,
                    morph: f,
                });
            }
            if cat.src(f) == o && cat.compose_opt(f, one) != Some(&Multiset::singleton(f, 1)) {
                violations.push(Violation::UnitLaw {
                    identity: one,
                    morph: f,
                });
            }
        }
    }

    let n = ids.len();
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u64; n];
    for &h in &ids {
        for &g in &ids {
            let Some(hg) = cat.compose_opt(h, g) else {
                continue;
            };
            for &f in &ids {
                let Some(gf) = cat.compose_opt(g, f) else {
                    continue;
                };
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                accumulate(cat, hg, |k| cat.compose_opt(k, f), &mut lhs);
                accumulate(cat, gf, |k| cat.compose_opt(h, k), &mut rhs);
                if lhs != rhs {
                    violations.push(Violation::Associativity {
                        h,
                        g,
                        f,
                        lhs: to_multiset(&lhs),
                        rhs: to_multiset(&rhs),
                    });
                }
            }
        }
    }

    let mut star_ok = true;
    for &f in &ids {
        let s = cat.star(f);
        if cat.src(s) != cat.tgt(f) || cat.tgt(s) != cat.src(f) {
            violations.push(Violation::StarTyping { morph: f });
            star_ok = false;
        }
        if cat.is_identity(f) && s != f {
            violations.push(Violation::StarMovesIdentity { morph: f });
        }
        if cat.star(s) != f {
            violations.push(Violation::StarNotInvolutive { morph: f });
            star_ok = false;
        }
    }
    if star_ok {
        for &g in &ids {
            for &f in &ids {
                let Some(gf) = cat.compose_opt(g, f) else {
                    continue;
                };
                let image = gf.map(|m| cat.star(m));
                if cat.compose_opt(cat.star(f), cat.star(g)) != Some(&image) {
                    violations.push(Violation::StarNotAntiHom { g, f });
                }
            }
        }
    }

    ValidationReport { violations }
}

// Adds Σ_K outer[K]·inner(K) into acc; ill-typed summands contribute nothing.
fn accumulate<'a>(
    _cat: &MultiCat,
    outer: &Multiset,
    inner: impl Fn(MorphId) -> Option<&'a Multiset>,
    acc: &mut [u64],
) {
    for (k, a) in outer.iter() {
        if let Some(ms) = inner(k) {
            for (m, b) in ms.iter() {
                acc[m.0] = acc[m.0]
                    .checked_add(a.checked_mul(b).expect("multiplicity overflow"))
                    .expect("multiplicity overflow");
            }
        }
    }
}

fn to_multiset(acc: &[u64]) -> Multiset {
    acc.iter()
        .enumerate()
        .map(|(i, &k)| (MorphId(i), k))
        .collect()
}
