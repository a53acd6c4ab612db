//! Analysis documents: everything computed about one table, as JSON or as
//! stable line-oriented text.

use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cells::{CellKind, CellPartition, CellStructure, RegularityWitness};
use crate::lint::{fiat_lint, LintReport};
use crate::model::{validate, MorphId, MultiCat};
use crate::strong::{cartan_blocks, duflo_element, eq62_from_table, m_table};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub input_sha256: Option<String>,
    pub seed: u64,
}

impl Provenance {
    pub fn new(input: Option<&str>, seed: u64) -> Self {
        Provenance {
            tool: TOOL.to_string(),
            version: VERSION.to_string(),
            input_sha256: input.map(sha256_hex),
            seed,
        }
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationEntry {
    pub law: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationSection {
    pub valid: bool,
    pub violations: Vec<ViolationEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSection {
    pub kind: String,
    pub classes: Vec<Vec<String>>,
    /// `[lower, upper]` class indices.
    pub hasse: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MEntry {
    pub f: String,
    pub h: String,
    pub target: Option<String>,
    pub m: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockEntry {
    pub right_cell: Vec<String>,
    pub object: String,
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSidedSection {
    pub class: usize,
    pub members: Vec<String>,
    pub regular: bool,
    pub strongly_regular: bool,
    pub regularity_witnesses: Vec<String>,
    pub duflo: Vec<[String; 2]>,
    pub m_diagonal: Vec<(String, u64)>,
    pub m_table: Vec<MEntry>,
    pub cartan_blocks: Vec<BlockEntry>,
    pub eq62: Option<bool>,
    pub eq62_witness: Option<Vec<String>>,
    pub errors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LintCheckEntry {
    pub name: String,
    pub status: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LintSection {
    pub fiat_certified_impossible: bool,
    pub checks: Vec<LintCheckEntry>,
}

impl From<&LintReport> for LintSection {
    fn from(r: &LintReport) -> Self {
        LintSection {
            fiat_certified_impossible: r.fiat_certified_impossible,
            checks: r
                .checks
                .iter()
                .map(|c| LintCheckEntry {
                    name: c.name.to_string(),
                    status: c.status.to_string(),
                    witnesses: c.witnesses.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub provenance: Provenance,
    pub objects: Vec<String>,
    pub morphisms: Vec<String>,
    pub validation: ValidationSection,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<PartitionSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub two_sided: Vec<TwoSidedSection>,
    /// `m_{F,F}` for every morph in a strongly regular cell, in morph order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub m_diagonal: Vec<(String, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lint: Option<LintSection>,
}

pub fn partition_section(cat: &MultiCat, p: &CellPartition) -> PartitionSection {
    PartitionSection {
        kind: p.kind.name().to_string(),
        classes: p.labels(cat),
        hasse: p.hasse.iter().map(|&(a, b)| [a, b]).collect(),
    }
}

fn labels(cat: &MultiCat, ms: &[MorphId]) -> Vec<String> {
    ms.iter().map(|&m| cat.label(m).to_string()).collect()
}

fn witness_text(s: &CellStructure<'_>, w: &RegularityWitness) -> String {
    let cat = s.cat();
    let first = |p: &CellPartition, c: usize| cat.label(p.members(c)[0]).to_string();
    match *w {
        RegularityWitness::ComparableRightCells(a, b) => {
            format!(
                "right cell of {} lies below right cell of {}",
                first(&s.right, a),
                first(&s.right, b)
            )
        }
        RegularityWitness::EmptyIntersection { left, right } => {
            format!(
                "left cell of {} misses right cell of {}",
                first(&s.left, left),
                first(&s.right, right)
            )
        }
        RegularityWitness::LargeIntersection { left, right, size } => format!(
            "left cell of {} meets right cell of {} in {size} elements",
            first(&s.left, left),
            first(&s.right, right)
        ),
    }
}

fn two_sided_section(s: &CellStructure<'_>, q: usize) -> TwoSidedSection {
    let cat = s.cat();
    let verdict = s.classify_two_sided(q).expect("class in range");
    let mut sec = TwoSidedSection {
        class: q,
        members: labels(cat, s.two_sided.members(q)),
        regular: verdict.regular,
        strongly_regular: verdict.strongly_regular,
        regularity_witnesses: verdict
            .witnesses
            .iter()
            .map(|w| witness_text(s, w))
            .collect(),
        duflo: vec![],
        m_diagonal: vec![],
        m_table: vec![],
        cartan_blocks: vec![],
        eq62: None,
        eq62_witness: None,
        errors: vec![],
    };
    if !verdict.strongly_regular {
        return sec;
    }
    for rc in s.right_cells_in(q) {
        match duflo_element(s, rc) {
            Ok(d) => sec.duflo.push([
                cat.label(s.right.members(rc)[0]).to_string(),
                cat.label(d).to_string(),
            ]),
            Err(e) => sec.errors.push(e.to_string()),
        }
    }
    if !sec.errors.is_empty() {
        return sec;
    }
    let table = match m_table(s, q) {
        Ok(t) => t,
        Err(e) => {
            sec.errors.push(e.to_string());
            return sec;
        }
    };
    sec.m_diagonal = s
        .two_sided
        .members(q)
        .iter()
        .map(|&f| (cat.label(f).to_string(), table.diagonal(f)))
        .collect();
    sec.m_table = table
        .m
        .iter()
        .map(|(&(f, h), &m)| MEntry {
            f: cat.label(f).to_string(),
            h: cat.label(h).to_string(),
            target: table.target.get(&(f, h)).map(|&g| cat.label(g).to_string()),
            m,
        })
        .collect();
    for rc in s.right_cells_in(q) {
        match cartan_blocks(s, rc) {
            Ok(blocks) => sec
                .cartan_blocks
                .extend(blocks.into_iter().map(|b| BlockEntry {
                    right_cell: labels(cat, s.right.members(rc)),
                    object: cat.object_label(b.target_object).to_string(),
                    basis: labels(cat, &b.basis),
                    matrix: b.matrix,
                })),
            Err(e) => sec.errors.push(e.to_string()),
        }
    }
    let eq62 = eq62_from_table(s, &table);
    sec.eq62 = Some(eq62.holds);
    sec.eq62_witness = eq62.witness.map(|lc| labels(cat, s.left.members(lc)));
    sec
}

/// Full analysis; an invalid table gets only its validation section.
pub fn report_analyze(cat: &MultiCat, provenance: Provenance) -> Analysis {
    let validation = validate(cat);
    let mut doc = Analysis {
        provenance,
        objects: cat.object_labels().to_vec(),
        morphisms: cat.morphs().iter().map(|m| m.label.clone()).collect(),
        validation: ValidationSection {
            valid: validation.is_valid(),
            violations: validation
                .violations
                .iter()
                .map(|v| ViolationEntry {
                    law: v.law().to_string(),
                    witness: v.describe(cat),
                })
                .collect(),
        },
        cells: vec![],
        two_sided: vec![],
        m_diagonal: vec![],
        lint: None,
    };
    if !validation.is_valid() {
        return doc;
    }
    let s = CellStructure::new(cat);
    doc.cells = CellKind::ALL
        .iter()
        .map(|&k| partition_section(cat, s.partition(k)))
        .collect();
    doc.two_sided = (0..s.two_sided.len())
        .map(|q| two_sided_section(&s, q))
        .collect();
    let diag: std::collections::HashMap<&str, u64> = doc
        .two_sided
        .iter()
        .flat_map(|t| t.m_diagonal.iter().map(|(f, m)| (f.as_str(), *m)))
        .collect();
    doc.m_diagonal = doc
        .morphisms
        .iter()
        .filter_map(|f| diag.get(f.as_str()).map(|&m| (f.clone(), m)))
        .collect();
    doc.lint = Some(LintSection::from(&fiat_lint(cat)));
    doc
}

fn join(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(", "))
}

pub fn render_partition(p: &PartitionSection) -> String {
    let mut out = String::new();
    for (k, c) in p.classes.iter().enumerate() {
        let _ = writeln!(out, "{} cell {k}: {}", p.kind, join(c));
    }
    for [a, b] in &p.hasse {
        let _ = writeln!(out, "{} order: {a} < {b}", p.kind);
    }
    out
}

pub fn render_lint(l: &LintSection) -> String {
    let mut out = String::new();
    for c in &l.checks {
        let _ = writeln!(out, "lint {}: {}", c.name, c.status);
        for w in &c.witnesses {
            let _ = writeln!(out, "  witness: {w}");
        }
    }
    let _ = writeln!(
        out,
        "fiat-certified-impossible: {}",
        l.fiat_certified_impossible
    );
    out
}

pub fn render_text(a: &Analysis) -> String {
    let mut out = String::new();
    let p = &a.provenance;
    let _ = writeln!(out, "{} {}", p.tool, p.version);
    if let Some(h) = &p.input_sha256 {
        let _ = writeln!(out, "input sha256: {h}");
    }
    let _ = writeln!(out, "seed: {}", p.seed);
    let _ = writeln!(out, "objects: {}", a.objects.join(" "));
    let _ = writeln!(out, "morphisms: {}", a.morphisms.join(" "));
    let _ = writeln!(out, "valid: {}", a.validation.valid);
    for v in &a.validation.violations {
        let _ = writeln!(out, "violation {}: {}", v.law, v.witness);
    }
    for c in &a.cells {
        out.push_str(&render_partition(c));
    }
    for t in &a.two_sided {
        let _ = writeln!(
            out,
            "two-sided cell {}: {} regular={} strongly_regular={}",
            t.class,
            join(&t.members),
            t.regular,
            t.strongly_regular
        );
        for w in &t.regularity_witnesses {
            let _ = writeln!(out, "  regularity witness: {w}");
        }
        for [r, d] in &t.duflo {
            let _ = writeln!(out, "  duflo of right cell of {r}: {d}");
        }
        if !t.m_diagonal.is_empty() {
            let diag: Vec<String> = t
                .m_diagonal
                .iter()
                .map(|(f, m)| format!("{f}={m}"))
                .collect();
            let _ = writeln!(out, "  m diagonal: {}", diag.join(" "));
        }
        for e in &t.m_table {
            let target = e.target.as_deref().unwrap_or("0");
            let _ = writeln!(out, "  m({},{}) = {} -> {}", e.f, e.h, e.m, target);
        }
        for b in &t.cartan_blocks {
            let rows: Vec<String> = b
                .matrix
                .iter()
                .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(
                out,
                "  cartan block {} at {}: basis {} matrix [{}]",
                join(&b.right_cell),
                b.object,
                join(&b.basis),
                rows.join("; ")
            );
        }
        if let Some(h) = t.eq62 {
            let _ = writeln!(out, "  m constant on left cells: {h}");
        }
        if let Some(w) = &t.eq62_witness {
            let _ = writeln!(out, "  non-constant left cell: {}", join(w));
        }
        for e in &t.errors {
            let _ = writeln!(out, "  error: {e}");
        }
    }
    if !a.m_diagonal.is_empty() {
        let diag: Vec<String> = a
            .m_diagonal
            .iter()
            .map(|(f, m)| format!("{f}={m}"))
            .collect();
        let _ = writeln!(out, "m diagonal: {}", diag.join(" "));
    }
    if let Some(l) = &a.lint {
        out.push_str(&render_lint(l));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::make_sl2_singular;

    #[test]
    fn sl2_document() {
        let doc = report_analyze(&make_sl2_singular(), Provenance::new(None, 0));
        assert!(doc.validation.valid);
        assert_eq!(doc.two_sided.len(), 2);
        let big = &doc.two_sided[1];
        let diag: Vec<u64> = big.m_diagonal.iter().map(|(_, m)| *m).collect();
        assert_eq!(diag, vec![1, 1, 2, 2]);
        assert_eq!(big.eq62, Some(true));
        assert!(!doc.lint.as_ref().unwrap().fiat_certified_impossible);
        let text = render_text(&doc);
        assert!(text.contains("right cell 1: {1_j, theta_out}"));
    }

    #[test]
    fn hash_is_stable() {
        assert_eq!(
            sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
