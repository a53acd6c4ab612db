//! Necessary conditions for a table to decategorify a fiat category.
//!
//! Each check is run exhaustively over every tuple meeting its hypotheses.
//! A single failure means no fiat category with these multiplicities exists.

use std::fmt;

use crate::cells::CellStructure;
use crate::model::{validate, MorphId, MultiCat};
use crate::strong::{cartan_blocks, duflo_element, eq62_from_table, m_table, MTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LintReport {
    pub checks: Vec<CheckResult>,
    pub fiat_certified_impossible: bool,
}

impl LintReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name)
            .collect()
    }

    pub fn all_pass(&self) -> bool {
        !self.fiat_certified_impossible
    }
}

/// Table axioms, reported one check per law.
pub const TABLE_LAWS: [&str; 7] = [
    "summand-typing",
    "unit-law",
    "associativity",
    "star-typing",
    "star-fixes-identities",
    "star-involutive",
    "star-anti-automorphism",
];

/// Identities of fiat categories, in report order.
pub const CELL_CHECKS: [&str; 10] = [
    "star-cell-compatibility",
    "regular-intersections-nonempty",
    "duflo-unique-self-dual",
    "m-symmetry",
    "purity",
    "m-product-identity",
    "cartan-symmetry",
    "m-bounded-by-self-dual",
    "m-divides-self-dual",
    "m-constant-on-left-cells",
];

struct Battery {
    checks: Vec<CheckResult>,
}

impl Battery {
    fn new(names: &[&'static str]) -> Self {
        Battery {
            checks: names
                .iter()
                .map(|&name| CheckResult {
                    name,
                    status: Status::NotApplicable,
                    witnesses: vec![],
                })
                .collect(),
        }
    }

    fn get(&mut self, name: &str) -> &mut CheckResult {
        self.checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("known check")
    }

    fn pass(&mut self, name: &str) {
        let c = self.get(name);
        if c.status == Status::NotApplicable {
            c.status = Status::Pass;
        }
    }

    fn fail(&mut self, name: &str, witness: String) {
        let c = self.get(name);
        c.status = Status::Fail;
        c.witnesses.push(witness);
    }

    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name)
        } else {
            self.fail(name, witness())
        }
    }
}

pub fn fiat_lint(cat: &MultiCat) -> LintReport {
    let mut names: Vec<&'static str> = TABLE_LAWS.to_vec();
    names.extend(CELL_CHECKS);
    let mut b = Battery::new(&names);

    let validation = validate(cat);
    for v in &validation.violations {
        b.fail(v.law(), v.describe(cat));
    }
    if validation.is_valid() {
        for law in TABLE_LAWS {
            b.pass(law);
        }
        cell_checks(cat, &mut b);
    }

    for c in &mut b.checks {
        c.witnesses.sort();
        c.witnesses.dedup();
    }
    let fiat_certified_impossible = b.checks.iter().any(|c| c.status == Status::Fail);
    LintReport {
        checks: b.checks,
        fiat_certified_impossible,
    }
}

fn cell_checks(cat: &MultiCat, b: &mut Battery) {
    let s = CellStructure::new(cat);
    let l = |m: MorphId| cat.label(m).to_string();

    for f in cat.morph_ids() {
        let fs = cat.star(f);
        b.record("star-cell-compatibility", s.two_sided.same(f, fs), || {
            format!("{} and {} lie in different two-sided cells", l(f), l(fs))
        });
    }

    for q in 0..s.two_sided.len() {
        let verdict = s.classify_two_sided(q).expect("class in range");
        if !verdict.regular {
            continue;
        }
        let rights = s.right_cells_in(q);
        let lefts = s.left_cells_in(q);
        for &lc in &lefts {
            for &rc in &rights {
                let hit = s.left.members(lc).iter().any(|&m| s.right.class(m) == rc);
                b.record("regular-intersections-nonempty", hit, || {
                    format!(
                        "left cell of {} misses right cell of {}",
                        l(s.left.members(lc)[0]),
                        l(s.right.members(rc)[0])
                    )
                });
            }
        }
        if !verdict.strongly_regular {
            continue;
        }

        let mut duflo_ok = true;
        for &rc in &rights {
            match duflo_element(&s, rc) {
                Ok(_) => b.pass("duflo-unique-self-dual"),
                Err(e) => {
                    duflo_ok = false;
                    b.fail(
                        "duflo-unique-self-dual",
                        format!("{} (right cell of {})", e, l(s.right.members(rc)[0])),
                    );
                }
            }
        }
        if !duflo_ok {
            continue;
        }
        let table = match m_table(&s, q) {
            Ok(t) => t,
            Err(e) => {
                b.fail("purity", e.to_string());
                continue;
            }
        };
        b.pass("purity");
        m_checks(&s, &table, b);
        for &rc in &rights {
            match cartan_blocks(&s, rc) {
                Ok(blocks) => {
                    for block in blocks {
                        let diag_ok = (0..block.matrix.len()).all(|a| block.matrix[a][a] >= 1);
                        b.record("cartan-symmetry", block.is_symmetric() && diag_ok, || {
                            format!(
                                "Cartan block of right cell of {} at {} is {:?}",
                                l(s.right.members(rc)[0]),
                                cat.object_label(block.target_object),
                                block.matrix
                            )
                        });
                    }
                }
                Err(e) => b.fail("cartan-symmetry", e.to_string()),
            }
        }
        let eq62 = eq62_from_table(&s, &table);
        b.record("m-constant-on-left-cells", eq62.holds, || {
            let lc = eq62.witness.expect("witness on failure");
            let vals: Vec<String> = s
                .left
                .members(lc)
                .iter()
                .map(|&f| format!("{}:{}", l(f), table.diagonal(f)))
                .collect();
            format!("left cell {{{}}}", vals.join(", "))
        });
    }
}

fn m_checks(s: &CellStructure<'_>, table: &MTable, b: &mut Battery) {
    let cat = s.cat();
    let l = |m: MorphId| cat.label(m).to_string();
    let members = s.two_sided.members(table.cell);
    let q = table.cell;
    let in_q = |m: MorphId| s.two_sided.class(m) == q;

    for &f in members {
        let mff = table.diagonal(f);
        b.record("purity", mff >= 1, || format!("m({0},{0}) = 0", l(f)));
        for &h in members {
            if f == h || !s.right.same(f, h) || cat.tgt(f) != cat.tgt(h) {
                continue;
            }
            let (a, c) = (table.get(f, h), table.get(h, f));
            b.record("m-symmetry", a == c, || {
                format!(
                    "m({},{}) = {:?} but m({},{}) = {:?}",
                    l(f),
                    l(h),
                    a,
                    l(h),
                    l(f),
                    c
                )
            });
        }
    }

    for &h in members.iter().filter(|&&h| cat.is_self_dual(h)) {
        let mhh = table.diagonal(h);
        for &f in members {
            if s.right.same(f, h) {
                // f ∘ h = m_{h,h} f and h ∘ f* = m_{h,h} f*, read inside the cell
                let fs = cat.star(f);
                for (g, x, want) in [(f, h, f), (h, fs, fs)] {
                    let mut got = cat.compose(g, x).expect("composable").clone();
                    got.retain(in_q);
                    let ok = got.single() == Some((want, mhh));
                    b.record("purity", ok, || {
                        format!(
                            "{}∘{} = {}, expected {}·{}",
                            l(g),
                            l(x),
                            got.render(cat),
                            mhh,
                            l(want)
                        )
                    });
                }
            }
            if s.left.same(f, h) {
                let mff = table.diagonal(f);
                b.record("m-bounded-by-self-dual", mff <= mhh, || {
                    format!("m({0},{0}) = {1} > m({2},{2}) = {3}", l(f), mff, l(h), mhh)
                });
                b.record("m-divides-self-dual", mff != 0 && mhh.is_multiple_of(mff), || {
                    format!(
                        "m({0},{0}) = {1} does not divide m({2},{2}) = {3}",
                        l(f),
                        mff,
                        l(h),
                        mhh
                    )
                });
                // product identity with the self-dual g in the right cell of f
                for &g in members
                    .iter()
                    .filter(|&&g| cat.is_self_dual(g) && s.right.same(g, f))
                {
                    let lhs = mff * table.diagonal(g);
                    let rhs = table.diagonal(cat.star(f)) * mhh;
                    b.record("m-product-identity", lhs == rhs, || {
                        format!(
                            "m({f},{f})·m({g},{g}) = {lhs} but m({fs},{fs})·m({h},{h}) = {rhs}",
                            f = l(f),
                            g = l(g),
                            fs = l(cat.star(f)),
                            h = l(h)
                        )
                    });
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_s2, make_sl2_singular};

    #[test]
    fn builtins_pass() {
        for cat in [make_s2(), make_sl2_singular()] {
            let report = fiat_lint(&cat);
            assert!(report.all_pass(), "{:?}", report.failed());
            assert!(report.checks.iter().all(|c| c.status != Status::Fail));
            assert_eq!(
                report.check("m-constant-on-left-cells").unwrap().status,
                Status::Pass
            );
        }
    }

    #[test]
    fn star_mutation_fails_table_law() {
        let s2 = make_s2();
        let f = s2.find_morph("F").unwrap();
        let bad = s2.with_star(f, s2.find_morph("1_i").unwrap()).unwrap();
        let report = fiat_lint(&bad);
        assert!(report.fiat_certified_impossible);
        assert!(report.failed().contains(&"star-involutive"));
        assert_eq!(
            report.check("purity").unwrap().status,
            Status::NotApplicable
        );
    }
}
