//! The `fiatcells` command line. Exit codes: 0 success, 1 usage or input
//! error, 2 violations found.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::bimodule::{
    hom_space, load_algebras, load_bimodule, realize_ca, verify_exm2, DEFAULT_MAX_DIM,
};
use crate::cells::{CellKind, CellStructure};
use crate::constructors::hecke::DEFAULT_MAX_N;
use crate::constructors::{
    format_q_poly, kl_table, make_ca, make_hecke_with_limit, make_s2, make_sl2_singular,
    robinson_schensted, CartanData, Permutation,
};
use crate::io::{load_multicat, serialize_multicat};
use crate::lint::fiat_lint;
use crate::model::{validate, MultiCat};
use crate::report::{
    partition_section, render_lint, render_partition, render_text, report_analyze, LintSection,
    Provenance,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fiatcells",
    version,
    about = "Cells and cell invariants of multiplicity tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

/// Options shared by every command.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest bimodule dimension built during tensor products.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM, value_parser = positive)]
    pub max_dim: usize,
    /// Largest n accepted for symmetric group tables.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N, value_parser = positive)]
    pub max_n: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the table axioms.
    Validate { table: String },
    /// Print one cell partition.
    Cells {
        table: String,
        #[arg(long, default_value = "right")]
        kind: CellKind,
    },
    /// Compare two morphs, or print the order on cells.
    Order {
        table: String,
        #[arg(long, default_value = "right")]
        kind: CellKind,
        #[arg(long, requires = "g")]
        f: Option<String>,
        #[arg(long, requires = "f")]
        g: Option<String>,
    },
    /// Morphs killing the simple top of the principal representation at a morph.
    Annihilator {
        table: String,
        #[arg(long)]
        of: String,
    },
    /// Full report: cells, regularity, m-tables, Cartan blocks, lint.
    Analyze { table: String },
    /// Run every necessary condition for a fiat table.
    Lint { table: String },
    /// Emit a builtin table.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Same as `gen ca`.
    Ca {
        #[arg(long)]
        cartan: String,
    },
    /// Same as `gen hecke`.
    Hecke {
        #[arg(long)]
        n: usize,
    },
    /// Kazhdan-Lusztig polynomial of two reduced words.
    Klpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Robinson-Schensted tableaux of a permutation in one-line notation.
    Rs {
        #[arg(long)]
        perm: String,
    },
    /// Bimodule computations.
    Bimod {
        #[command(subcommand)]
        target: BimodTarget,
    },
}

#[derive(Debug, Subcommand)]
enum GenTarget {
    S2,
    Sl2,
    Ca {
        #[arg(long)]
        cartan: String,
    },
    Hecke {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum BimodTarget {
    VerifyExm2,
    RealizeCa {
        #[arg(long)]
        algebras: String,
    },
    Hom {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    config: RunConfig,
}

type Outcome = Result<i32, String>;

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn table(&mut self, path: &str) -> Result<(MultiCat, String), String> {
        let text = self.read(path)?;
        let cat = load_multicat(&text).map_err(|e| format!("{path}: {e}"))?;
        Ok((cat, text))
    }

    fn provenance(&self, text: Option<&str>) -> Provenance {
        Provenance::new(text, self.config.seed)
    }

    fn emit_text(&mut self, text: &str) -> Result<(), String> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string())
    }

    fn emit_json<T: Serialize>(&mut self, doc: &T) -> Result<(), String> {
        let mut s = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
        s.push('\n');
        self.emit_text(&s)
    }
}

/// Parses `argv` (program name first) and runs one command.
pub fn run(argv: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        config: cli.config,
    };
    match dispatch(&mut io, cli.command) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(io: &mut Io<'_>, command: Command) -> Outcome {
    match command {
        Command::Validate { table } => cmd_validate(io, &table),
        Command::Cells { table, kind } => cmd_cells(io, &table, kind),
        Command::Order { table, kind, f, g } => cmd_order(io, &table, kind, f.zip(g)),
        Command::Annihilator { table, of } => cmd_annihilator(io, &table, &of),
        Command::Analyze { table } => cmd_analyze(io, &table),
        Command::Lint { table } => cmd_lint(io, &table),
        Command::Gen { target } => cmd_gen(io, target),
        Command::Ca { cartan } => cmd_gen(io, GenTarget::Ca { cartan }),
        Command::Hecke { n } => cmd_gen(io, GenTarget::Hecke { n }),
        Command::Klpoly { n, x, w } => cmd_klpoly(io, n, &x, &w),
        Command::Rs { perm } => cmd_rs(io, &perm),
        Command::Bimod { target } => cmd_bimod(io, target),
    }
}

fn cmd_validate(io: &mut Io<'_>, path: &str) -> Outcome {
    let (cat, text) = io.table(path)?;
    let report = validate(&cat);
    let violations: Vec<_> = report
        .violations
        .iter()
        .map(|v| json!({"law": v.law(), "witness": v.describe(&cat)}))
        .collect();
    if io.config.json {
        io.emit_json(&json!({
            "provenance": io.provenance(Some(&text)),
            "valid": report.is_valid(),
            "violations": violations,
        }))?;
    } else {
        let mut s = format!("valid: {}\n", report.is_valid());
        for v in &report.violations {
            s.push_str(&format!("violation {}: {}\n", v.law(), v.describe(&cat)));
        }
        io.emit_text(&s)?;
    }
    Ok(if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    })
}

fn require_valid(cat: &MultiCat) -> Result<(), String> {
    let report = validate(cat);
    match report.laws().first() {
        None => Ok(()),
        Some(law) => Err(format!("table violates {law}; run validate for details")),
    }
}

fn cmd_cells(io: &mut Io<'_>, path: &str, kind: CellKind) -> Outcome {
    let (cat, text) = io.table(path)?;
    require_valid(&cat)?;
    let s = CellStructure::new(&cat);
    let section = partition_section(&cat, s.partition(kind));
    if io.config.json {
        io.emit_json(&json!({"provenance": io.provenance(Some(&text)), "partition": section}))?;
    } else {
        io.emit_text(&render_partition(&section))?;
    }
    Ok(EXIT_OK)
}

fn cmd_order(
    io: &mut Io<'_>,
    path: &str,
    kind: CellKind,
    pair: Option<(String, String)>,
) -> Outcome {
    let (cat, text) = io.table(path)?;
    require_valid(&cat)?;
    let s = CellStructure::new(&cat);
    let find = |l: &str| {
        cat.find_morph(l)
            .ok_or_else(|| format!("unknown morph {l:?}"))
    };
    match pair {
        Some((f, g)) => {
            let holds = s.leq(kind, find(&f)?, find(&g)?);
            if io.config.json {
                io.emit_json(&json!({
                    "provenance": io.provenance(Some(&text)),
                    "kind": kind.name(), "f": f, "g": g, "leq": holds,
                }))?;
            } else {
                io.emit_text(&format!("{f} <= {g} ({kind}): {holds}\n"))?;
            }
        }
        None => {
            let section = partition_section(&cat, s.partition(kind));
            if io.config.json {
                io.emit_json(
                    &json!({"provenance": io.provenance(Some(&text)), "partition": section}),
                )?;
            } else {
                let mut out = String::new();
                for [a, b] in &section.hasse {
                    let (la, lb) = (&section.classes[*a], &section.classes[*b]);
                    out.push_str(&format!("{{{}}} < {{{}}}\n", la.join(", "), lb.join(", ")));
                }
                io.emit_text(&out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_annihilator(io: &mut Io<'_>, path: &str, of: &str) -> Outcome {
    let (cat, text) = io.table(path)?;
    require_valid(&cat)?;
    let g = cat
        .find_morph(of)
        .ok_or_else(|| format!("unknown morph {of:?}"))?;
    let s = CellStructure::new(&cat);
    let ann = s.annihilator_of_simple(g);
    let coideal = s.is_right_coideal(&ann, cat.tgt(g));
    let labels: Vec<&str> = ann.iter().map(|&m| cat.label(m)).collect();
    if io.config.json {
        io.emit_json(&json!({
            "provenance": io.provenance(Some(&text)),
            "of": of, "annihilator": labels, "right_coideal": coideal,
        }))?;
    } else {
        io.emit_text(&format!(
            "annihilator of {of}: {{{}}}\nright coideal: {coideal}\n",
            labels.join(", ")
        ))?;
    }
    Ok(if coideal { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn cmd_analyze(io: &mut Io<'_>, path: &str) -> Outcome {
    let (cat, text) = io.table(path)?;
    let doc = report_analyze(&cat, io.provenance(Some(&text)));
    if io.config.json {
        io.emit_json(&doc)?;
    } else {
        io.emit_text(&render_text(&doc))?;
    }
    Ok(match &doc.lint {
        None => EXIT_INPUT,
        Some(l) if l.fiat_certified_impossible => EXIT_VIOLATIONS,
        Some(_) => EXIT_OK,
    })
}

fn cmd_lint(io: &mut Io<'_>, path: &str) -> Outcome {
    let (cat, text) = io.table(path)?;
    let report = fiat_lint(&cat);
    let section = LintSection::from(&report);
    if io.config.json {
        io.emit_json(&json!({"provenance": io.provenance(Some(&text)), "lint": section}))?;
    } else {
        io.emit_text(&render_lint(&section))?;
    }
    Ok(if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    })
}

fn cmd_gen(io: &mut Io<'_>, target: GenTarget) -> Outcome {
    let cat = match target {
        GenTarget::S2 => make_s2(),
        GenTarget::Sl2 => make_sl2_singular(),
        GenTarget::Ca { cartan } => {
            let text = io.read(&cartan)?;
            let data: CartanData =
                serde_json::from_str(&text).map_err(|e| format!("{cartan}: {e}"))?;
            make_ca(&data).map_err(|e| format!("{cartan}: {e}"))?
        }
        GenTarget::Hecke { n } => {
            make_hecke_with_limit(n, io.config.max_n).map_err(|e| e.to_string())?
        }
    };
    io.emit_text(&serialize_multicat(&cat))?;
    Ok(EXIT_OK)
}

fn parse_word(n: usize, word: &str) -> Result<Permutation, String> {
    let word = word.trim();
    let letters: Vec<usize> = if word.is_empty() || word == "e" {
        vec![]
    } else if word.chars().all(|c| c.is_ascii_digit()) {
        word.chars().map(|c| c as usize - '0' as usize).collect()
    } else {
        word.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format!("bad letter {t:?} in word {word:?}"))
            })
            .collect::<Result<_, _>>()?
    };
    let w = Permutation::from_word(n, &letters).map_err(|e| e.to_string())?;
    if w.length() != letters.len() {
        return Err(format!("word {word:?} is not reduced"));
    }
    Ok(w)
}

fn cmd_klpoly(io: &mut Io<'_>, n: usize, x: &str, w: &str) -> Outcome {
    if n == 0 || n > io.config.max_n {
        return Err(format!(
            "n = {n} is outside the supported range 1..={}",
            io.config.max_n
        ));
    }
    let (px, pw) = (parse_word(n, x)?, parse_word(n, w)?);
    let table = kl_table(n);
    let (ix, iw) = (
        table.index_of(&px).expect("element of S_n"),
        table.index_of(&pw).expect("element of S_n"),
    );
    let coeffs = table.p_coeffs(ix, iw).to_vec();
    let poly = format_q_poly(&coeffs);
    if io.config.json {
        io.emit_json(&json!({
            "n": n, "x": px.one_line(), "w": pw.one_line(), "coefficients": coeffs,
            "polynomial": poly, "mu": table.mu(ix, iw),
        }))?;
    } else {
        io.emit_text(&format!("P[{px}, {pw}] = {poly}\n"))?;
    }
    Ok(EXIT_OK)
}

fn cmd_rs(io: &mut Io<'_>, perm: &str) -> Outcome {
    let w = Permutation::parse(perm).map_err(|e| e.to_string())?;
    let pair = robinson_schensted(&w);
    if io.config.json {
        io.emit_json(&json!({"perm": w.one_line(), "shape": pair.p.shape(), "p": pair.p.rows, "q": pair.q.rows}))?;
    } else {
        let shape: Vec<String> = pair.p.shape().iter().map(usize::to_string).collect();
        io.emit_text(&format!(
            "shape: {}\nP:\n{}\nQ:\n{}\n",
            shape.join(" "),
            pair.p,
            pair.q
        ))?;
    }
    Ok(EXIT_OK)
}

fn cmd_bimod(io: &mut Io<'_>, target: BimodTarget) -> Outcome {
    match target {
        BimodTarget::VerifyExm2 => {
            let report = verify_exm2();
            if io.config.json {
                io.emit_json(&json!({"relations": report.relations, "hom_dims": report.hom_dims, "pass": report.all_pass()}))?;
            } else {
                let mut s = String::new();
                for r in &report.relations {
                    s.push_str(&format!(
                        "relation {}: {}\n",
                        r.name,
                        if r.holds { "pass" } else { "fail" }
                    ));
                }
                let d = report.hom_dims;
                s.push_str(&format!(
                    "hom dims End(F) Hom(F,1) Hom(1,F) End(1): {} {} {} {}\n",
                    d[0], d[1], d[2], d[3]
                ));
                io.emit_text(&s)?;
            }
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            })
        }
        BimodTarget::RealizeCa { algebras } => {
            let text = io.read(&algebras)?;
            let algs = load_algebras(&text).map_err(|e| format!("{algebras}: {e}"))?;
            let cat = realize_ca(&algs, io.config.max_dim).map_err(|e| e.to_string())?;
            io.emit_text(&serialize_multicat(&cat))?;
            Ok(EXIT_OK)
        }
        BimodTarget::Hom { m, n } => {
            let (tm, tn) = (io.read(&m)?, io.read(&n)?);
            let bm = load_bimodule(&tm).map_err(|e| format!("{m}: {e}"))?;
            let bn = load_bimodule(&tn).map_err(|e| format!("{n}: {e}"))?;
            let dim = hom_space(&bm, &bn).map_err(|e| e.to_string())?.len();
            if io.config.json {
                io.emit_json(&json!({"dim": dim}))?;
            } else {
                io.emit_text(&format!("dim Hom = {dim}\n"))?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("fiatcells")
            .chain(args.iter().copied())
            .map(String::from)
            .collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_then_lint_pipes() {
        let (code, table, _) = call(&["gen", "sl2"], "");
        assert_eq!(code, 0);
        let (code, text, _) = call(&["lint", "-"], &table);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("fiat-certified-impossible: false"));
    }

    #[test]
    fn s2_right_cells() {
        let (_, table, _) = call(&["gen", "s2"], "");
        let (code, text, _) = call(&["cells", "--kind", "right", "-"], &table);
        assert_eq!(code, 0);
        assert_eq!(
            text,
            "right cell 0: {1_i}\nright cell 1: {F}\nright order: 0 < 1\n"
        );
    }

    #[test]
    fn rs_simple_reflection() {
        let (code, text, _) = call(&["rs", "--perm", "2 1"], "");
        assert_eq!(code, 0);
        assert_eq!(text, "shape: 1 1\nP:\n1\n2\nQ:\n1\n2\n");
    }

    #[test]
    fn klpoly_words() {
        let (code, text, _) = call(&["klpoly", "--n", "4", "--x", "2", "--w", "2132"], "");
        assert_eq!(code, 0);
        assert!(text.ends_with("= 1 + q\n"), "{text}");
        let (code, _, err) = call(&["klpoly", "--n", "3", "--x", "11", "--w", "1"], "");
        assert_eq!(code, 1);
        assert!(err.contains("not reduced"));
    }

    #[test]
    fn usage_and_input_errors() {
        assert_eq!(call(&["frobnicate"], "").0, 1);
        assert_eq!(call(&["validate", "/nonexistent/table.json"], "").0, 1);
        assert_eq!(call(&["validate", "-"], "{").0, 1);
        assert_eq!(call(&["hecke", "--n", "9"], "").0, 1);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn analyze_invalid_table_stops_at_validation() {
        let cat = make_s2()
            .with_star(crate::model::MorphId(1), crate::model::MorphId(0))
            .unwrap();
        let (code, text, _) = call(&["analyze", "--json", "-"], &serialize_multicat(&cat));
        assert_eq!(code, 1);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["validation"]["valid"], false);
        assert!(doc.get("cells").is_none());
    }

    #[test]
    fn exm2_passes() {
        let (code, text, _) = call(&["bimod", "verify-exm2"], "");
        assert_eq!(code, 0);
        assert!(text.contains("4 2 2 2"));
    }
}
