//! JSON formats for algebras and bimodules.
//!
//! Coefficients are integers or strings such as `"-1/2"`. Vectors are lists
//! of `[label, coefficient]` terms; products not listed are zero.

use std::collections::HashMap;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::algebra::{Algebra, AlgebraError};
use super::linalg::{parse_q, Matrix, Q};
use super::module::{Bimodule, BimoduleError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn value(&self) -> Result<Q, FixtureError> {
        match self {
            Coeff::Int(n) => Ok(super::linalg::q(*n)),
            Coeff::Text(s) => parse_q(s).ok_or_else(|| FixtureError::BadCoefficient(s.clone())),
        }
    }
}

pub type Term = (String, Coeff);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub a: String,
    pub b: String,
    pub out: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub labels: Vec<String>,
    pub products: Vec<ProductEntry>,
    pub unit: Vec<Term>,
    pub idempotents: Vec<Vec<Term>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraList {
    pub algebras: Vec<AlgebraDocument>,
}

/// Bimodule with action matrices keyed by basis label of each algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleDocument {
    pub left: AlgebraDocument,
    pub right: AlgebraDocument,
    pub dim: usize,
    pub left_action: IndexMap<String, Vec<Vec<Coeff>>>,
    pub right_action: IndexMap<String, Vec<Vec<Coeff>>>,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, FixtureError> {
    serde_json::from_str(text).map_err(|e| FixtureError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn vector(index: &HashMap<&str, usize>, n: usize, terms: &[Term]) -> Result<Vec<Q>, FixtureError> {
    let mut v = vec![super::linalg::q(0); n];
    for (label, c) in terms {
        let k = *index
            .get(label.as_str())
            .ok_or_else(|| FixtureError::UnknownLabel(label.clone()))?;
        v[k] += c.value()?;
    }
    Ok(v)
}

pub fn algebra_from_document(doc: &AlgebraDocument) -> Result<Algebra, FixtureError> {
    let n = doc.labels.len();
    let index: HashMap<&str, usize> = doc
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut mult = vec![vec![vec![super::linalg::q(0); n]; n]; n];
    for p in &doc.products {
        let a = *index
            .get(p.a.as_str())
            .ok_or_else(|| FixtureError::UnknownLabel(p.a.clone()))?;
        let b = *index
            .get(p.b.as_str())
            .ok_or_else(|| FixtureError::UnknownLabel(p.b.clone()))?;
        mult[a][b] = vector(&index, n, &p.out)?;
    }
    let unit = vector(&index, n, &doc.unit)?;
    let idempotents = doc
        .idempotents
        .iter()
        .map(|e| vector(&index, n, e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Algebra::new(doc.labels.clone(), mult, unit, idempotents)?)
}

pub fn load_algebras(text: &str) -> Result<Vec<Algebra>, FixtureError> {
    let list: AlgebraList = parse_json(text)?;
    list.algebras.iter().map(algebra_from_document).collect()
}

pub fn load_bimodule(text: &str) -> Result<Bimodule, FixtureError> {
    let doc: BimoduleDocument = parse_json(text)?;
    let left = Arc::new(algebra_from_document(&doc.left)?);
    let right = Arc::new(algebra_from_document(&doc.right)?);
    let matrices = |alg: &Algebra,
                    given: &IndexMap<String, Vec<Vec<Coeff>>>|
     -> Result<Vec<Matrix>, FixtureError> {
        if let Some(extra) = given.keys().find(|k| !alg.labels().contains(k)) {
            return Err(FixtureError::UnknownLabel(extra.clone()));
        }
        alg.labels()
            .iter()
            .map(|l| {
                let rows = given
                    .get(l)
                    .ok_or_else(|| FixtureError::Shape(format!("no action for {l:?}")))?;
                if rows.len() != doc.dim || rows.iter().any(|r| r.len() != doc.dim) {
                    return Err(FixtureError::Shape(format!(
                        "action of {l:?} is not {0}x{0}",
                        doc.dim
                    )));
                }
                let mut m = Matrix::zeros(doc.dim, doc.dim);
                for (i, row) in rows.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        m[(i, j)] = c.value()?;
                    }
                }
                Ok(m)
            })
            .collect()
    };
    let la = matrices(&left, &doc.left_action)?;
    let ra = matrices(&right, &doc.right_action)?;
    Ok(Bimodule::new(left, right, doc.dim, la, ra)?)
}
