//! JSON table-interchange format.
//!
//! ```json
//! {
//!   "objects": ["i"],
//!   "morphisms": [{"label": "1_i", "src": "i", "tgt": "i", "identity": true},
//!                 {"label": "F", "src": "i", "tgt": "i"}],
//!   "star": {"1_i": "1_i", "F": "F"},
//!   "compose": [{"g": "F", "f": "F", "out": [{"m": "F", "mult": 2}]}]
//! }
//! ```
//!
//! Unit-law entries may be omitted. A composable non-identity pair without an
//! entry is a zero composite. Morphisms missing from `star` are self-dual.

use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{ModelError, MorphId, Morphism, MultiCat, Multiset, ObjectId};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("no objects")]
    NoObjects,
    #[error("{field}: unknown object {label:?}")]
    UnknownObject { field: String, label: String },
    #[error("{field}: dangling reference to undeclared morphism {label:?}")]
    DanglingMorph { field: String, label: String },
    #[error("{field}: duplicate label {label:?}")]
    DuplicateLabel { field: String, label: String },
    #[error("{field}: duplicate identity for object {object:?}")]
    DuplicateIdentity { field: String, object: String },
    #[error("{field}: multiplicity must be positive")]
    ZeroMultiplicity { field: String },
    #[error("{field}: entry contradicts the unit law")]
    ConflictingUnitEntry { field: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableDocument {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    #[serde(default)]
    pub star: IndexMap<String, String>,
    #[serde(default)]
    pub compose: Vec<ComposeEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismEntry {
    pub label: String,
    pub src: String,
    pub tgt: String,
    #[serde(default, skip_serializing_if = "is_false")]
    pub identity: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComposeEntry {
    pub g: String,
    pub f: String,
    pub out: Vec<OutEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OutEntry {
    pub m: String,
    pub mult: u64,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// Parses a document and resolves every label. Axioms are not checked.
pub fn load_multicat(text: &str) -> Result<MultiCat, LoadError> {
    let doc: TableDocument = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_document(&doc)
}

pub fn from_document(doc: &TableDocument) -> Result<MultiCat, LoadError> {
    if doc.objects.is_empty() {
        return Err(LoadError::NoObjects);
    }
    let mut object_index = HashMap::new();
    for (i, o) in doc.objects.iter().enumerate() {
        if object_index.insert(o.as_str(), ObjectId(i)).is_some() {
            return Err(LoadError::DuplicateLabel {
                field: format!("objects[{i}]"),
                label: o.clone(),
            });
        }
    }
    let object = |field: String, label: &str| {
        object_index
            .get(label)
            .copied()
            .ok_or_else(|| LoadError::UnknownObject {
                field,
                label: label.to_string(),
            })
    };

    let mut morphs = Vec::with_capacity(doc.morphisms.len());
    let mut morph_index = HashMap::new();
    let mut has_identity = vec![false; doc.objects.len()];
    for (i, entry) in doc.morphisms.iter().enumerate() {
        let src = object(format!("morphisms[{i}].src"), &entry.src)?;
        let tgt = object(format!("morphisms[{i}].tgt"), &entry.tgt)?;
        if morph_index
            .insert(entry.label.as_str(), MorphId(i))
            .is_some()
        {
            return Err(LoadError::DuplicateLabel {
                field: format!("morphisms[{i}].label"),
                label: entry.label.clone(),
            });
        }
        if entry.identity {
            if has_identity[src.0] {
                return Err(LoadError::DuplicateIdentity {
                    field: format!("morphisms[{i}]"),
                    object: entry.src.clone(),
                });
            }
            has_identity[src.0] = true;
        }
        morphs.push(Morphism {
            label: entry.label.clone(),
            src,
            tgt,
            identity: entry.identity,
        });
    }
    let morph = |field: String, label: &str| {
        morph_index
            .get(label)
            .copied()
            .ok_or_else(|| LoadError::DanglingMorph {
                field,
                label: label.to_string(),
            })
    };

    let mut star: Vec<MorphId> = (0..morphs.len()).map(MorphId).collect();
    for (k, v) in &doc.star {
        let from = morph(format!("star.{k}"), k)?;
        star[from.0] = morph(format!("star.{k}"), v)?;
    }

    let mut entries = Vec::with_capacity(doc.compose.len());
    for (i, entry) in doc.compose.iter().enumerate() {
        let g = morph(format!("compose[{i}].g"), &entry.g)?;
        let f = morph(format!("compose[{i}].f"), &entry.f)?;
        let mut out = Multiset::new();
        for (j, o) in entry.out.iter().enumerate() {
            let m = morph(format!("compose[{i}].out[{j}].m"), &o.m)?;
            if o.mult == 0 {
                return Err(LoadError::ZeroMultiplicity {
                    field: format!("compose[{i}].out[{j}].mult"),
                });
            }
            out.add(m, o.mult);
        }
        let unit = if morphs[g.0].identity {
            Some(f)
        } else if morphs[f.0].identity {
            Some(g)
        } else {
            None
        };
        match unit {
            Some(expected) => {
                if out != Multiset::singleton(expected, 1) {
                    return Err(LoadError::ConflictingUnitEntry {
                        field: format!("compose[{i}]"),
                    });
                }
            }
            None => entries.push((g, f, out)),
        }
    }

    Ok(MultiCat::new(doc.objects.clone(), morphs, star, entries)?)
}

pub fn to_document(cat: &MultiCat) -> TableDocument {
    let objects = cat.object_labels().to_vec();
    let morphisms = cat
        .morphs()
        .iter()
        .map(|m| MorphismEntry {
            label: m.label.clone(),
            src: cat.object_label(m.src).to_string(),
            tgt: cat.object_label(m.tgt).to_string(),
            identity: m.identity,
        })
        .collect();
    let star = cat
        .morph_ids()
        .map(|m| (cat.label(m).to_string(), cat.label(cat.star(m)).to_string()))
        .collect();
    let compose = cat
        .nonunit_entries()
        .map(|(g, f, out)| ComposeEntry {
            g: cat.label(g).to_string(),
            f: cat.label(f).to_string(),
            out: out
                .iter()
                .map(|(m, mult)| OutEntry {
                    m: cat.label(m).to_string(),
                    mult,
                })
                .collect(),
        })
        .collect();
    TableDocument {
        objects,
        morphisms,
        star,
        compose,
    }
}

/// Canonical serialization: declaration-order keys, two-space indent, UTF-8,
/// LF line endings, trailing newline.
pub fn serialize_multicat(cat: &MultiCat) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(cat)).expect("document serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_s2, make_sl2_singular};

    const S2: &str = r#"{
  "objects": ["i"],
  "morphisms": [
    {"label": "1", "src": "i", "tgt": "i", "identity": true},
    {"label": "F", "src": "i", "tgt": "i"}
  ],
  "star": {"F": "F"},
  "compose": [{"g": "F", "f": "F", "out": [{"m": "F", "mult": 2}]}]
}"#;

    #[test]
    fn loads_s2_document() {
        let cat = load_multicat(S2).unwrap();
        assert_eq!(cat.num_morphs(), 2);
        let f = cat.find_morph("F").unwrap();
        assert_eq!(cat.compose(f, f).unwrap(), &Multiset::singleton(f, 2));
        assert!(cat.is_self_dual(f));
    }

    #[test]
    fn empty_objects_rejected() {
        let err = load_multicat(r#"{"objects": [], "morphisms": []}"#).unwrap_err();
        assert_eq!(err.to_string(), "no objects");
    }

    #[test]
    fn dangling_reference_rejected() {
        let text = S2.replace(r#"{"m": "F", "mult": 2}"#, r#"{"m": "G", "mult": 2}"#);
        match load_multicat(&text).unwrap_err() {
            LoadError::DanglingMorph { field, label } => {
                assert_eq!(field, "compose[0].out[0].m");
                assert_eq!(label, "G");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn duplicate_identity_rejected() {
        let text = S2.replace(
            r#"{"label": "F", "src": "i", "tgt": "i"}"#,
            r#"{"label": "F", "src": "i", "tgt": "i", "identity": true}"#,
        );
        assert!(matches!(
            load_multicat(&text),
            Err(LoadError::DuplicateIdentity { .. })
        ));
    }

    #[test]
    fn parse_error_has_locus() {
        match load_multicat("{\n  \"objects\": [\"i\",\n}").unwrap_err() {
            LoadError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn conflicting_unit_entry_rejected() {
        let text = S2.replace(r#""g": "F", "f": "F""#, r#""g": "1", "f": "F""#);
        assert!(matches!(
            load_multicat(&text),
            Err(LoadError::ConflictingUnitEntry { .. })
        ));
    }

    #[test]
    fn serializer_round_trips_builtins() {
        for cat in [make_s2(), make_sl2_singular()] {
            let text = serialize_multicat(&cat);
            let back = load_multicat(&text).unwrap();
            assert_eq!(back, cat);
            assert_eq!(serialize_multicat(&back), text);
            assert!(!text.contains('\r'));
        }
    }
}
