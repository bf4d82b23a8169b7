//! JSON algebra descriptions.
//!
//! ```json
//! {"field":{"prime":101},
//!  "quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},
//!  "relations":[]}
//! ```
//!
//! Vertices are 1-based, relations are lists of arrow names composed left to
//! right, and unknown keys are rejected.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{build_monomial_algebra, Algebra, AlgebraError, Arrow, Quiver, DEFAULT_MAX_PATH_LEN};
use crate::linalg::{Field, LinalgError};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Prime(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

fn field_error(field: String, message: impl Into<String>) -> DocumentError {
    DocumentError::Field {
        field,
        message: message.into(),
    }
}

impl AlgebraSpecDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Builds the algebra; the document's own prime wins over
    /// `default_prime`.
    pub fn build(&self, default_prime: u64) -> Result<Arc<Algebra>, DocumentError> {
        let field = Field::new(self.field.as_ref().map_or(default_prime, |f| f.prime))?;
        let n = self.quiver.vertices;
        if n == 0 {
            return Err(field_error("quiver.vertices".into(), "at least one vertex is required"));
        }
        let mut ids = HashMap::new();
        let mut arrows = Vec::with_capacity(self.quiver.arrows.len());
        for (k, a) in self.quiver.arrows.iter().enumerate() {
            for (key, v) in [("source", a.source), ("target", a.target)] {
                if v == 0 || v > n {
                    return Err(field_error(
                        format!("quiver.arrows[{k}].{key}"),
                        format!("vertex {v} is outside 1..={n}"),
                    ));
                }
            }
            if a.name.is_empty() {
                return Err(field_error(format!("quiver.arrows[{k}].name"), "empty arrow name"));
            }
            if ids.insert(a.name.clone(), k).is_some() {
                return Err(field_error(
                    format!("quiver.arrows[{k}].name"),
                    format!("duplicate arrow name {:?}", a.name),
                ));
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                source: a.source - 1,
                target: a.target - 1,
            });
        }
        if arrows.is_empty() {
            return Err(AlgebraError::NonSemisimpleRequired.into());
        }
        let quiver = Quiver::new(n, arrows)?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (r, word) in self.relations.iter().enumerate() {
            let mut ids_word = Vec::with_capacity(word.len());
            for (k, name) in word.iter().enumerate() {
                let id = ids.get(name).ok_or_else(|| {
                    field_error(format!("relations[{r}][{k}]"), format!("unknown arrow {name:?}"))
                })?;
                ids_word.push(*id);
            }
            relations.push(ids_word);
        }
        Ok(build_monomial_algebra(field, quiver, relations, DEFAULT_MAX_PATH_LEN)?)
    }
}

/// Parses and builds an algebra from JSON text.
pub fn parse_algebra_spec(text: &str, default_prime: u64) -> Result<Arc<Algebra>, DocumentError> {
    AlgebraSpecDocument::parse(text)?.build(default_prime)
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = r#"{"field":{"prime":101},"quiver":{"vertices":2,"arrows":[{"name":"a","source":1,"target":2}]},"relations":[]}"#;

    #[test]
    fn a2_document() {
        let a = parse_algebra_spec(A2, 7).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.field().prime(), 101);
    }

    #[test]
    fn default_prime_used_when_absent() {
        let a = parse_algebra_spec(r#"{"quiver":{"vertices":1,"arrows":[{"name":"x","source":1,"target":1}]},"relations":[["x","x"]]}"#, 7)
            .unwrap();
        assert_eq!(a.field().prime(), 7);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn unknown_key_rejected() {
        let doc = A2.replace(r#""relations""#, r#""extra":1,"relations""#);
        assert!(matches!(parse_algebra_spec(&doc, 101), Err(DocumentError::Syntax { .. })));
    }

    #[test]
    fn unknown_arrow_names_field() {
        let doc = A2.replace(r#""relations":[]"#, r#""relations":[["a","b"]]"#);
        match parse_algebra_spec(&doc, 101) {
            Err(DocumentError::Field { field, .. }) => assert_eq!(field, "relations[0][1]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn short_relation_rejected() {
        let doc = A2.replace(r#""relations":[]"#, r#""relations":[["a"]]"#);
        assert!(matches!(
            parse_algebra_spec(&doc, 101),
            Err(DocumentError::Algebra(AlgebraError::BadRelation { .. }))
        ));
    }

    #[test]
    fn free_loop_is_infinite_dimensional() {
        let doc = r#"{"quiver":{"vertices":1,"arrows":[{"name":"x","source":1,"target":1}]}}"#;
        assert!(matches!(
            parse_algebra_spec(doc, 101),
            Err(DocumentError::Algebra(AlgebraError::InfiniteDimensional(_)))
        ));
    }

    #[test]
    fn vertex_out_of_range() {
        let doc = A2.replace(r#""target":2"#, r#""target":3"#);
        match parse_algebra_spec(&doc, 101) {
            Err(DocumentError::Field { field, .. }) => assert_eq!(field, "quiver.arrows[0].target"),
            other => panic!("{other:?}"),
        }
    }
}
