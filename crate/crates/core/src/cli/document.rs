//! Input documents.
//!
//! ```json
//! {
//!   "kind": "group_sample",
//!   "dimension": 2,
//!   "matrices": [[["0", "-inf"], ["-inf", "0"]], [["-inf", "1"], ["-1", "-inf"]]],
//!   "options": { "assume_group": false }
//! }
//! ```
//!
//! `matrix`, `matrix_list` and `group_sample` documents carry `matrices`
//! (`matrix_list` may name them `generators` instead); `wreath_list`
//! documents carry `elements`. `dimension` is `n` for `n x n` payloads or
//! `[rows, cols]` for a rectangular `matrix`/`matrix_list`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::TropMatrix;
use crate::wreath::WreathElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Matrix,
    MatrixList,
    GroupSample,
    WreathList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Dimension {
    Square(usize),
    Rect([usize; 2]),
}

impl Dimension {
    pub fn shape(&self) -> (usize, usize) {
        match *self {
            Dimension::Square(n) => (n, n),
            Dimension::Rect([r, c]) => (r, c),
        }
    }

    pub fn of(m: &TropMatrix) -> Dimension {
        if m.is_square() {
            Dimension::Square(m.rows())
        } else {
            Dimension::Rect([m.rows(), m.cols()])
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub assume_group: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: DocumentKind,
    pub dimension: Dimension,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<TropMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<TropMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<WreathElement>>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("invalid document: {0}")]
    Invalid(String),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, DocumentError> {
    Err(DocumentError::Invalid(msg.into()))
}

impl InputDocument {
    pub fn matrix_list(kind: DocumentKind, matrices: Vec<TropMatrix>) -> Self {
        let dimension = matrices
            .first()
            .map(Dimension::of)
            .unwrap_or(Dimension::Square(0));
        InputDocument {
            kind,
            dimension,
            matrices: Some(matrices),
            generators: None,
            elements: None,
            options: Options::default(),
        }
    }

    pub fn wreath_list(elements: Vec<WreathElement>) -> Self {
        let n = elements.first().map(WreathElement::n).unwrap_or(0);
        InputDocument {
            kind: DocumentKind::WreathList,
            dimension: Dimension::Square(n),
            matrices: None,
            generators: None,
            elements: Some(elements),
            options: Options::default(),
        }
    }

    /// Parses and validates a document.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        super::pretty::to_string(&serde_json::to_value(self).expect("documents always serialize"))
    }

    /// The matrix payload (`matrices` or `generators`).
    pub fn matrix_payload(&self) -> Option<&[TropMatrix]> {
        self.matrices
            .as_deref()
            .or(self.generators.as_deref())
    }

    pub fn payload_len(&self) -> usize {
        self.matrix_payload()
            .map(<[TropMatrix]>::len)
            .or(self.elements.as_ref().map(Vec::len))
            .unwrap_or(0)
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        let (rows, cols) = self.dimension.shape();
        if rows == 0 || cols == 0 {
            return invalid("dimension must be positive");
        }
        match self.kind {
            DocumentKind::WreathList => {
                if self.matrices.is_some() || self.generators.is_some() {
                    return invalid("wreath_list documents carry `elements` only");
                }
                let Dimension::Square(n) = self.dimension else {
                    return invalid("wreath_list dimension must be a single integer");
                };
                let elements = match self.elements.as_deref() {
                    Some(e) if !e.is_empty() => e,
                    _ => return invalid("wreath_list needs a nonempty `elements` array"),
                };
                if let Some((i, w)) = elements.iter().enumerate().find(|(_, w)| w.n() != n) {
                    return invalid(format!(
                        "element {} has degree {}, document dimension is {n}",
                        i + 1,
                        w.n()
                    ));
                }
            }
            kind => {
                if self.elements.is_some() {
                    return invalid("`elements` is only valid in wreath_list documents");
                }
                let matrices = match (&self.matrices, &self.generators) {
                    (Some(m), None) => m,
                    (None, Some(g)) if kind == DocumentKind::MatrixList => g,
                    (None, Some(_)) => {
                        return invalid("`generators` is only valid in matrix_list documents")
                    }
                    (Some(_), Some(_)) => {
                        return invalid("give either `matrices` or `generators`, not both")
                    }
                    (None, None) => return invalid("missing `matrices`"),
                };
                if matrices.is_empty() {
                    return invalid("matrix payload is empty");
                }
                if kind == DocumentKind::Matrix && matrices.len() != 1 {
                    return invalid("a matrix document holds exactly one matrix");
                }
                if kind == DocumentKind::GroupSample && rows != cols {
                    return invalid("group_sample matrices must be square");
                }
                if let Some((i, m)) = matrices
                    .iter()
                    .enumerate()
                    .find(|(_, m)| (m.rows(), m.cols()) != (rows, cols))
                {
                    return invalid(format!(
                        "matrix {} is {}x{}, document dimension is {rows}x{cols}",
                        i + 1,
                        m.rows(),
                        m.cols()
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_group_sample() {
        let doc = InputDocument::parse(
            r#"{"kind":"group_sample","dimension":2,
                "matrices":[[["0","-inf"],["-inf",0]],[["-inf","1"],["-1","-inf"]]],
                "options":{"assume_group":true}}"#,
        )
        .unwrap();
        assert_eq!(doc.kind, DocumentKind::GroupSample);
        assert_eq!(doc.payload_len(), 2);
        assert!(doc.options.assume_group);
        let again = InputDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = InputDocument::parse(
            r#"{"kind":"matrix","dimension":2,"matrices":[[["0","1"],["2"]]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, DocumentError::Json(m) if m.contains("ragged")));
    }

    #[test]
    fn rejects_shape_and_payload_errors() {
        for text in [
            r#"{"kind":"matrix","dimension":3,"matrices":[[["0","1"],["2","3"]]]}"#,
            r#"{"kind":"matrix","dimension":2,"matrices":[]}"#,
            r#"{"kind":"group_sample","dimension":2,"generators":[[["0","1"],["2","3"]]]}"#,
            r#"{"kind":"wreath_list","dimension":2,"elements":[{"sigma":[1,2,3],"d":["0","0","0"]}]}"#,
            r#"{"kind":"wreath_list","dimension":[2,2],"elements":[]}"#,
            r#"{"kind":"matrix_list","dimension":2}"#,
        ] {
            assert!(
                matches!(InputDocument::parse(text), Err(DocumentError::Invalid(_))),
                "{text}"
            );
        }
        assert!(matches!(
            InputDocument::parse(r#"{"kind":"matrix","dimension":1,"matrices":[[[0.5]]]}"#),
            Err(DocumentError::Json(_))
        ));
        assert!(matches!(
            InputDocument::parse(r#"{"kind":"tensor","dimension":1}"#),
            Err(DocumentError::Json(_))
        ));
    }

    #[test]
    fn rectangular_matrix_documents() {
        let doc = InputDocument::parse(
            r#"{"kind":"matrix","dimension":[1,3],"matrices":[[["0","1","-inf"]]]}"#,
        )
        .unwrap();
        assert_eq!(doc.dimension.shape(), (1, 3));
        assert_eq!(
            serde_json::to_value(doc.dimension).unwrap(),
            serde_json::json!([1, 3])
        );
    }
}
