//! Report documents written to standard output.
//!
//! All element and row indices in reports are 1-based, matching the
//! position of the item in the input document.

use serde::Serialize;
use serde_json::{json, Value};

use super::document::{Dimension, DocumentError, DocumentKind, InputDocument};
use crate::group::{GroupError, GroupMode, PeriodicReport};
use crate::matrix::{MatrixError, TropMatrix};
use crate::rep::{GroupAnalysis, RepError, Representation, TorsionCheck};
use crate::scalar::Scalar;
use crate::wreath::{WreathElement, WreathError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputEcho {
    pub kind: DocumentKind,
    pub dimension: Dimension,
    pub count: usize,
}

impl InputEcho {
    pub fn of(doc: &InputDocument) -> Self {
        InputEcho {
            kind: doc.kind,
            dimension: doc.dimension,
            count: doc.payload_len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorReport {
    pub name: &'static str,
    pub kind: &'static str,
    pub message: String,
    pub witnesses: Value,
    #[serde(skip)]
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        super::pretty::to_string(&serde_json::to_value(self).expect("reports always serialize"))
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(EXIT_OK, |e| e.exit_code)
    }
}

#[derive(Serialize)]
pub struct RankEntry {
    pub matrix: usize,
    pub full_row_rank: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dependent_row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<Scalar>>,
}

#[derive(Serialize)]
pub struct GroupSummary {
    pub mode: GroupMode,
    pub order: usize,
    pub dimension: usize,
    pub neutral_element: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periodic_bound: Option<PeriodicReport>,
}

#[derive(Serialize)]
pub struct StepReport {
    pub source_dimension: usize,
    pub deficient_element: usize,
    pub removed_row: usize,
    pub lambdas: Vec<Scalar>,
    pub p: TropMatrix,
}

#[derive(Serialize)]
pub struct RepresentationReport {
    pub mode: GroupMode,
    pub source_dimension: usize,
    pub target_dimension: usize,
    pub neutral_element: usize,
    pub base_neutral: TropMatrix,
    pub trace: Vec<StepReport>,
    pub images: Vec<WreathElement>,
    pub checks: RepresentationChecks,
}

#[derive(Serialize)]
pub struct RepresentationChecks {
    pub injective: bool,
    pub homomorphism_products_checked: usize,
    pub scope: &'static str,
}

impl RepresentationReport {
    pub fn of(r: &Representation) -> Self {
        RepresentationReport {
            mode: r.source.mode(),
            source_dimension: r.source.n(),
            target_dimension: r.target_dim,
            neutral_element: r.source.neutral_index() + 1,
            base_neutral: r.base_neutral.clone(),
            trace: r
                .trace
                .iter()
                .map(|s| StepReport {
                    source_dimension: s.source_dim,
                    deficient_element: s.deficient_element + 1,
                    removed_row: s.removed_row + 1,
                    lambdas: s.witness.lambdas.clone(),
                    p: s.p.clone(),
                })
                .collect(),
            images: r.images.iter().map(WreathElement::from_monomial).collect(),
            checks: RepresentationChecks {
                injective: true,
                homomorphism_products_checked: r.pairs_checked,
                scope: match r.source.mode() {
                    GroupMode::Verified => "all pairs of a verified group",
                    GroupMode::Assumed => "in-sample products only",
                },
            },
        }
    }
}

#[derive(Serialize)]
pub struct CosetReport {
    pub sigma: crate::perm::Permutation,
    pub elements: Vec<usize>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub diagonal_elements: Vec<usize>,
    pub cosets: Vec<CosetReport>,
    pub index: usize,
    pub n_factorial_bound: u128,
    pub bound_ok: bool,
    pub diagonal_abelian_ok: bool,
    pub diagonal_torsion_free_ok: bool,
    pub torsion_check: String,
}

impl AnalysisReport {
    pub fn of(a: &GroupAnalysis) -> Self {
        AnalysisReport {
            diagonal_elements: a.diagonal_indices.iter().map(|i| i + 1).collect(),
            cosets: a
                .cosets
                .iter()
                .map(|c| CosetReport {
                    sigma: c.sigma.clone(),
                    elements: c.members.iter().map(|i| i + 1).collect(),
                })
                .collect(),
            index: a.index,
            n_factorial_bound: a.n_factorial_bound,
            bound_ok: a.bound_ok,
            diagonal_abelian_ok: a.diagonal_abelian_ok,
            diagonal_torsion_free_ok: a.diagonal_torsion_free_ok,
            torsion_check: match a.torsion_check {
                TorsionCheck::Exact => "exact: finite group, diagonal part must be trivial".into(),
                TorsionCheck::UpToExponent(k) => format!("checked up to exponent {k}"),
            },
        }
    }
}

fn err(name: &'static str, kind: &'static str, message: String, witnesses: Value, exit_code: i32) -> ErrorReport {
    ErrorReport {
        name,
        kind,
        message,
        witnesses,
        exit_code,
    }
}

impl From<&DocumentError> for ErrorReport {
    fn from(e: &DocumentError) -> Self {
        let kind = match e {
            DocumentError::Json(_) => "Json",
            DocumentError::Invalid(_) => "Validation",
        };
        err("ParseError", kind, e.to_string(), json!({}), EXIT_INPUT)
    }
}

impl From<&MatrixError> for ErrorReport {
    fn from(e: &MatrixError) -> Self {
        err("DimensionMismatch", "DimensionMismatch", e.to_string(), json!({}), EXIT_INPUT)
    }
}

impl From<&GroupError> for ErrorReport {
    fn from(e: &GroupError) -> Self {
        let (message, witnesses, exit) = match e {
            GroupError::NotClosed {
                left,
                right,
                product,
            } => (
                format!("element {} ⊗ element {} is not in the list", left + 1, right + 1),
                json!({"left": left + 1, "right": right + 1, "product": product}),
                EXIT_MATH,
            ),
            GroupError::NoInverse { index } => (
                format!("element {} has no two-sided inverse in the list", index + 1),
                json!({"element": index + 1}),
                EXIT_MATH,
            ),
            GroupError::Duplicate { first, second } => (
                format!("elements {} and {} are equal", first + 1, second + 1),
                json!({"first": first + 1, "second": second + 1}),
                EXIT_INPUT,
            ),
            GroupError::WrongShape { index, .. } => (
                format!("element {}: {e}", index + 1),
                json!({"element": index + 1}),
                EXIT_INPUT,
            ),
            GroupError::CapExceeded { cap } => (e.to_string(), json!({"cap": cap}), EXIT_MATH),
            GroupError::NoNeutral => (e.to_string(), json!({}), EXIT_MATH),
            GroupError::Empty | GroupError::Matrix(_) => (e.to_string(), json!({}), EXIT_INPUT),
        };
        let name = match e {
            GroupError::CapExceeded { .. } => "CapExceeded",
            _ if exit == EXIT_INPUT => "ValidationError",
            _ => "GroupAxiomFailure",
        };
        err(name, e.kind(), message, witnesses, exit)
    }
}

impl From<&RepError> for ErrorReport {
    fn from(e: &RepError) -> Self {
        use crate::rep::{FactorError, ReduceError};
        match e {
            RepError::Reduce(r) => {
                let (message, witnesses) = match *r {
                    ReduceError::RowConsistencyFailed { element } => (
                        format!(
                            "element {} is not rebuilt from its remaining rows",
                            element + 1
                        ),
                        json!({"element": element + 1}),
                    ),
                    ReduceError::NotInjectiveOnSample { first, second } => (
                        format!("elements {} and {} have the same image", first + 1, second + 1),
                        json!({"first": first + 1, "second": second + 1}),
                    ),
                    ReduceError::NotHomomorphicOnSample { left, right } => (
                        format!(
                            "image of element {} ⊗ element {} is not the product of the images",
                            left + 1,
                            right + 1
                        ),
                        json!({"left": left + 1, "right": right + 1}),
                    ),
                    ReduceError::AllFullRank | ReduceError::DimensionTooSmall => {
                        (r.to_string(), json!({}))
                    }
                };
                err("ReduceError", r.kind(), message, witnesses, EXIT_MATH)
            }
            RepError::Factor { element, source } => {
                let mut witnesses = json!({"element": element + 1});
                let detail = match source {
                    FactorError::BaseNotFullRank { row } => {
                        witnesses["row"] = json!(row + 1);
                        format!("base neutral row {} depends on the others", row + 1)
                    }
                    FactorError::NoRowMatch { row } => {
                        witnesses["row"] = json!(row + 1);
                        format!("row {} is not a scaled row of the base neutral", row + 1)
                    }
                    FactorError::AmbiguousRowMatch { row, candidates } => {
                        witnesses["row"] = json!(row + 1);
                        let c: Vec<usize> = candidates.iter().map(|k| k + 1).collect();
                        witnesses["candidates"] = json!(c);
                        format!("row {} matches several base rows", row + 1)
                    }
                    FactorError::NotBijective { assignment } => {
                        let a: Vec<usize> = assignment.iter().map(|k| k + 1).collect();
                        witnesses["assignment"] = json!(a);
                        "rows do not match distinct base rows".to_string()
                    }
                    other => other.to_string(),
                };
                err(
                    "FactorError",
                    source.kind(),
                    format!("element {}: {detail}", element + 1),
                    witnesses,
                    EXIT_MATH,
                )
            }
        }
    }
}

impl From<&WreathError> for ErrorReport {
    fn from(e: &WreathError) -> Self {
        match e {
            WreathError::VerificationFailed { left, right } => err(
                "WreathError",
                "VerificationFailed",
                format!(
                    "dense product of elements {} and {} disagrees with the wreath product",
                    left + 1,
                    right + 1
                ),
                json!({"left": left + 1, "right": right + 1}),
                EXIT_MATH,
            ),
            _ => err("ValidationError", "DimensionMismatch", e.to_string(), json!({}), EXIT_INPUT),
        }
    }
}
