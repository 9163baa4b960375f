#![allow(clippy::result_large_err)]

use serde::Serialize;
use serde_json::{json, Value};

use super::document::{DocumentKind, InputDocument};
use super::report::{
    AnalysisReport, ErrorReport, GroupSummary, InputEcho, RankEntry, ReportDocument,
    RepresentationReport, Status,
};
use super::Command;
use crate::group::{
    closure, periodic_bound_check, verify_group, MatrixGroup, DEFAULT_CLOSURE_CAP,
};
use crate::matrix::TropMatrix;
use crate::rank::{full_row_rank, RowRank};
use crate::rep::{analyze, monomialize, Representation};
use crate::wreath::realize;

/// Flags that override document options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub assume_group: bool,
    pub cap: Option<usize>,
}

/// A finished command: the report plus human-readable trace lines.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: ReportDocument,
    pub log: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.report.exit_code()
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values always serialize")
}

struct Ctx<'a> {
    doc: &'a InputDocument,
    opts: &'a RunOptions,
    log: Vec<String>,
}

fn input_error(msg: impl Into<String>) -> ErrorReport {
    ErrorReport {
        name: "ValidationError",
        kind: "WrongDocumentKind",
        message: msg.into(),
        witnesses: json!({}),
        exit_code: super::report::EXIT_INPUT,
    }
}

impl Ctx<'_> {
    fn matrices(&self, command: Command) -> Result<&[TropMatrix], ErrorReport> {
        self.doc.matrix_payload().ok_or_else(|| {
            input_error(format!(
                "`{}` expects a matrix document, got {:?}",
                command.name(),
                self.doc.kind
            ))
        })
    }

    fn group(&mut self, command: Command) -> Result<MatrixGroup, ErrorReport> {
        let elements = self.matrices(command)?.to_vec();
        let assume = self.opts.assume_group || self.doc.options.assume_group;
        let g = if assume {
            MatrixGroup::assumed(elements)
        } else {
            verify_group(elements)
        }
        .map_err(|e| ErrorReport::from(&e))?;
        self.log.push(format!(
            "group: {} elements of dimension {}, mode {}, neutral element {}",
            g.order(),
            g.n(),
            g.mode(),
            g.neutral_index() + 1
        ));
        Ok(g)
    }

    fn representation(&mut self, command: Command) -> Result<Representation, ErrorReport> {
        let g = self.group(command)?;
        let r = monomialize(&g).map_err(|e| ErrorReport::from(&e))?;
        for s in &r.trace {
            self.log.push(format!(
                "reduce {}x{} -> {}x{}: element {} row {} is a combination with λ = [{}]",
                s.source_dim,
                s.source_dim,
                s.source_dim - 1,
                s.source_dim - 1,
                s.deficient_element + 1,
                s.removed_row + 1,
                s.witness
                    .lambdas
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            self.log.push(format!("P =\n{}", s.p));
        }
        self.log
            .push(format!("factor against base neutral\n{}", r.base_neutral));
        for (i, img) in r.images.iter().enumerate() {
            self.log.push(format!("element {} -> {img}", i + 1));
        }
        Ok(r)
    }

    fn run(&mut self, command: Command) -> Result<Value, ErrorReport> {
        match command {
            Command::Mul => {
                let ms = self.matrices(command)?;
                if ms.len() < 2 {
                    return Err(input_error("`mul` needs at least two matrices"));
                }
                let mut acc = ms[0].clone();
                for m in &ms[1..] {
                    acc = acc.otimes(m).map_err(|e| ErrorReport::from(&e))?;
                }
                self.log.push(format!("product =\n{acc}"));
                let out = InputDocument::matrix_list(DocumentKind::Matrix, vec![acc]);
                Ok(json!({ "product": to_value(&out) }))
            }
            Command::Rank => {
                let entries: Vec<RankEntry> = self
                    .matrices(command)?
                    .iter()
                    .enumerate()
                    .map(|(i, m)| match full_row_rank(m) {
                        RowRank::Full => RankEntry {
                            matrix: i + 1,
                            full_row_rank: true,
                            dependent_row: None,
                            lambdas: None,
                        },
                        RowRank::Deficient(w) => RankEntry {
                            matrix: i + 1,
                            full_row_rank: false,
                            dependent_row: Some(w.target_row + 1),
                            lambdas: Some(w.lambdas),
                        },
                    })
                    .collect();
                for e in &entries {
                    self.log.push(match e.dependent_row {
                        None => format!("matrix {}: full row rank", e.matrix),
                        Some(r) => format!("matrix {}: row {r} is a combination of the others", e.matrix),
                    });
                }
                Ok(json!({ "ranks": to_value(&entries) }))
            }
            Command::Verify => {
                let g = verify_group(self.matrices(command)?.to_vec())
                    .map_err(|e| ErrorReport::from(&e))?;
                let summary = GroupSummary {
                    mode: g.mode(),
                    order: g.order(),
                    dimension: g.n(),
                    neutral_element: g.neutral_index() + 1,
                    periodic_bound: Some(periodic_bound_check(&g)),
                };
                self.log.push(format!("verified group of order {}", g.order()));
                Ok(json!({ "group": to_value(&summary) }))
            }
            Command::Closure => {
                let cap = self
                    .opts
                    .cap
                    .or(self.doc.options.closure_cap)
                    .unwrap_or(DEFAULT_CLOSURE_CAP);
                let gens = self.matrices(command)?;
                let elements = closure(gens, cap).map_err(|e| ErrorReport::from(&e))?;
                self.log.push(format!(
                    "closure of {} generators stabilized at {} elements (cap {cap})",
                    gens.len(),
                    elements.len()
                ));
                let group = match verify_group(elements.clone()) {
                    Ok(g) => json!({
                        "verified": true,
                        "summary": to_value(&GroupSummary {
                            mode: g.mode(),
                            order: g.order(),
                            dimension: g.n(),
                            neutral_element: g.neutral_index() + 1,
                            periodic_bound: Some(periodic_bound_check(&g)),
                        }),
                    }),
                    Err(e) => json!({
                        "verified": false,
                        "failure": to_value(&ErrorReport::from(&e)),
                    }),
                };
                Ok(json!({
                    "cap": cap,
                    "order": elements.len(),
                    "elements": to_value(&elements),
                    "group": group,
                }))
            }
            Command::Monomialize => {
                let r = self.representation(command)?;
                Ok(json!({ "representation": to_value(&RepresentationReport::of(&r)) }))
            }
            Command::Analyze => {
                let r = self.representation(command)?;
                let a = analyze(&r);
                self.log.push(format!(
                    "{} cosets of the diagonal subgroup, index {} <= {}! = {}",
                    a.index, a.index, a.target_dim, a.n_factorial_bound
                ));
                Ok(json!({
                    "representation": to_value(&RepresentationReport::of(&r)),
                    "analysis": to_value(&AnalysisReport::of(&a)),
                }))
            }
            Command::Realize => {
                let elements = self.doc.elements.as_deref().ok_or_else(|| {
                    input_error(format!(
                        "`realize` expects a wreath_list document, got {:?}",
                        self.doc.kind
                    ))
                })?;
                let matrices = realize(elements).map_err(|e| ErrorReport::from(&e))?;
                for (i, m) in matrices.iter().enumerate() {
                    self.log.push(format!("element {} ->\n{m}", i + 1));
                }
                let group = match verify_group(matrices.clone()) {
                    Ok(g) => json!({
                        "verified": true,
                        "order": g.order(),
                        "neutral_element": g.neutral_index() + 1,
                    }),
                    Err(e) => json!({
                        "verified": false,
                        "failure": to_value(&ErrorReport::from(&e)),
                    }),
                };
                Ok(json!({
                    "matrices": to_value(&matrices),
                    "products_checked": elements.len() * elements.len(),
                    "group": group,
                }))
            }
        }
    }
}

/// Runs `command` on a parsed document.
pub fn execute(command: Command, doc: &InputDocument, opts: &RunOptions) -> Outcome {
    let mut ctx = Ctx {
        doc,
        opts,
        log: Vec::new(),
    };
    let result = ctx.run(command);
    let (status, result, error) = match result {
        Ok(v) => (Status::Ok, Some(v), None),
        Err(e) => {
            ctx.log.push(format!("error: {} ({}): {}", e.name, e.kind, e.message));
            (Status::Error, None, Some(e))
        }
    };
    Outcome {
        report: ReportDocument {
            command: command.name(),
            input: Some(InputEcho::of(doc)),
            status,
            result,
            error,
        },
        log: ctx.log,
    }
}

/// Parses `text` and runs `command`; parse failures become error reports.
pub fn execute_text(command: Command, text: &str, opts: &RunOptions) -> Outcome {
    match InputDocument::parse(text) {
        Ok(doc) => execute(command, &doc, opts),
        Err(e) => {
            let error = ErrorReport::from(&e);
            Outcome {
                log: vec![format!("error: {}", error.message)],
                report: ReportDocument {
                    command: command.name(),
                    input: None,
                    status: Status::Error,
                    result: None,
                    error: Some(error),
                },
            }
        }
    }
}
