//! Tropical linear combinations of rows and full row rank.
//!
//! Membership of a row `b` in the max-plus span of rows `R[0..k]` is decided
//! by residuation. The principal solution
//!
//! ```text
//! λ_k = min { b[t] - R[k][t] : R[k][t] finite }
//! ```
//!
//! is the largest coefficient vector whose combination stays entrywise below
//! `b`, so `b` is a combination of the rows if and only if the principal
//! solution reproduces it exactly.

use crate::matrix::{MatrixError, TropMatrix};
use crate::scalar::Scalar;

/// Coefficients expressing one row as a combination of the others.
///
/// `lambdas[k]` multiplies the `k`-th remaining row (row indices above
/// `target_row` shift down by one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationWitness {
    pub target_row: usize,
    pub lambdas: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowRank {
    Full,
    /// The smallest row that is a combination of the others.
    Deficient(CombinationWitness),
}

impl RowRank {
    pub fn is_full(&self) -> bool {
        matches!(self, RowRank::Full)
    }
}

fn check_lengths<R: AsRef<[Scalar]>>(b: &[Scalar], rows: &[R]) -> Result<(), MatrixError> {
    if b.is_empty() {
        return Err(MatrixError::DimensionMismatch("empty target row".into()));
    }
    if let Some((k, r)) = rows
        .iter()
        .enumerate()
        .find(|(_, r)| r.as_ref().len() != b.len())
    {
        return Err(MatrixError::DimensionMismatch(format!(
            "row {k} has length {}, target has length {}",
            r.as_ref().len(),
            b.len()
        )));
    }
    Ok(())
}

/// The maximal `λ` with `⊕_k λ_k ⊗ rows[k] ≤ b` entrywise.
///
/// An all-`-inf` row gets `λ = -inf`.
pub fn principal_solution<R: AsRef<[Scalar]>>(
    b: &[Scalar],
    rows: &[R],
) -> Result<Vec<Scalar>, MatrixError> {
    check_lengths(b, rows)?;
    Ok(rows
        .iter()
        .map(|r| {
            let mut best: Option<Scalar> = None;
            for (bt, rt) in b.iter().zip(r.as_ref()) {
                let Some(rt) = rt.as_finite() else { continue };
                let q = bt.minus(rt);
                if best.as_ref().is_none_or(|cur| q < *cur) {
                    best = Some(q);
                }
            }
            best.unwrap_or(Scalar::NegInf)
        })
        .collect())
}

/// Evaluates `⊕_k lambdas[k] ⊗ rows[k]` as a row of length `width`.
pub fn combine<R: AsRef<[Scalar]>>(lambdas: &[Scalar], rows: &[R], width: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::NegInf; width];
    for (lambda, r) in lambdas.iter().zip(rows) {
        if lambda.is_neg_inf() {
            continue;
        }
        for (acc, x) in out.iter_mut().zip(r.as_ref()) {
            let term = lambda.otimes(x);
            if term > *acc {
                *acc = term;
            }
        }
    }
    out
}

/// Returns the principal coefficients if `b` is a combination of `rows`.
///
/// `None` means no coefficient vector at all reproduces `b`.
pub fn is_combination<R: AsRef<[Scalar]>>(
    b: &[Scalar],
    rows: &[R],
) -> Result<Option<Vec<Scalar>>, MatrixError> {
    let lambdas = principal_solution(b, rows)?;
    let combo = combine(&lambdas, rows, b.len());
    Ok((combo.as_slice() == b).then_some(lambdas))
}

/// Scans rows top to bottom and reports the first one lying in the span of
/// the others.
pub fn full_row_rank(a: &TropMatrix) -> RowRank {
    for i in 0..a.rows() {
        let others: Vec<&[Scalar]> = a
            .row_iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r)
            .collect();
        let found = is_combination(a.row(i), &others).expect("rows of one matrix share a length");
        if let Some(lambdas) = found {
            return RowRank::Deficient(CombinationWitness {
                target_row: i,
                lambdas,
            });
        }
    }
    RowRank::Full
}
