//! Dense tropical matrices and the max-plus product.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{ParseScalarError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("row index {index} out of range for a matrix with {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected a square matrix, found {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
}

/// A dense `rows x cols` matrix over the max-plus semiring, stored row-major.
///
/// Indices are 0-based throughout the library API.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Scalar>>", into = "Vec<Vec<Scalar>>")]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(TropMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let expected = rows.first().map(Vec::len).ok_or(MatrixError::Empty)?;
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != expected) {
            return Err(MatrixError::Ragged {
                row,
                expected,
                found: r.len(),
            });
        }
        let n = rows.len();
        TropMatrix::new(n, expected, rows.into_iter().flatten().collect())
    }

    /// Matrix with every entry `-inf`.
    pub fn neg_inf(rows: usize, cols: usize) -> Result<Self, MatrixError> {
        TropMatrix::new(rows, cols, vec![Scalar::NegInf; rows * cols])
    }

    /// The identity of `(R̄^{n×n}, ⊗)`: zeros on the diagonal, `-inf` elsewhere.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn neutral(n: usize) -> Self {
        assert!(n >= 1, "neutral matrix needs n >= 1");
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Scalar::zero()
                } else {
                    Scalar::NegInf
                }
            })
            .collect();
        TropMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl ExactSizeIterator<Item = &[Scalar]> {
        self.entries.chunks(self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.row_iter().map(<[Scalar]>::to_vec).collect()
    }

    /// Tropical product `self ⊗ rhs`: entry `(i, j)` is `max_t self(i,t) + rhs(t,j)`.
    pub fn otimes(&self, rhs: &TropMatrix) -> Result<TropMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let left = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = Scalar::NegInf;
                for (t, a) in left.iter().enumerate() {
                    if a.is_neg_inf() {
                        continue;
                    }
                    let term = a.otimes(rhs.get(t, j));
                    if term > acc {
                        acc = term;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    /// Deletes row `i` (0-based); the remaining rows keep their order.
    pub fn remove_row(&self, i: usize) -> Result<TropMatrix, MatrixError> {
        if i >= self.rows || self.rows < 2 {
            return Err(MatrixError::IndexOutOfRange {
                index: i,
                rows: self.rows,
            });
        }
        let entries = self
            .row_iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .flat_map(|(_, r)| r.iter().cloned())
            .collect();
        Ok(TropMatrix {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
        })
    }

    pub fn require_square(&self) -> Result<usize, MatrixError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl TryFrom<Vec<Vec<Scalar>>> for TropMatrix {
    type Error = MatrixError;

    fn try_from(rows: Vec<Vec<Scalar>>) -> Result<Self, Self::Error> {
        TropMatrix::from_rows(rows)
    }
}

impl From<TropMatrix> for Vec<Vec<Scalar>> {
    fn from(m: TropMatrix) -> Self {
        m.to_rows()
    }
}

/// Compact text form: rows separated by `;`, entries by whitespace or commas.
///
/// ```
/// use tropgroup::TropMatrix;
/// let m: TropMatrix = "-inf 1; -1 -inf".parse().unwrap();
/// assert_eq!(m.otimes(&m).unwrap(), TropMatrix::neutral(2));
/// ```
impl FromStr for TropMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(str::parse)
                    .collect::<Result<Vec<Scalar>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        TropMatrix::from_rows(rows)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(Scalar::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> TropMatrix {
        s.parse().unwrap()
    }

    // Entry-by-entry evaluation of max_t a(i,t) + b(t,j).
    #[test]
    fn product_by_hand() {
        let a = m("0 1; 2 -inf");
        let b = m("0 -1; -inf 3");
        assert_eq!(a.otimes(&b).unwrap(), m("0 4; 2 1"));
    }

    #[test]
    fn order_two_element_squares_to_neutral() {
        let x = m("-inf 1; -1 -inf");
        assert_eq!(x.otimes(&x).unwrap(), m("0 -inf; -inf 0"));
    }

    #[test]
    fn neutral_examples() {
        assert_eq!(TropMatrix::neutral(1), m("0"));
        assert_eq!(TropMatrix::neutral(2), m("0 -inf; -inf 0"));
        let e3 = TropMatrix::neutral(3);
        assert_eq!(e3.otimes(&e3).unwrap(), e3);
        let a = m("3/2 -inf; 0 -7");
        assert_eq!(TropMatrix::neutral(2).otimes(&a).unwrap(), a);
        assert_eq!(a.otimes(&TropMatrix::neutral(2)).unwrap(), a);
    }

    #[test]
    fn rectangular_product_shape() {
        let a = m("0 1 2");
        let b = m("0; 1; -inf");
        assert_eq!(a.otimes(&b).unwrap(), m("2"));
        assert_eq!(b.otimes(&a).unwrap().rows(), 3);
        assert!(matches!(
            a.otimes(&a),
            Err(MatrixError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn remove_row_examples() {
        let a = m("1 2; 3 4");
        assert_eq!(a.remove_row(0).unwrap(), m("3 4"));
        assert_eq!(a.remove_row(1).unwrap(), m("1 2"));
        assert!(matches!(
            m("1 2 3").remove_row(0),
            Err(MatrixError::IndexOutOfRange { .. })
        ));
        assert!(a.remove_row(2).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            TropMatrix::from_rows(vec![vec![Scalar::zero()], vec![]]),
            Err(MatrixError::Ragged { row: 1, .. })
        ));
        assert_eq!(TropMatrix::from_rows(vec![]), Err(MatrixError::Empty));
        assert!("1 2; x 3".parse::<TropMatrix>().is_err());
    }

    #[test]
    fn json_shape() {
        let a = m("0 -1/2; -inf 3");
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"[["0","-1/2"],["-inf","3"]]"#);
        assert_eq!(serde_json::from_str::<TropMatrix>(&text).unwrap(), a);
        assert!(serde_json::from_str::<TropMatrix>(r#"[["0"],["1","2"]]"#).is_err());
    }
}
