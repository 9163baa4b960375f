//! Tropical monomial matrices: one finite entry per row and per column.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::matrix::{MatrixError, TropMatrix};
use crate::perm::Permutation;
use crate::scalar::{format_rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotMonomial {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("column {column} has {count} finite entries")]
    Column { column: usize, count: usize },
    #[error("row {row} has {count} finite entries")]
    Row { row: usize, count: usize },
}

/// A monomial matrix as a permutation plus finite weights.
///
/// Column `j` has its single finite entry `diag[j]` in row `sigma(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    sigma: Permutation,
    diag: Vec<BigRational>,
}

impl MonomialMatrix {
    pub fn new(sigma: Permutation, diag: Vec<BigRational>) -> Result<Self, MatrixError> {
        if sigma.degree() != diag.len() {
            return Err(MatrixError::DimensionMismatch(format!(
                "permutation of degree {} with {} weights",
                sigma.degree(),
                diag.len()
            )));
        }
        if diag.is_empty() {
            return Err(MatrixError::Empty);
        }
        Ok(MonomialMatrix { sigma, diag })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMatrix {
            sigma: Permutation::identity(n),
            diag: vec![BigRational::zero(); n],
        }
    }

    /// Diagonal matrix with the given weights.
    pub fn diagonal(diag: Vec<BigRational>) -> Self {
        MonomialMatrix {
            sigma: Permutation::identity(diag.len()),
            diag,
        }
    }

    /// Zero-weight permutation matrix.
    pub fn permutation(sigma: Permutation) -> Self {
        let n = sigma.degree();
        MonomialMatrix {
            sigma,
            diag: vec![BigRational::zero(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn diag(&self) -> &[BigRational] {
        &self.diag
    }

    pub fn is_diagonal(&self) -> bool {
        self.sigma.is_identity()
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.diag.iter().all(Zero::is_zero)
    }

    pub fn to_dense(&self) -> TropMatrix {
        let n = self.n();
        let mut entries = vec![Scalar::NegInf; n * n];
        for (j, w) in self.diag.iter().enumerate() {
            entries[self.sigma.apply(j) * n + j] = Scalar::Finite(w.clone());
        }
        TropMatrix::new(n, n, entries).expect("n >= 1 by construction")
    }

    /// Reads the monomial pattern of a dense matrix.
    pub fn from_dense(a: &TropMatrix) -> Result<Self, NotMonomial> {
        if !a.is_square() {
            return Err(NotMonomial::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut images = Vec::with_capacity(n);
        let mut diag = Vec::with_capacity(n);
        for j in 0..n {
            let finite: Vec<(usize, &BigRational)> = (0..n)
                .filter_map(|i| a.get(i, j).as_finite().map(|q| (i, q)))
                .collect();
            match finite.as_slice() {
                [(i, q)] => {
                    images.push(*i);
                    diag.push((*q).clone());
                }
                _ => {
                    return Err(NotMonomial::Column {
                        column: j,
                        count: finite.len(),
                    })
                }
            }
        }
        let sigma = Permutation::from_images(images).map_err(|_| {
            // Some row received two columns; report the first such row.
            let row = (0..n)
                .find(|&i| a.row(i).iter().filter(|s| s.is_finite()).count() != 1)
                .unwrap_or(0);
            NotMonomial::Row {
                row,
                count: a.row(row).iter().filter(|s| s.is_finite()).count(),
            }
        })?;
        Ok(MonomialMatrix { sigma, diag })
    }

    /// Product in the monomial group: `(σP ∘ σQ, d)` with `d[j] = P.diag[σQ(j)] + Q.diag[j]`.
    pub fn otimes(&self, rhs: &MonomialMatrix) -> Result<MonomialMatrix, MatrixError> {
        let sigma = self
            .sigma
            .compose(&rhs.sigma)
            .map_err(|e| MatrixError::DimensionMismatch(e.to_string()))?;
        let diag = rhs
            .diag
            .iter()
            .enumerate()
            .map(|(j, w)| &self.diag[rhs.sigma.apply(j)] + w)
            .collect();
        Ok(MonomialMatrix { sigma, diag })
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let inv = self.sigma.inverse();
        let diag = (0..self.n())
            .map(|j| -&self.diag[inv.apply(j)])
            .collect();
        MonomialMatrix { sigma: inv, diag }
    }

    /// `self^k` for `k >= 0` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> MonomialMatrix {
        let mut base = self.clone();
        let mut acc = MonomialMatrix::identity(self.n());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.otimes(&base).expect("same degree");
            }
            base = base.otimes(&base).expect("same degree");
            k >>= 1;
        }
        acc
    }

    /// Smallest `k` in `1..=cap` with `self^k` the identity, if any.
    pub fn order_up_to(&self, cap: u32) -> Option<u32> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.otimes(self).expect("same degree");
        }
        None
    }
}

impl TropMatrix {
    /// Interprets `self` as a monomial matrix, if it has that pattern.
    pub fn as_monomial(&self) -> Result<MonomialMatrix, NotMonomial> {
        MonomialMatrix::from_dense(self)
    }
}

impl From<&MonomialMatrix> for TropMatrix {
    fn from(m: &MonomialMatrix) -> Self {
        m.to_dense()
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag.iter().map(format_rational).collect();
        write!(f, "(σ={}, d=[{}])", self.sigma, d.join(" "))
    }
}

#[cfg(test)]
pub(crate) fn int_weights(ws: &[i64]) -> Vec<BigRational> {
    ws.iter()
        .map(|&w| BigRational::from_integer(w.into()))
        .collect()
}
