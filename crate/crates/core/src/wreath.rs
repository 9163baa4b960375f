//! The wreath product `R ≀ S_n` and its identification with monomial matrices.
//!
//! An element `(σ, d)` corresponds to the monomial matrix whose column `j`
//! carries `d[j]` in row `σ(j)`. Transporting the matrix product gives
//!
//! ```text
//! (σ, d) · (τ, e) = (σ ∘ τ, j ↦ d[τ(j)] + e[j])
//! ```

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::TropMatrix;
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;
use crate::scalar::{format_rational, rational_text};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("permutation of degree {sigma} with {weights} weights")]
    WeightCount { sigma: usize, weights: usize },
    #[error("empty element list")]
    Empty,
    #[error("dense product of elements {left} and {right} disagrees with the wreath product")]
    VerificationFailed { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWreath", into = "RawWreath")]
pub struct WreathElement {
    sigma: Permutation,
    d: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct RawWreath {
    sigma: Permutation,
    #[serde(with = "rational_text")]
    d: Vec<BigRational>,
}

impl TryFrom<RawWreath> for WreathElement {
    type Error = WreathError;

    fn try_from(raw: RawWreath) -> Result<Self, Self::Error> {
        WreathElement::new(raw.sigma, raw.d)
    }
}

impl From<WreathElement> for RawWreath {
    fn from(w: WreathElement) -> Self {
        RawWreath {
            sigma: w.sigma,
            d: w.d,
        }
    }
}

impl WreathElement {
    pub fn new(sigma: Permutation, d: Vec<BigRational>) -> Result<Self, WreathError> {
        if sigma.degree() != d.len() {
            return Err(WreathError::WeightCount {
                sigma: sigma.degree(),
                weights: d.len(),
            });
        }
        if d.is_empty() {
            return Err(WreathError::Empty);
        }
        Ok(WreathElement { sigma, d })
    }

    pub fn identity(n: usize) -> Self {
        WreathElement {
            sigma: Permutation::identity(n),
            d: vec![BigRational::zero(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn d(&self) -> &[BigRational] {
        &self.d
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.d.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &WreathElement) -> Result<WreathElement, WreathError> {
        if self.n() != rhs.n() {
            return Err(WreathError::DimensionMismatch(self.n(), rhs.n()));
        }
        let sigma = self.sigma.compose(&rhs.sigma).expect("degrees checked");
        let d = rhs
            .d
            .iter()
            .enumerate()
            .map(|(j, e)| &self.d[rhs.sigma.apply(j)] + e)
            .collect();
        Ok(WreathElement { sigma, d })
    }

    /// `(σ, d)^-1 = (σ^-1, j ↦ -d[σ^-1(j)])`.
    pub fn inverse(&self) -> WreathElement {
        let inv = self.sigma.inverse();
        let d = (0..self.n()).map(|j| -&self.d[inv.apply(j)]).collect();
        WreathElement { sigma: inv, d }
    }

    pub fn from_monomial(m: &MonomialMatrix) -> Self {
        WreathElement {
            sigma: m.sigma().clone(),
            d: m.diag().to_vec(),
        }
    }

    pub fn to_monomial(&self) -> MonomialMatrix {
        MonomialMatrix::new(self.sigma.clone(), self.d.clone()).expect("validated on construction")
    }

    pub fn to_dense(&self) -> TropMatrix {
        self.to_monomial().to_dense()
    }
}

impl From<&MonomialMatrix> for WreathElement {
    fn from(m: &MonomialMatrix) -> Self {
        WreathElement::from_monomial(m)
    }
}

impl From<&WreathElement> for MonomialMatrix {
    fn from(w: &WreathElement) -> Self {
        w.to_monomial()
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.d.iter().map(format_rational).collect();
        write!(f, "({}, [{}])", self.sigma, d.join(" "))
    }
}

/// Realizes wreath elements as dense monomial tropical matrices.
///
/// Every pairwise dense product is checked against the wreath product.
pub fn realize(elements: &[WreathElement]) -> Result<Vec<TropMatrix>, WreathError> {
    let n = elements.first().ok_or(WreathError::Empty)?.n();
    if let Some(w) = elements.iter().find(|w| w.n() != n) {
        return Err(WreathError::DimensionMismatch(n, w.n()));
    }
    let dense: Vec<TropMatrix> = elements.iter().map(WreathElement::to_dense).collect();
    for (l, (x, a)) in elements.iter().zip(&dense).enumerate() {
        for (r, (y, b)) in elements.iter().zip(&dense).enumerate() {
            let expected = x.mul(y)?.to_dense();
            if a.otimes(b).expect("square of equal size") != expected {
                return Err(WreathError::VerificationFailed { left: l, right: r });
            }
        }
    }
    Ok(dense)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::int_weights;

    fn w(one_line: &[usize], d: &[i64]) -> WreathElement {
        WreathElement::new(Permutation::from_one_line(one_line).unwrap(), int_weights(d)).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let x = w(&[3, 1, 2], &[4, -1, 0]);
        assert_eq!(WreathElement::identity(3).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&WreathElement::identity(3)).unwrap(), x);
    }

    #[test]
    fn swap_squares_to_identity() {
        let x = w(&[2, 1], &[-1, 1]);
        assert!(x.mul(&x).unwrap().is_identity());
    }

    #[test]
    fn diagonal_part_is_direct_product() {
        let a = w(&[1, 2], &[3, -2]);
        let b = w(&[1, 2], &[1, 5]);
        assert_eq!(a.mul(&b).unwrap(), w(&[1, 2], &[4, 3]));
    }

    #[test]
    fn round_trips() {
        let m: TropMatrix = "-inf 1; -1 -inf".parse().unwrap();
        let p = m.as_monomial().unwrap();
        let x = WreathElement::from_monomial(&p);
        assert_eq!(x, w(&[2, 1], &[-1, 1]));
        assert_eq!(x.to_monomial(), p);
        assert_eq!(
            WreathElement::from_monomial(&MonomialMatrix::identity(4)),
            WreathElement::identity(4)
        );
    }

    #[test]
    fn three_cycle_realization() {
        let dense = w(&[2, 3, 1], &[1, 2, 3]).to_dense();
        let expected: TropMatrix = "-inf -inf 3; 1 -inf -inf; -inf 2 -inf".parse().unwrap();
        assert_eq!(dense, expected);
    }

    #[test]
    fn realize_examples() {
        assert_eq!(
            realize(&[WreathElement::identity(3)]).unwrap(),
            vec![TropMatrix::neutral(3)]
        );
        let out = realize(&[WreathElement::identity(2), w(&[2, 1], &[-1, 1])]).unwrap();
        assert_eq!(out[1], "-inf 1; -1 -inf".parse().unwrap());
        assert_eq!(
            realize(&[WreathElement::identity(2), WreathElement::identity(3)]),
            Err(WreathError::DimensionMismatch(2, 3))
        );
        assert_eq!(realize(&[]), Err(WreathError::Empty));
    }

    #[test]
    fn mismatched_weights_rejected() {
        assert!(WreathElement::new(Permutation::identity(2), int_weights(&[1])).is_err());
        assert!(serde_json::from_str::<WreathElement>(r#"{"sigma":[1,2],"d":["0"]}"#).is_err());
        assert!(serde_json::from_str::<WreathElement>(r#"{"sigma":[1],"d":["-inf"]}"#).is_err());
    }

    #[test]
    fn json_form() {
        let x = WreathElement::new(
            Permutation::from_one_line(&[2, 1]).unwrap(),
            vec![BigRational::new((-1).into(), 2.into()), BigRational::from_integer(1.into())],
        )
        .unwrap();
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"sigma":[2,1],"d":["-1/2","1"]}"#);
        assert_eq!(serde_json::from_str::<WreathElement>(&text).unwrap(), x);
    }
}
