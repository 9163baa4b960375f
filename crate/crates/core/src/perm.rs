//! Permutations of `{0, …, n-1}` in one-line notation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("{0:?} is not a permutation of 1..={len}", len = .0.len())]
    NotBijective(Vec<usize>),
    #[error("cannot compose permutations of degree {0} and {1}")]
    DegreeMismatch(usize, usize),
}

/// `images[j]` is the image of `j`. Stored 0-based; the serde and
/// [`Permutation::one_line`] forms are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermutationError::NotBijective(
                    images.iter().map(|x| x + 1).collect(),
                ));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, PermutationError> {
        if one_line.contains(&0) {
            return Err(PermutationError::NotBijective(one_line.to_vec()));
        }
        Permutation::from_images(one_line.iter().map(|x| x - 1).collect())
            .map_err(|_| PermutationError::NotBijective(one_line.to_vec()))
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermutationError> {
        if self.degree() != other.degree() {
            return Err(PermutationError::DegreeMismatch(
                self.degree(),
                other.degree(),
            ));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            images[x] = j;
        }
        Permutation { images }
    }

    /// Cycles (0-based), each starting at its smallest element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermutationError;

    fn try_from(one_line: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_one_line(&one_line)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let b = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        // (a∘b)(1) = a(2) = 3
        assert_eq!(a.compose(&b).unwrap().one_line(), vec![3, 2, 1]);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 3]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
    }

    #[test]
    fn cycles_of_three_cycle() {
        let p = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3]]);
    }
}
