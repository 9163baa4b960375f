//! Finite lists of square tropical matrices treated as groups.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::matrix::{MatrixError, TropMatrix};

/// Default element cap for [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// How much of the group structure has been machine-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GroupMode {
    /// Closure, identity and inverses all checked on the list.
    Verified,
    /// A finite sample of a possibly infinite group; only the identity is checked.
    Assumed,
}

impl fmt::Display for GroupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupMode::Verified => "VERIFIED",
            GroupMode::Assumed => "ASSUMED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty element list")]
    Empty,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("element {index} is {rows}x{cols}, expected {n}x{n}")]
    WrongShape {
        index: usize,
        rows: usize,
        cols: usize,
        n: usize,
    },
    #[error("elements {first} and {second} are equal")]
    Duplicate { first: usize, second: usize },
    #[error("not closed: element {left} ⊗ element {right} is not in the list")]
    NotClosed {
        left: usize,
        right: usize,
        product: TropMatrix,
    },
    #[error("no element acts as a two-sided identity")]
    NoNeutral,
    #[error("element {index} has no two-sided inverse in the list")]
    NoInverse { index: usize },
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
}

impl GroupError {
    /// Short axiom name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            GroupError::Empty => "Empty",
            GroupError::Matrix(_) => "DimensionMismatch",
            GroupError::WrongShape { .. } => "DimensionMismatch",
            GroupError::Duplicate { .. } => "Duplicate",
            GroupError::NotClosed { .. } => "NotClosed",
            GroupError::NoNeutral => "NoNeutral",
            GroupError::NoInverse { .. } => "NoInverse",
            GroupError::CapExceeded { .. } => "CapExceeded",
        }
    }
}

/// A list of distinct square matrices with an identified neutral element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    n: usize,
    elements: Vec<TropMatrix>,
    neutral_index: usize,
    mode: GroupMode,
}

fn check_shapes(elements: &[TropMatrix]) -> Result<usize, GroupError> {
    let first = elements.first().ok_or(GroupError::Empty)?;
    let n = first.require_square()?;
    for (index, a) in elements.iter().enumerate() {
        if a.rows() != n || a.cols() != n {
            return Err(GroupError::WrongShape {
                index,
                rows: a.rows(),
                cols: a.cols(),
                n,
            });
        }
    }
    Ok(n)
}

fn index_map(elements: &[TropMatrix]) -> Result<HashMap<&TropMatrix, usize>, GroupError> {
    let mut map = HashMap::with_capacity(elements.len());
    for (i, a) in elements.iter().enumerate() {
        if let Some(&first) = map.get(a) {
            return Err(GroupError::Duplicate { first, second: i });
        }
        map.insert(a, i);
    }
    Ok(map)
}

fn mul(a: &TropMatrix, b: &TropMatrix) -> TropMatrix {
    a.otimes(b).expect("shapes checked")
}

/// Index of the element acting as a two-sided identity on every element.
pub fn find_neutral(elements: &[TropMatrix]) -> Result<usize, GroupError> {
    check_shapes(elements)?;
    elements
        .iter()
        .position(|e| {
            elements
                .iter()
                .all(|g| &mul(e, g) == g && &mul(g, e) == g)
        })
        .ok_or(GroupError::NoNeutral)
}

/// Checks closure, identity and inverses, in that order.
pub fn verify_group(elements: Vec<TropMatrix>) -> Result<MatrixGroup, GroupError> {
    let n = check_shapes(&elements)?;
    let index = index_map(&elements)?;
    let len = elements.len();
    let mut table = vec![0usize; len * len];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let p = mul(a, b);
            match index.get(&p) {
                Some(&k) => table[i * len + j] = k,
                None => {
                    return Err(GroupError::NotClosed {
                        left: i,
                        right: j,
                        product: p,
                    })
                }
            }
        }
    }
    let neutral_index = (0..len)
        .find(|&e| (0..len).all(|g| table[e * len + g] == g && table[g * len + e] == g))
        .ok_or(GroupError::NoNeutral)?;
    for g in 0..len {
        let has_inverse = (0..len).any(|h| {
            table[g * len + h] == neutral_index && table[h * len + g] == neutral_index
        });
        if !has_inverse {
            return Err(GroupError::NoInverse { index: g });
        }
    }
    drop(index);
    Ok(MatrixGroup {
        n,
        elements,
        neutral_index,
        mode: GroupMode::Verified,
    })
}

/// Breadth-first multiplicative closure of `generators`.
///
/// Element order is first-seen: generators (deduplicated) first, then
/// products in the order they are discovered. Fails once more than `cap`
/// distinct elements are known.
pub fn closure(generators: &[TropMatrix], cap: usize) -> Result<Vec<TropMatrix>, GroupError> {
    check_shapes(generators)?;
    let mut elements: Vec<TropMatrix> = Vec::new();
    let mut seen: HashMap<TropMatrix, usize> = HashMap::new();
    let push = |m: TropMatrix,
                elements: &mut Vec<TropMatrix>,
                seen: &mut HashMap<TropMatrix, usize>|
     -> Result<(), GroupError> {
        if !seen.contains_key(&m) {
            seen.insert(m.clone(), elements.len());
            elements.push(m);
            if elements.len() > cap {
                return Err(GroupError::CapExceeded { cap });
            }
        }
        Ok(())
    };
    for g in generators {
        push(g.clone(), &mut elements, &mut seen)?;
    }
    // After processing position p, every ordered pair within 0..=p has been multiplied.
    let mut p = 0;
    while p < elements.len() {
        for q in 0..=p {
            let pq = mul(&elements[p], &elements[q]);
            push(pq, &mut elements, &mut seen)?;
            if q != p {
                let qp = mul(&elements[q], &elements[p]);
                push(qp, &mut elements, &mut seen)?;
            }
        }
        p += 1;
    }
    Ok(elements)
}

/// `n!`, saturating at `u128::MAX`.
pub fn factorial(n: usize) -> u128 {
    (2..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

/// Outcome of comparing a finite group's order with `n!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicReport {
    pub order: usize,
    pub n_factorial: u128,
    pub ok: bool,
}

impl fmt::Display for PeriodicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            write!(f, "order {} <= {}", self.order, self.n_factorial)
        } else {
            write!(
                f,
                "order {} exceeds {}: the group or the order bound computation is wrong",
                self.order, self.n_factorial
            )
        }
    }
}

/// A finite group of `n x n` tropical matrices has at most `n!` elements.
pub fn periodic_bound_check(g: &MatrixGroup) -> PeriodicReport {
    let order = g.order();
    let n_factorial = factorial(g.n());
    PeriodicReport {
        order,
        n_factorial,
        ok: (order as u128) <= n_factorial,
    }
}

impl MatrixGroup {
    /// Accepts `elements` as a sample of a group: checks shapes,
    /// distinctness and the neutral element only.
    pub fn assumed(elements: Vec<TropMatrix>) -> Result<MatrixGroup, GroupError> {
        let n = check_shapes(&elements)?;
        index_map(&elements)?;
        let neutral_index = find_neutral(&elements)?;
        Ok(MatrixGroup {
            n,
            elements,
            neutral_index,
            mode: GroupMode::Assumed,
        })
    }

    pub(crate) fn from_parts(
        n: usize,
        elements: Vec<TropMatrix>,
        neutral_index: usize,
        mode: GroupMode,
    ) -> MatrixGroup {
        MatrixGroup {
            n,
            elements,
            neutral_index,
            mode,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[TropMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn neutral_index(&self) -> usize {
        self.neutral_index
    }

    pub fn neutral(&self) -> &TropMatrix {
        &self.elements[self.neutral_index]
    }

    pub fn mode(&self) -> GroupMode {
        self.mode
    }

    /// Pairs `(i, j, k)` with `elements[i] ⊗ elements[j] = elements[k]`.
    pub fn product_triples(&self) -> Vec<(usize, usize, usize)> {
        let index: HashMap<&TropMatrix, usize> =
            self.elements.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let mut out = Vec::new();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if let Some(&k) = index.get(&mul(a, b)) {
                    out.push((i, j, k));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> TropMatrix {
        s.parse().unwrap()
    }

    fn swap() -> TropMatrix {
        m("-inf 1; -1 -inf")
    }

    #[test]
    fn find_neutral_examples() {
        assert_eq!(find_neutral(&[TropMatrix::neutral(2)]), Ok(0));
        assert_eq!(find_neutral(&[swap(), TropMatrix::neutral(2)]), Ok(1));
        assert_eq!(find_neutral(&[m("0 0; 0 0")]), Ok(0));
        assert_eq!(find_neutral(&[swap()]), Err(GroupError::NoNeutral));
    }

    #[test]
    fn verify_group_examples() {
        let g = verify_group(vec![TropMatrix::neutral(2), swap()]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mode(), GroupMode::Verified);
        assert_eq!(g.neutral_index(), 0);

        let err = verify_group(vec![TropMatrix::neutral(2), m("1 -inf; -inf 1")]).unwrap_err();
        assert_eq!(
            err,
            GroupError::NotClosed {
                left: 1,
                right: 1,
                product: m("2 -inf; -inf 2")
            }
        );

        let trivial = verify_group(vec![m("0 0; 0 0")]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn verify_group_other_failures() {
        // {0, -inf} is a closed monoid in which -inf has no inverse.
        let err = verify_group(vec![m("0"), m("-inf")]).unwrap_err();
        assert_eq!(err, GroupError::NoInverse { index: 1 });
        assert!(matches!(
            verify_group(vec![swap(), swap()]),
            Err(GroupError::Duplicate { first: 0, second: 1 })
        ));
        assert!(matches!(
            verify_group(vec![TropMatrix::neutral(2), TropMatrix::neutral(3)]),
            Err(GroupError::WrongShape { index: 1, .. })
        ));
        assert_eq!(verify_group(vec![]), Err(GroupError::Empty));
        // Two orthogonal idempotents multiply to the all -inf matrix.
        assert!(matches!(
            verify_group(vec![m("0 -inf; -inf -inf"), m("-inf -inf; -inf 0")]),
            Err(GroupError::NotClosed { left: 0, right: 1, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            closure(&[swap()], 10).unwrap(),
            vec![swap(), TropMatrix::neutral(2)]
        );
        assert_eq!(
            closure(&[TropMatrix::neutral(3)], 10).unwrap(),
            vec![TropMatrix::neutral(3)]
        );
        assert_eq!(
            closure(&[m("1 -inf; -inf 1")], 5),
            Err(GroupError::CapExceeded { cap: 5 })
        );
    }

    #[test]
    fn closure_of_transpositions_is_s3() {
        let t12 = m("-inf 0 -inf; 0 -inf -inf; -inf -inf 0");
        let t23 = m("0 -inf -inf; -inf -inf 0; -inf 0 -inf");
        let elems = closure(&[t12.clone(), t23], 100).unwrap();
        assert_eq!(elems.len(), 6);
        assert_eq!(elems[0], t12);
        let g = verify_group(elems).unwrap();
        assert_eq!(
            periodic_bound_check(&g),
            PeriodicReport {
                order: 6,
                n_factorial: 6,
                ok: true
            }
        );
    }

    #[test]
    fn periodic_bound_examples() {
        let g = verify_group(vec![TropMatrix::neutral(2), swap()]).unwrap();
        let r = periodic_bound_check(&g);
        assert_eq!((r.order, r.n_factorial, r.ok), (2, 2, true));
        let t = verify_group(vec![TropMatrix::neutral(5)]).unwrap();
        let r = periodic_bound_check(&t);
        assert_eq!((r.order, r.n_factorial, r.ok), (1, 120, true));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(1), 1);
        assert_eq!(factorial(7), 5040);
        assert_eq!(factorial(200), u128::MAX);
    }

    #[test]
    fn assumed_sample_needs_a_neutral() {
        let sample = vec![m("-1 -2; -2 -1"), m("0 -1; -1 0"), m("1 0; 0 1")];
        let g = MatrixGroup::assumed(sample).unwrap();
        assert_eq!(g.neutral_index(), 1);
        assert_eq!(g.mode(), GroupMode::Assumed);
        assert_eq!(
            MatrixGroup::assumed(vec![m("1 0; 0 1")]),
            Err(GroupError::NoNeutral)
        );
    }
}
