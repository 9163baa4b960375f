//! Faithful monomial representations of tropical matrix groups.
//!
//! [`monomialize`] repeatedly shrinks the dimension while some element has
//! a row lying in the span of its other rows ([`reduce_once`]). Once every
//! element has full row rank, each element `G` factors uniquely as
//! `G = P_G ⊗ E` with `P_G` monomial and `E` the group identity
//! ([`extract_monomial_factor`]), and `G ↦ P_G` is the representation.
//! [`analyze`] then groups elements by the permutation of their image.

use std::collections::HashMap;

use thiserror::Error;

use crate::group::{factorial, GroupMode, MatrixGroup};
use crate::matrix::{MatrixError, TropMatrix};
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;
use crate::rank::{full_row_rank, CombinationWitness, RowRank};
use crate::scalar::Scalar;

/// Exponent up to which sampled diagonal images are checked for finite order.
pub const TORSION_EXPONENT_CAP: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("base matrix is not of full row rank (row {row} is a combination of the others)")]
    BaseNotFullRank { row: usize },
    #[error("row {row} is not a scaled row of the base matrix")]
    NoRowMatch { row: usize },
    #[error("row {row} is a scaled copy of several base rows {candidates:?}")]
    AmbiguousRowMatch { row: usize, candidates: Vec<usize> },
    #[error("rows map onto base rows {assignment:?}, which is not a bijection")]
    NotBijective { assignment: Vec<usize> },
    #[error("assembled monomial factor does not reproduce the matrix")]
    VerificationFailed,
}

impl FactorError {
    pub fn kind(&self) -> &'static str {
        match self {
            FactorError::Matrix(_) => "DimensionMismatch",
            FactorError::BaseNotFullRank { .. } => "BaseNotFullRank",
            FactorError::NoRowMatch { .. } => "NoRowMatch",
            FactorError::AmbiguousRowMatch { .. } => "AmbiguousRowMatch",
            FactorError::NotBijective { .. } => "NotBijective",
            FactorError::VerificationFailed => "VerificationFailed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("every element has full row rank")]
    AllFullRank,
    #[error("cannot reduce a 1x1 group")]
    DimensionTooSmall,
    #[error("element {element} is not reconstructed by P ⊗ (element without the removed row)")]
    RowConsistencyFailed { element: usize },
    #[error("elements {first} and {second} have the same image")]
    NotInjectiveOnSample { first: usize, second: usize },
    #[error("image of element {left} ⊗ element {right} is not the product of their images")]
    NotHomomorphicOnSample { left: usize, right: usize },
}

impl ReduceError {
    pub fn kind(&self) -> &'static str {
        match self {
            ReduceError::AllFullRank => "AllFullRank",
            ReduceError::DimensionTooSmall => "DimensionTooSmall",
            ReduceError::RowConsistencyFailed { .. } => "RowConsistencyFailed",
            ReduceError::NotInjectiveOnSample { .. } => "NotInjectiveOnSample",
            ReduceError::NotHomomorphicOnSample { .. } => "NotHomomorphicOnSample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("element {element}: {source}")]
    Factor {
        element: usize,
        #[source]
        source: FactorError,
    },
}

/// One dimension-reducing step `G ↦ (G without row i) ⊗ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Element whose rank deficiency was used.
    pub deficient_element: usize,
    pub removed_row: usize,
    pub witness: CombinationWitness,
    /// `n x (n-1)`: the neutral of dimension `n-1` with the witness row inserted at `removed_row`.
    pub p: TropMatrix,
    pub source_dim: usize,
}

/// Images of every source element under the composite map, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub source: MatrixGroup,
    pub target_dim: usize,
    pub images: Vec<MonomialMatrix>,
    pub trace: Vec<ReductionStep>,
    pub base_neutral: TropMatrix,
    /// Number of in-sample products `G ⊗ H = K` on which the homomorphism was checked.
    pub pairs_checked: usize,
}

fn same_support(a: &[Scalar], b: &[Scalar]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_finite() == y.is_finite())
}

/// The constant `c` with `row = c ⊗ base_row`, if one exists.
fn scale_between(row: &[Scalar], base_row: &[Scalar]) -> Option<Scalar> {
    if !same_support(row, base_row) {
        return None;
    }
    let mut c: Option<Scalar> = None;
    for (x, y) in row.iter().zip(base_row) {
        if let (Some(x), Some(y)) = (x.as_finite(), y.as_finite()) {
            let d = Scalar::Finite(x - y);
            match &c {
                None => c = Some(d),
                Some(prev) if *prev != d => return None,
                Some(_) => {}
            }
        }
    }
    c
}

/// Finds the monomial `P` with `G = P ⊗ E`, for `E` of full row rank.
///
/// Each row of `G` must be a finite multiple of exactly one row of `E`,
/// and those rows must be pairwise different.
pub fn extract_monomial_factor(
    g: &TropMatrix,
    e: &TropMatrix,
) -> Result<MonomialMatrix, FactorError> {
    let n = g.require_square()?;
    if e.rows() != n || e.cols() != n {
        return Err(MatrixError::DimensionMismatch(format!(
            "{n}x{n} element against a {}x{} base",
            e.rows(),
            e.cols()
        ))
        .into());
    }
    if let RowRank::Deficient(w) = full_row_rank(e) {
        return Err(FactorError::BaseNotFullRank { row: w.target_row });
    }
    // assignment[i] = base row matched by row i
    let mut assignment = Vec::with_capacity(n);
    let mut scales = Vec::with_capacity(n);
    for i in 0..n {
        let matches: Vec<(usize, Scalar)> = (0..n)
            .filter_map(|k| scale_between(g.row(i), e.row(k)).map(|c| (k, c)))
            .collect();
        match matches.as_slice() {
            [] => return Err(FactorError::NoRowMatch { row: i }),
            [(k, c)] => {
                assignment.push(*k);
                scales.push(c.clone());
            }
            _ => {
                return Err(FactorError::AmbiguousRowMatch {
                    row: i,
                    candidates: matches.into_iter().map(|(k, _)| k).collect(),
                })
            }
        }
    }
    // Column k of P holds its finite entry in row i where assignment[i] = k.
    let kappa = Permutation::from_images(assignment.clone())
        .map_err(|_| FactorError::NotBijective { assignment })?;
    let sigma = kappa.inverse();
    let diag = (0..n)
        .map(|k| {
            scales[sigma.apply(k)]
                .as_finite()
                .expect("scales are finite")
                .clone()
        })
        .collect();
    let p = MonomialMatrix::new(sigma, diag)?;
    if &p.to_dense().otimes(e)? != g {
        return Err(FactorError::VerificationFailed);
    }
    Ok(p)
}

fn build_step(
    deficient_element: usize,
    witness: CombinationWitness,
    n: usize,
) -> ReductionStep {
    let i = witness.target_row;
    let mut entries = Vec::with_capacity(n * (n - 1));
    let mut other = 0;
    for r in 0..n {
        if r == i {
            entries.extend(witness.lambdas.iter().cloned());
        } else {
            entries.extend((0..n - 1).map(|c| {
                if c == other {
                    Scalar::zero()
                } else {
                    Scalar::NegInf
                }
            }));
            other += 1;
        }
    }
    let p = TropMatrix::new(n, n - 1, entries).expect("n >= 2");
    ReductionStep {
        deficient_element,
        removed_row: i,
        witness,
        p,
        source_dim: n,
    }
}

fn check_injective<T: Eq + std::hash::Hash>(images: &[T]) -> Result<(), (usize, usize)> {
    let mut seen: HashMap<&T, usize> = HashMap::with_capacity(images.len());
    for (i, x) in images.iter().enumerate() {
        if let Some(&first) = seen.get(x) {
            return Err((first, i));
        }
        seen.insert(x, i);
    }
    Ok(())
}

fn reduce_with(
    g: &MatrixGroup,
    triples: &[(usize, usize, usize)],
) -> Result<(MatrixGroup, ReductionStep), ReduceError> {
    let n = g.n();
    if n < 2 {
        return Err(ReduceError::DimensionTooSmall);
    }
    let (deficient_element, witness) = g
        .elements()
        .iter()
        .enumerate()
        .find_map(|(k, a)| match full_row_rank(a) {
            RowRank::Deficient(w) => Some((k, w)),
            RowRank::Full => None,
        })
        .ok_or(ReduceError::AllFullRank)?;
    let step = build_step(deficient_element, witness, n);
    let i = step.removed_row;

    let mut images = Vec::with_capacity(g.order());
    for (k, a) in g.elements().iter().enumerate() {
        let trimmed = a.remove_row(i).expect("n >= 2");
        if &step.p.otimes(&trimmed).expect("shapes agree") != a {
            return Err(ReduceError::RowConsistencyFailed { element: k });
        }
        images.push(trimmed.otimes(&step.p).expect("shapes agree"));
    }
    check_injective(&images)
        .map_err(|(first, second)| ReduceError::NotInjectiveOnSample { first, second })?;
    for &(l, r, prod) in triples {
        if images[l].otimes(&images[r]).expect("same shape") != images[prod] {
            return Err(ReduceError::NotHomomorphicOnSample { left: l, right: r });
        }
    }
    let reduced = MatrixGroup::from_parts(n - 1, images, g.neutral_index(), g.mode());
    Ok((reduced, step))
}

/// Maps `g` faithfully into `(n-1) x (n-1)` matrices using the first
/// rank-deficient element (list order) and its smallest dependent row.
///
/// Injectivity and the homomorphism property are checked on every
/// in-sample product.
pub fn reduce_once(g: &MatrixGroup) -> Result<(MatrixGroup, ReductionStep), ReduceError> {
    reduce_with(g, &g.product_triples())
}

/// Computes a faithful representation of `g` by monomial matrices.
pub fn monomialize(g: &MatrixGroup) -> Result<Representation, RepError> {
    let triples = g.product_triples();
    let mut current = g.clone();
    let mut trace = Vec::new();
    loop {
        if current.n() < 2 {
            break;
        }
        match reduce_with(&current, &triples) {
            Ok((next, step)) => {
                trace.push(step);
                current = next;
            }
            Err(ReduceError::AllFullRank) => break,
            Err(e) => return Err(e.into()),
        }
    }

    let base = current.neutral().clone();
    let m = current.n();
    let images = if current.order() == 1 && !full_row_rank(&base).is_full() {
        // Trivial group {[-inf]} in dimension 1.
        vec![MonomialMatrix::identity(m)]
    } else {
        current
            .elements()
            .iter()
            .enumerate()
            .map(|(element, a)| {
                extract_monomial_factor(a, &base)
                    .map_err(|source| RepError::Factor { element, source })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    check_injective(&images)
        .map_err(|(first, second)| ReduceError::NotInjectiveOnSample { first, second })?;
    for &(l, r, prod) in &triples {
        if images[l].otimes(&images[r]).expect("same degree") != images[prod] {
            return Err(ReduceError::NotHomomorphicOnSample { left: l, right: r }.into());
        }
    }
    Ok(Representation {
        source: g.clone(),
        target_dim: m,
        images,
        trace,
        base_neutral: base,
        pairs_checked: triples.len(),
    })
}

/// How the torsion-freeness of the diagonal part was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionCheck {
    /// Finite verified group: the diagonal part must be trivial.
    Exact,
    /// Sample: no non-identity diagonal image has order up to this exponent.
    UpToExponent(u32),
}

/// Elements sharing the permutation of their image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub sigma: Permutation,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAnalysis {
    pub mode: GroupMode,
    pub target_dim: usize,
    /// Elements whose image is diagonal; the abelian torsion-free normal subgroup.
    pub diagonal_indices: Vec<usize>,
    /// Cosets of the diagonal subgroup, in order of first appearance.
    pub cosets: Vec<Coset>,
    pub index: usize,
    pub n_factorial_bound: u128,
    pub bound_ok: bool,
    pub diagonal_abelian_ok: bool,
    pub diagonal_torsion_free_ok: bool,
    pub torsion_check: TorsionCheck,
}

impl GroupAnalysis {
    pub fn all_ok(&self) -> bool {
        self.bound_ok && self.diagonal_abelian_ok && self.diagonal_torsion_free_ok
    }
}

/// Partitions the source elements by the permutation of their image and
/// checks the diagonal subgroup.
pub fn analyze(r: &Representation) -> GroupAnalysis {
    let diagonal_indices: Vec<usize> = r
        .images
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_diagonal())
        .map(|(i, _)| i)
        .collect();

    let mut cosets: Vec<Coset> = Vec::new();
    let mut by_sigma: HashMap<&Permutation, usize> = HashMap::new();
    for (i, p) in r.images.iter().enumerate() {
        match by_sigma.get(p.sigma()) {
            Some(&c) => cosets[c].members.push(i),
            None => {
                by_sigma.insert(p.sigma(), cosets.len());
                cosets.push(Coset {
                    sigma: p.sigma().clone(),
                    members: vec![i],
                });
            }
        }
    }

    let diagonal_abelian_ok = diagonal_indices.iter().all(|&a| {
        diagonal_indices.iter().all(|&b| {
            let (x, y) = (&r.images[a], &r.images[b]);
            x.otimes(y).expect("same degree") == y.otimes(x).expect("same degree")
        })
    });

    let neutral = r.source.neutral_index();
    let (diagonal_torsion_free_ok, torsion_check) = match r.source.mode() {
        GroupMode::Verified => (diagonal_indices == [neutral], TorsionCheck::Exact),
        GroupMode::Assumed => (
            diagonal_indices
                .iter()
                .filter(|&&i| i != neutral)
                .all(|&i| r.images[i].order_up_to(TORSION_EXPONENT_CAP).is_none()),
            TorsionCheck::UpToExponent(TORSION_EXPONENT_CAP),
        ),
    };

    let index = cosets.len();
    let n_factorial_bound = factorial(r.target_dim);
    GroupAnalysis {
        mode: r.source.mode(),
        target_dim: r.target_dim,
        diagonal_indices,
        cosets,
        index,
        n_factorial_bound,
        bound_ok: (index as u128) <= n_factorial_bound,
        diagonal_abelian_ok,
        diagonal_torsion_free_ok,
        torsion_check,
    }
}
