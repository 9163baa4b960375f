//! Exact max-plus matrix algebra and faithful monomial representations of
//! groups of tropical matrices.
//!
//! Entries live in `R ∪ {-inf}` with `a ⊕ b = max(a, b)` and `a ⊗ b = a + b`,
//! stored as exact rationals. Given a finite group (or a finite sample of
//! one) of `n x n` tropical matrices, [`monomialize`] builds an injective
//! homomorphism into monomial matrices of dimension at most `n`, and
//! [`analyze`] splits the group into cosets of its diagonal part. Monomial
//! matrices are identified with the wreath product `R ≀ S_n` in [`wreath`].
//!
//! ```
//! use tropgroup::{analyze, monomialize, verify_group, TropMatrix};
//!
//! let swap: TropMatrix = "-inf 1; -1 -inf".parse().unwrap();
//! let g = verify_group(vec![TropMatrix::neutral(2), swap]).unwrap();
//! let rep = monomialize(&g).unwrap();
//! let analysis = analyze(&rep);
//! assert_eq!(analysis.index, 2);
//! assert!(analysis.bound_ok);
//! ```

pub mod cli;
pub mod group;
pub mod matrix;
pub mod monomial;
pub mod perm;
pub mod rank;
pub mod rep;
pub mod scalar;
pub mod wreath;

pub use group::{
    closure, find_neutral, periodic_bound_check, verify_group, GroupError, GroupMode,
    MatrixGroup, PeriodicReport,
};
pub use matrix::{MatrixError, TropMatrix};
pub use monomial::{MonomialMatrix, NotMonomial};
pub use perm::Permutation;
pub use rank::{full_row_rank, is_combination, principal_solution, CombinationWitness, RowRank};
pub use rep::{
    analyze, extract_monomial_factor, monomialize, reduce_once, FactorError, GroupAnalysis,
    ReduceError, RepError, ReductionStep, Representation,
};
pub use scalar::Scalar;
pub use wreath::{realize, WreathElement, WreathError};
