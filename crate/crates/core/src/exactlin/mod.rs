//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Pivot selection is always the first nonzero entry by index, so every result
//! (echelon forms, kernel bases, eigenvectors) is reproducible bit for bit.

mod echelon;
mod matrix;
mod poly;
mod rational;
mod subspace;

pub use echelon::{generalized_eigenspace, invert, kernel, rank, rref, rref_with_pivots, solve, EchelonBasis};
pub use matrix::MatrixQ;
pub use poly::{char_poly, rational_roots, PolyQ, RationalRoots};
pub use rational::{frac, height, parse_rational, rat, ParseRationalError, Rational};
pub use subspace::Subspace;

use thiserror::Error;

/// Failures of the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular (rank {rank} < {n})")]
    SingularMatrix { rank: usize, n: usize },
}

/// A coordinate vector.
pub type VectorQ = alloc::vec::Vec<Rational>;

pub fn zero_vec(n: usize) -> VectorQ {
    alloc::vec![Rational::default(); n]
}

pub fn unit_vec(n: usize, i: usize) -> VectorQ {
    let mut v = zero_vec(n);
    v[i] = rat(1);
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}
