//! Exact structure-constant toolkit for finite-dimensional BiHom-Lie algebras.
//!
//! A BiHom-Lie algebra is a 4-tuple `(L, [., .], alpha, beta)` where `alpha` and
//! `beta` are commuting linear maps that preserve the bracket, and the bracket
//! satisfies the twisted skew-symmetry `[beta x, alpha y] = -[beta y, alpha x]`
//! together with the BiHom-Jacobi identity. Everything here works over the
//! rationals with arbitrary precision, so every verdict is exact.
//!
//! Matrices act on coordinate columns: `alpha(e_j) = sum_i alpha[i][j] e_i`.
//!
//! The crate is `no_std` (it needs `alloc`); file formats and the command line
//! live in the `bihom` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod analysis;
pub mod catalog;
pub mod classify;
pub mod exactlin;
pub mod twist;

pub use algebra::{
    check_all, check_bihom_jacobi, check_bihom_skew, check_commuting, check_multiplicative,
    is_abelian, is_lie_algebra, is_regular, AlgebraError, AxiomReport, BiHomAlgebra, Check,
    StructureTensor, Witness,
};
pub use exactlin::{MatrixQ, PolyQ, Rational, Subspace};
