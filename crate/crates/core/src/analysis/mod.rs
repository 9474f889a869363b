//! Ideals, simplicity, semisimplicity of the induced Lie algebra, its
//! decomposition into simple ideals, and type candidates by dimension.

mod decompose;
mod ideals;
mod killing;
mod types;

pub use decompose::{
    automorphism_permutation, decompose_bihom, decompose_semisimple, Decomposition, Permutation,
    M_EQUALS_TWO_WARNING,
};
pub use ideals::{
    bihom_operators, enveloping_dim, ideal_closure, is_ideal, is_simple, simplicity, spin, IdealReport,
    IdealWitness, Simplicity, StabilityFailure,
};
pub use killing::{derived_series, killing_form, killing_determinant, is_semisimple_lie};
pub use types::{type_candidates, Series, TypeLabel};

use alloc::boxed::Box;

use thiserror::Error;

use crate::algebra::{AxiomReport, Witness};
use crate::exactlin::{LinalgError, PolyQ};
use crate::twist::{StructureMap, TwistError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra violates the BiHom-Lie axioms ({} fails)", .0.first_failure().map_or("?", |f| f.0))]
    AxiomViolation(Box<AxiomReport>),
    #[error("bracket is not a Lie bracket {0}")]
    NotLie(Witness),
    #[error("algebra is not regular: {0} is not invertible")]
    NotRegular(StructureMap),
    #[error("Lie algebra is not semisimple (Killing form is degenerate)")]
    NotSemisimple,
    #[error("ideal splitting needs an irrational eigenvalue (residual factor {residual})")]
    IrrationalSplit { residual: PolyQ },
    #[error("image of ideal {} is not among the ideals", .ideal + 1)]
    NotPermuted { ideal: usize },
}

impl From<LinalgError> for AnalysisError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::DimensionMismatch { expected, found } => Self::DimensionMismatch { expected, found },
            LinalgError::NotSquare { rows, cols } => Self::DimensionMismatch {
                expected: rows,
                found: cols,
            },
            LinalgError::SingularMatrix { .. } => Self::NotPermuted { ideal: 0 },
        }
    }
}

impl From<TwistError> for AnalysisError {
    fn from(e: TwistError) -> Self {
        match e {
            TwistError::NotRegular(m) | TwistError::Singular(m) => Self::NotRegular(m),
            TwistError::AxiomViolation(r) => Self::AxiomViolation(r),
            TwistError::NotLie(w) => Self::NotLie(w),
            TwistError::DimensionMismatch { expected, found } => Self::DimensionMismatch { expected, found },
            TwistError::NotCommuting(w) | TwistError::NotAutomorphism { witness: w, .. } => Self::NotLie(w),
        }
    }
}
