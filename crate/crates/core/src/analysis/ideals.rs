use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::AnalysisError;
use crate::algebra::{check_all, is_abelian, BiHomAlgebra};
use crate::exactlin::{EchelonBasis, MatrixQ, Rational, Subspace, VectorQ};

/// Smallest subspace containing `seeds` and stable under every operator.
///
/// Classic spinning: apply each operator to each newly found basis vector
/// until nothing new appears.
pub fn spin(ambient: usize, seeds: &[VectorQ], ops: &[MatrixQ]) -> Subspace {
    let mut basis = EchelonBasis::new(ambient);
    let mut queue: VecDeque<VectorQ> = VecDeque::new();
    for s in seeds {
        if basis.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if basis.dim() == ambient {
            break;
        }
        for op in ops {
            let w = op.apply(&v);
            if basis.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    basis.into_subspace()
}

/// Left and right multiplications by every basis vector, then `alpha`, `beta`.
/// A subspace is an ideal exactly when it is stable under all of them.
pub fn bihom_operators(a: &BiHomAlgebra) -> Vec<MatrixQ> {
    let t = a.tensor();
    let n = a.dim();
    let mut ops: Vec<MatrixQ> = (0..n).map(|i| t.ad(i)).collect();
    ops.extend((0..n).map(|j| t.right_ad(j)));
    ops.push(a.alpha().clone());
    ops.push(a.beta().clone());
    ops
}

/// The ideal generated by `v`.
pub fn ideal_closure(a: &BiHomAlgebra, v: &[Rational]) -> Result<Subspace, AnalysisError> {
    if v.len() != a.dim() {
        return Err(AnalysisError::DimensionMismatch {
            expected: a.dim(),
            found: v.len(),
        });
    }
    Ok(spin(a.dim(), &[v.to_vec()], &bihom_operators(a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityFailure {
    Alpha,
    Beta,
    /// `[s_i, s_j]` left the subspace.
    Subalgebra { other: usize },
    /// `[s_i, e_j]` left the subspace.
    LeftBracket { basis: usize },
    /// `[e_j, s_i]` left the subspace.
    RightBracket { basis: usize },
}

/// First failure found: the generator (a basis vector of the subspace, by
/// index), what was applied to it, and the offending image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness {
    pub generator: usize,
    pub failure: StabilityFailure,
    pub image: VectorQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub subspace: Subspace,
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub failing_witness: Option<IdealWitness>,
}

pub fn is_ideal(a: &BiHomAlgebra, s: &Subspace) -> Result<IdealReport, AnalysisError> {
    let n = a.dim();
    if s.ambient_dim() != n {
        return Err(AnalysisError::DimensionMismatch {
            expected: n,
            found: s.ambient_dim(),
        });
    }
    let t = a.tensor();
    let gens: Vec<&[Rational]> = s.vectors().collect();
    let outside = |v: &VectorQ| !s.contains(v).expect("lengths agree");
    let mut witness = None;

    'sub: for (g, v) in gens.iter().enumerate() {
        for (failure, m) in [(StabilityFailure::Alpha, a.alpha()), (StabilityFailure::Beta, a.beta())] {
            let image = m.apply(v);
            if outside(&image) {
                witness = Some(IdealWitness { generator: g, failure, image });
                break 'sub;
            }
        }
        for (other, w) in gens.iter().enumerate() {
            let image = t.bracket_unchecked(v, w);
            if outside(&image) {
                witness = Some(IdealWitness {
                    generator: g,
                    failure: StabilityFailure::Subalgebra { other },
                    image,
                });
                break 'sub;
            }
        }
    }
    let is_subalgebra = witness.is_none();
    if is_subalgebra {
        'ideal: for (g, v) in gens.iter().enumerate() {
            for j in 0..n {
                let left = t.right_ad(j).apply(v);
                if outside(&left) {
                    witness = Some(IdealWitness {
                        generator: g,
                        failure: StabilityFailure::LeftBracket { basis: j },
                        image: left,
                    });
                    break 'ideal;
                }
                let right = t.ad(j).apply(v);
                if outside(&right) {
                    witness = Some(IdealWitness {
                        generator: g,
                        failure: StabilityFailure::RightBracket { basis: j },
                        image: right,
                    });
                    break 'ideal;
                }
            }
        }
    }
    Ok(IdealReport {
        subspace: s.clone(),
        is_subalgebra,
        is_ideal: witness.is_none(),
        failing_witness: witness,
    })
}

/// Dimension of the associative algebra generated by `gens` and the identity.
pub fn enveloping_dim(gens: &[MatrixQ]) -> Result<usize, AnalysisError> {
    let n = gens.first().map_or(0, MatrixQ::rows);
    for g in gens {
        for found in [g.rows(), g.cols()] {
            if found != n {
                return Err(AnalysisError::DimensionMismatch { expected: n, found });
            }
        }
    }
    let full = n * n;
    let mut span = EchelonBasis::new(full);
    let id = MatrixQ::identity(n);
    span.insert(id.as_slice());
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        if span.dim() == full {
            break;
        }
        for g in gens {
            let p = g.matmul(&m);
            if span.insert(p.as_slice()) {
                queue.push_back(p);
            }
        }
    }
    Ok(span.dim())
}

/// Simplicity verdict with the numbers behind it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simplicity {
    pub abelian: bool,
    pub enveloping_dim: usize,
    pub simple: bool,
}

/// Requires the axioms to hold. An ideal is a common invariant subspace of
/// left/right multiplications, `alpha` and `beta`; by Burnside's theorem there
/// is no proper one over an algebraically closed field exactly when these
/// operators generate all `n x n` matrices. The rational span has the same
/// dimension as its complex span.
pub fn simplicity(a: &BiHomAlgebra) -> Result<Simplicity, AnalysisError> {
    let report = check_all(a);
    if !report.all_pass() {
        return Err(AnalysisError::AxiomViolation(Box::new(report)));
    }
    let n = a.dim();
    let abelian = is_abelian(a.tensor());
    let dim = enveloping_dim(&bihom_operators(a))?;
    Ok(Simplicity {
        abelian,
        enveloping_dim: dim,
        simple: !abelian && dim == n * n,
    })
}

pub fn is_simple(a: &BiHomAlgebra) -> Result<bool, AnalysisError> {
    Ok(simplicity(a)?.simple)
}
