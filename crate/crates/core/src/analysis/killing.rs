use alloc::vec::Vec;

use super::AnalysisError;
use crate::algebra::{is_lie_algebra, Check, StructureTensor};
use crate::exactlin::{EchelonBasis, MatrixQ, Rational, Subspace};

fn require_lie(t: &StructureTensor) -> Result<(), AnalysisError> {
    match is_lie_algebra(t) {
        Check::Pass => Ok(()),
        Check::Fail(w) => Err(AnalysisError::NotLie(w)),
    }
}

/// `K[i][j] = trace(ad e_i . ad e_j)`.
pub fn killing_form(t: &StructureTensor) -> Result<MatrixQ, AnalysisError> {
    require_lie(t)?;
    Ok(killing_unchecked(t))
}

pub(crate) fn killing_unchecked(t: &StructureTensor) -> MatrixQ {
    let n = t.dim();
    let ads: Vec<MatrixQ> = (0..n).map(|i| t.ad(i)).collect();
    let mut k = MatrixQ::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = ads[i].matmul(&ads[j]).trace();
            k.set(j, i, v.clone());
            k.set(i, j, v);
        }
    }
    k
}

pub fn killing_determinant(t: &StructureTensor) -> Result<Rational, AnalysisError> {
    Ok(killing_form(t)?.det()?)
}

/// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
pub fn is_semisimple_lie(t: &StructureTensor) -> Result<bool, AnalysisError> {
    Ok(!num_traits::Zero::is_zero(&killing_determinant(t)?))
}

/// `L, [L, L], [[L, L], [L, L]], ...` until the terms stop changing. The
/// algebra is solvable iff the last term is zero.
pub fn derived_series(t: &StructureTensor) -> Vec<Subspace> {
    let n = t.dim();
    let mut series = alloc::vec![Subspace::full(n)];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let gens: Vec<&[Rational]> = last.vectors().collect();
        let mut next = EchelonBasis::new(n);
        for (i, x) in gens.iter().enumerate() {
            for y in &gens[i + 1..] {
                next.insert(&t.bracket_unchecked(x, y));
            }
        }
        let next = next.into_subspace();
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}
