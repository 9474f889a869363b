//! Passing between ordinary Lie algebras with a commuting pair of automorphisms
//! and regular BiHom-Lie algebras.
//!
//! Forward: `[x, y] = [alpha x, beta y]'`. Backward (the induced Lie algebra):
//! `[x, y]' = [alpha^-1 x, beta^-1 y]`.

use alloc::boxed::Box;
use core::fmt;

use thiserror::Error;

use crate::algebra::{
    check_all, check_map_multiplicative, is_lie_algebra, AxiomReport, BiHomAlgebra, Check, StructureTensor,
    Witness,
};
use crate::exactlin::{invert, MatrixQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureMap {
    Alpha,
    Beta,
}

impl fmt::Display for StructureMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureMap::Alpha => "alpha",
            StructureMap::Beta => "beta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("input bracket is not a Lie bracket {0}")]
    NotLie(Witness),
    #[error("alpha and beta do not commute (column {})", .0.indices[0] + 1)]
    NotCommuting(Witness),
    #[error("{map} does not preserve the Lie bracket {witness}")]
    NotAutomorphism { map: StructureMap, witness: Witness },
    #[error("{0} is singular")]
    Singular(StructureMap),
    #[error("algebra is not regular: {0} is not invertible")]
    NotRegular(StructureMap),
    #[error("algebra violates the BiHom-Lie axioms ({} fails)", .0.first_failure().map_or("?", |f| f.0))]
    AxiomViolation(Box<AxiomReport>),
}

/// An ordinary Lie bracket with a pair of maps intended as commuting
/// automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistInput {
    pub lie: StructureTensor,
    pub alpha: MatrixQ,
    pub beta: MatrixQ,
}

impl TwistInput {
    pub fn new(lie: StructureTensor, alpha: MatrixQ, beta: MatrixQ) -> Self {
        Self { lie, alpha, beta }
    }

    /// Checks every hypothesis of the twist, in a fixed order.
    ///
    /// Both maps must preserve the bracket. Requiring it of `beta` alone is not
    /// enough: the twisted algebra is multiplicative for `alpha` only when
    /// `alpha` is an automorphism too.
    pub fn validate(&self) -> Result<(), TwistError> {
        let n = self.lie.dim();
        for m in [&self.alpha, &self.beta] {
            for found in [m.rows(), m.cols()] {
                if found != n {
                    return Err(TwistError::DimensionMismatch { expected: n, found });
                }
            }
        }
        if let Check::Fail(w) = is_lie_algebra(&self.lie) {
            return Err(TwistError::NotLie(w));
        }
        for (which, m) in [(StructureMap::Alpha, &self.alpha), (StructureMap::Beta, &self.beta)] {
            if invert(m).is_err() {
                return Err(TwistError::Singular(which));
            }
        }
        let probe = BiHomAlgebra::new(self.lie.clone(), self.alpha.clone(), self.beta.clone())
            .map_err(|_| TwistError::DimensionMismatch { expected: n, found: 0 })?;
        if let Check::Fail(w) = crate::algebra::check_commuting(&probe) {
            return Err(TwistError::NotCommuting(w));
        }
        for (map, m) in [(StructureMap::Alpha, &self.alpha), (StructureMap::Beta, &self.beta)] {
            if let Check::Fail(witness) = check_map_multiplicative(&self.lie, m) {
                return Err(TwistError::NotAutomorphism { map, witness });
            }
        }
        Ok(())
    }
}

/// `[e_i, e_j] = [alpha e_i, beta e_j]'` after validating the input.
pub fn yau_twist(input: &TwistInput) -> Result<BiHomAlgebra, TwistError> {
    input.validate()?;
    let tensor = input.lie.twisted(&input.alpha, &input.beta);
    Ok(BiHomAlgebra::new(tensor, input.alpha.clone(), input.beta.clone()).expect("validated shapes"))
}

/// The induced Lie algebra `[x, y]' = [alpha^-1 x, beta^-1 y]`, returned with
/// the original maps (which are automorphisms of it).
pub fn induce_lie(a: &BiHomAlgebra) -> Result<TwistInput, TwistError> {
    let alpha_inv = invert(a.alpha()).map_err(|_| TwistError::NotRegular(StructureMap::Alpha))?;
    let beta_inv = invert(a.beta()).map_err(|_| TwistError::NotRegular(StructureMap::Beta))?;
    let report = check_all(a);
    if !report.all_pass() {
        return Err(TwistError::AxiomViolation(Box::new(report)));
    }
    Ok(TwistInput {
        lie: a.tensor().twisted(&alpha_inv, &beta_inv),
        alpha: a.alpha().clone(),
        beta: a.beta().clone(),
    })
}

/// Twist then induce; `true` when the Lie tensor comes back entry for entry.
pub fn roundtrip_check(input: &TwistInput) -> Result<bool, TwistError> {
    let twisted = yau_twist(input)?;
    let back = induce_lie(&twisted)?;
    Ok(back == *input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_l1, make_sl2};
    use crate::exactlin::{frac, rat};

    #[test]
    fn identity_twist_is_noop() {
        let input = TwistInput::new(make_sl2(), MatrixQ::identity(3), MatrixQ::identity(3));
        let t = yau_twist(&input).unwrap();
        assert_eq!(t.tensor(), &make_sl2());
        assert!(roundtrip_check(&input).unwrap());
    }

    #[test]
    fn induce_l1_gives_sl2() {
        let l1 = make_l1(rat(2), rat(3)).unwrap();
        let induced = induce_lie(&l1).unwrap();
        assert_eq!(induced.lie, make_sl2());
    }

    #[test]
    fn singular_alpha_is_not_regular() {
        let l1 = make_l1(rat(2), rat(3)).unwrap();
        let bad = BiHomAlgebra::new(l1.tensor().clone(), MatrixQ::diag(&[rat(1), rat(0), rat(1)]), l1.beta().clone())
            .unwrap();
        assert_eq!(induce_lie(&bad), Err(TwistError::NotRegular(StructureMap::Alpha)));
    }

    #[test]
    fn validation_names_the_failing_hypothesis() {
        let d = |a: Rational| MatrixQ::diag(&[rat(1), a.clone(), a.recip()]);
        use crate::exactlin::Rational;
        // not an automorphism: diag(1, 2, 3) breaks [e, f] = h
        let input = TwistInput::new(make_sl2(), MatrixQ::diag(&[rat(1), rat(2), rat(3)]), MatrixQ::identity(3));
        assert!(matches!(
            yau_twist(&input),
            Err(TwistError::NotAutomorphism { map: StructureMap::Alpha, .. })
        ));
        let input = TwistInput::new(make_sl2(), d(rat(2)), MatrixQ::diag(&[rat(1), rat(0), rat(1)]));
        assert_eq!(yau_twist(&input), Err(TwistError::Singular(StructureMap::Beta)));
        // exp(ad e) does not commute with a nontrivial torus element
        let unip = MatrixQ::from_i64(&[&[1, 0, 1], &[-2, 1, -1], &[0, 0, 1]]);
        let input = TwistInput::new(make_sl2(), d(frac(1, 3)), unip);
        assert!(matches!(yau_twist(&input), Err(TwistError::NotCommuting(_))));
        let mut broken = make_sl2();
        broken.set(1, 2, 0, rat(-1));
        let input = TwistInput::new(broken, MatrixQ::identity(3), MatrixQ::identity(3));
        assert!(matches!(yau_twist(&input), Err(TwistError::NotLie(_))));
    }
}
