//! Exact verification of the BiHom-Lie axioms on basis tuples.
//!
//! Every identity is multilinear, so checking basis tuples is complete.

use alloc::vec::Vec;
use core::fmt;

use super::{BiHomAlgebra, StructureTensor};
use crate::exactlin::{invert, is_zero_vec, zero_vec, MatrixQ, Rational, VectorQ};

/// A basis tuple where an identity fails, with both sides in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// 0-based basis indices.
    pub indices: Vec<usize>,
    pub lhs: VectorQ,
    pub rhs: VectorQ,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<usize> = self.indices.iter().map(|i| i + 1).collect();
        write!(f, "at basis indices {idx:?}: lhs = [")?;
        write_vec(f, &self.lhs)?;
        f.write_str("], rhs = [")?;
        write_vec(f, &self.rhs)?;
        f.write_str("]")
    }
}

fn write_vec(f: &mut fmt::Formatter<'_>, v: &[Rational]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Witness),
}

impl Check {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Check::Pass => None,
            Check::Fail(w) => Some(w),
        }
    }

    fn and_then(self, f: impl FnOnce() -> Check) -> Check {
        match self {
            Check::Pass => f(),
            fail => fail,
        }
    }
}

fn compare(indices: &[usize], lhs: VectorQ, rhs: VectorQ) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        indices: indices.to_vec(),
        lhs,
        rhs,
    })
}

/// Outcome of all four axiom families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub commuting: Check,
    pub multiplicative_alpha: Check,
    pub multiplicative_beta: Check,
    pub skew: Check,
    pub jacobi: Check,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries().iter().all(|(_, c)| c.is_pass())
    }

    /// `(name, check)` pairs in a fixed order.
    pub fn entries(&self) -> [(&'static str, &Check); 5] {
        [
            ("commuting", &self.commuting),
            ("multiplicative_alpha", &self.multiplicative_alpha),
            ("multiplicative_beta", &self.multiplicative_beta),
            ("skew", &self.skew),
            ("jacobi", &self.jacobi),
        ]
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Witness)> {
        self.entries()
            .into_iter()
            .find_map(|(name, c)| c.witness().map(|w| (name, w)))
    }
}

/// `alpha beta = beta alpha`, compared column by column.
pub fn check_commuting(a: &BiHomAlgebra) -> Check {
    let ab = a.alpha().matmul(a.beta());
    let ba = a.beta().matmul(a.alpha());
    (0..a.dim())
        .find_map(|j| compare(&[j], ab.column(j), ba.column(j)))
        .map_or(Check::Pass, Check::Fail)
}

/// `map([e_i, e_j]) = [map e_i, map e_j]` for all basis pairs.
pub fn check_map_multiplicative(t: &StructureTensor, map: &MatrixQ) -> Check {
    let n = t.dim();
    let images: Vec<VectorQ> = (0..n).map(|i| map.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = map.apply(t.product(i, j));
            let rhs = t.bracket_unchecked(&images[i], &images[j]);
            if let Some(w) = compare(&[i, j], lhs, rhs) {
                return Check::Fail(w);
            }
        }
    }
    Check::Pass
}

/// Multiplicativity of `alpha`, then of `beta`.
pub fn check_multiplicative(a: &BiHomAlgebra) -> Check {
    check_map_multiplicative(a.tensor(), a.alpha()).and_then(|| check_map_multiplicative(a.tensor(), a.beta()))
}

/// `[beta e_i, alpha e_j] = -[beta e_j, alpha e_i]` for `i <= j`; the relation
/// for `(j, i)` is the same equation.
pub fn check_bihom_skew(a: &BiHomAlgebra) -> Check {
    let n = a.dim();
    let t = a.tensor();
    let betas: Vec<VectorQ> = (0..n).map(|i| a.beta().column(i)).collect();
    let alphas: Vec<VectorQ> = (0..n).map(|i| a.alpha().column(i)).collect();
    for i in 0..n {
        for j in i..n {
            let lhs = t.bracket_unchecked(&betas[i], &alphas[j]);
            let rhs: VectorQ = t
                .bracket_unchecked(&betas[j], &alphas[i])
                .into_iter()
                .map(|x| -x)
                .collect();
            if let Some(w) = compare(&[i, j], lhs, rhs) {
                return Check::Fail(w);
            }
        }
    }
    Check::Pass
}

/// The cyclic BiHom-Jacobi sum
/// `[b^2 x, [b y, a z]] + [b^2 y, [b z, a x]] + [b^2 z, [b x, a y]] = 0`
/// on every ordered basis triple.
pub fn check_bihom_jacobi(a: &BiHomAlgebra) -> Check {
    let n = a.dim();
    let t = a.tensor();
    let beta2 = a.beta().matmul(a.beta());
    let outer: Vec<MatrixQ> = (0..n).map(|i| t.left_mul(&beta2.column(i))).collect();
    let betas: Vec<VectorQ> = (0..n).map(|i| a.beta().column(i)).collect();
    let alphas: Vec<VectorQ> = (0..n).map(|i| a.alpha().column(i)).collect();
    let inner: Vec<Vec<VectorQ>> = (0..n)
        .map(|j| (0..n).map(|k| t.bracket_unchecked(&betas[j], &alphas[k])).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let sum = add3(
                    outer[i].apply(&inner[j][k]),
                    outer[j].apply(&inner[k][i]),
                    outer[k].apply(&inner[i][j]),
                );
                if !is_zero_vec(&sum) {
                    return Check::Fail(Witness {
                        indices: alloc::vec![i, j, k],
                        lhs: sum,
                        rhs: zero_vec(n),
                    });
                }
            }
        }
    }
    Check::Pass
}

fn add3(mut a: VectorQ, b: VectorQ, c: VectorQ) -> VectorQ {
    for ((x, y), z) in a.iter_mut().zip(b).zip(c) {
        *x += y + z;
    }
    a
}

pub fn check_all(a: &BiHomAlgebra) -> AxiomReport {
    AxiomReport {
        commuting: check_commuting(a),
        multiplicative_alpha: check_map_multiplicative(a.tensor(), a.alpha()),
        multiplicative_beta: check_map_multiplicative(a.tensor(), a.beta()),
        skew: check_bihom_skew(a),
        jacobi: check_bihom_jacobi(a),
    }
}

/// Ordinary skew-symmetry `c[i][j] = -c[j][i]` and the classical Jacobi
/// identity on basis triples.
pub fn is_lie_algebra(t: &StructureTensor) -> Check {
    let n = t.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = t.product(i, j).to_vec();
            let rhs: VectorQ = t.product(j, i).iter().map(|x| -x).collect();
            if let Some(w) = compare(&[i, j], lhs, rhs) {
                return Check::Fail(w);
            }
        }
    }
    let ads: Vec<MatrixQ> = (0..n).map(|i| t.ad(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sum = add3(
                    ads[i].apply(t.product(j, k)),
                    ads[j].apply(t.product(k, i)),
                    ads[k].apply(t.product(i, j)),
                );
                if !is_zero_vec(&sum) {
                    return Check::Fail(Witness {
                        indices: alloc::vec![i, j, k],
                        lhs: sum,
                        rhs: zero_vec(n),
                    });
                }
            }
        }
    }
    Check::Pass
}

pub fn is_abelian(t: &StructureTensor) -> bool {
    t.is_zero()
}

/// Both structure maps are bijective.
pub fn is_regular(a: &BiHomAlgebra) -> bool {
    invert(a.alpha()).is_ok() && invert(a.beta()).is_ok()
}
