//! Structure constants and the BiHom-Lie 4-tuple.

mod axioms;

pub use axioms::{
    check_all, check_bihom_jacobi, check_bihom_skew, check_commuting, check_map_multiplicative,
    check_multiplicative, is_abelian, is_lie_algebra, is_regular, AxiomReport, Check, Witness,
};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{invert, zero_vec, LinalgError, MatrixQ, Rational, VectorQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("change of basis is singular")]
    SingularChangeOfBasis,
}

impl From<LinalgError> for AlgebraError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::DimensionMismatch { expected, found } => {
                AlgebraError::DimensionMismatch { expected, found }
            }
            LinalgError::NotSquare { rows, cols } => AlgebraError::DimensionMismatch {
                expected: rows,
                found: cols,
            },
            LinalgError::SingularMatrix { .. } => AlgebraError::SingularChangeOfBasis,
        }
    }
}

fn expect_len(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch { expected, found })
    }
}

/// `c[i][j][k]` is the `e_k`-coefficient of `[e_i, e_j]`.
///
/// No symmetry is imposed: BiHom skew-symmetry is a twisted relation, so
/// `[e_i, e_i]` may well be nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureTensor {
    dim: usize,
    c: Vec<Rational>,
}

impl StructureTensor {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            c: zero_vec(dim * dim * dim),
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        Self { dim, c }
    }

    /// From a nested grid `products[i][j] = [e_i, e_j]`.
    pub fn from_products(products: Vec<Vec<Vec<Rational>>>) -> Result<Self, AlgebraError> {
        let dim = products.len();
        let mut c = Vec::with_capacity(dim * dim * dim);
        for row in products {
            expect_len(dim, row.len())?;
            for v in row {
                expect_len(dim, v.len())?;
                c.extend(v);
            }
        }
        Ok(Self { dim, c })
    }

    /// Sets `[e_i, e_j]` (0-based) to `v`.
    pub fn set_product(&mut self, i: usize, j: usize, v: &[Rational]) {
        assert_eq!(v.len(), self.dim);
        let at = (i * self.dim + j) * self.dim;
        self.c[at..at + self.dim].clone_from_slice(v);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let at = (i * self.dim + j) * self.dim + k;
        self.c[at] = v;
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        let at = (i * self.dim + j) * self.dim;
        &self.c[at..at + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Bilinear extension of the basis products.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<VectorQ, AlgebraError> {
        expect_len(self.dim, x.len())?;
        expect_len(self.dim, y.len())?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> VectorQ {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`.
    pub fn left_mul(&self, x: &[Rational]) -> MatrixQ {
        let n = self.dim;
        let mut m = MatrixQ::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        let v = m.get(k, j) + xi * c;
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of `x -> [x, y]`.
    pub fn right_mul(&self, y: &[Rational]) -> MatrixQ {
        let n = self.dim;
        let mut m = MatrixQ::zeros(n, n);
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for i in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        let v = m.get(k, i) + yj * c;
                        m.set(k, i, v);
                    }
                }
            }
        }
        m
    }

    /// `ad(e_i)`: the matrix whose column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> MatrixQ {
        MatrixQ::from_fn(self.dim, self.dim, |k, j| self.get(i, j, k).clone())
    }

    /// Right multiplication by `e_j`: column `i` is `[e_i, e_j]`.
    pub fn right_ad(&self, j: usize) -> MatrixQ {
        MatrixQ::from_fn(self.dim, self.dim, |k, i| self.get(i, j, k).clone())
    }

    /// `(x, y) -> [left x, right y]` in the same basis.
    pub fn twisted(&self, left: &MatrixQ, right: &MatrixQ) -> StructureTensor {
        let n = self.dim;
        let lefts: Vec<VectorQ> = (0..n).map(|i| left.column(i)).collect();
        let rights: Vec<VectorQ> = (0..n).map(|j| right.column(j)).collect();
        let mut out = StructureTensor::zeros(n);
        for (i, l) in lefts.iter().enumerate() {
            for (j, r) in rights.iter().enumerate() {
                out.set_product(i, j, &self.bracket_unchecked(l, r));
            }
        }
        out
    }

    /// The same bracket written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &MatrixQ) -> Result<StructureTensor, AlgebraError> {
        expect_len(self.dim, p.rows())?;
        expect_len(self.dim, p.cols())?;
        let p_inv = invert(p)?;
        let n = self.dim;
        let cols: Vec<VectorQ> = (0..n).map(|j| p.column(j)).collect();
        let mut out = StructureTensor::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket_unchecked(&cols[a], &cols[b]);
                out.set_product(a, b, &p_inv.apply(&v));
            }
        }
        Ok(out)
    }

    /// Block direct sum: products between different summands vanish.
    pub fn direct_sum(parts: &[&StructureTensor]) -> StructureTensor {
        let n: usize = parts.iter().map(|t| t.dim).sum();
        let mut out = StructureTensor::zeros(n);
        let mut off = 0;
        for t in parts {
            for i in 0..t.dim {
                for j in 0..t.dim {
                    for k in 0..t.dim {
                        out.set(off + i, off + j, off + k, t.get(i, j, k).clone());
                    }
                }
            }
            off += t.dim;
        }
        out
    }
}

/// A BiHom-Lie candidate `(L, [., .], alpha, beta)` in a fixed basis.
///
/// Construction only checks shapes. Whether the axioms hold is a question for
/// [`check_all`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiHomAlgebra {
    tensor: StructureTensor,
    alpha: MatrixQ,
    beta: MatrixQ,
    basis_names: Vec<String>,
}

impl BiHomAlgebra {
    pub fn new(tensor: StructureTensor, alpha: MatrixQ, beta: MatrixQ) -> Result<Self, AlgebraError> {
        let n = tensor.dim();
        for m in [&alpha, &beta] {
            expect_len(n, m.rows())?;
            expect_len(n, m.cols())?;
        }
        let basis_names = (1..=n).map(|i| format!("e{i}")).collect();
        Ok(Self {
            tensor,
            alpha,
            beta,
            basis_names,
        })
    }

    /// An ordinary Lie algebra viewed with identity structure maps.
    pub fn from_lie(tensor: StructureTensor) -> Self {
        let n = tensor.dim();
        Self::new(tensor, MatrixQ::identity(n), MatrixQ::identity(n)).expect("identity maps fit")
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        expect_len(self.dim(), names.len())?;
        self.basis_names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn alpha(&self) -> &MatrixQ {
        &self.alpha
    }

    pub fn beta(&self) -> &MatrixQ {
        &self.beta
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<VectorQ, AlgebraError> {
        self.tensor.bracket(x, y)
    }

    /// Rewrites the whole 4-tuple in the basis given by the columns of `p`:
    /// maps become `p^-1 m p`, the bracket is transported accordingly.
    pub fn conjugate(&self, p: &MatrixQ) -> Result<BiHomAlgebra, AlgebraError> {
        let tensor = self.tensor.change_basis(p)?;
        let p_inv = invert(p)?;
        let alpha = p_inv.matmul(&self.alpha).matmul(p);
        let beta = p_inv.matmul(&self.beta).matmul(p);
        Ok(BiHomAlgebra {
            tensor,
            alpha,
            beta,
            basis_names: self.basis_names.clone(),
        })
    }

    /// Tensor and both maps agree; basis names are ignored.
    pub fn same_structure(&self, other: &BiHomAlgebra) -> bool {
        self.tensor == other.tensor && self.alpha == other.alpha && self.beta == other.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, unit_vec};
    use alloc::vec;

    fn sl2() -> StructureTensor {
        let mut t = StructureTensor::zeros(3);
        let v = |a: i64, b: i64, c: i64| vec![rat(a), rat(b), rat(c)];
        t.set_product(0, 1, &v(0, 2, 0));
        t.set_product(1, 0, &v(0, -2, 0));
        t.set_product(0, 2, &v(0, 0, -2));
        t.set_product(2, 0, &v(0, 0, 2));
        t.set_product(1, 2, &v(1, 0, 0));
        t.set_product(2, 1, &v(-1, 0, 0));
        t
    }

    #[test]
    fn bracket_e_f_is_h() {
        let t = sl2();
        assert_eq!(t.bracket(&unit_vec(3, 1), &unit_vec(3, 2)).unwrap(), unit_vec(3, 0));
    }

    #[test]
    fn bracket_with_zero_vanishes() {
        let t = sl2();
        let y = vec![rat(3), rat(-1), rat(5)];
        assert_eq!(t.bracket(&zero_vec(3), &y).unwrap(), zero_vec(3));
    }

    #[test]
    fn bracket_rejects_short_vectors() {
        let t = sl2();
        assert_eq!(
            t.bracket(&[rat(1)], &unit_vec(3, 0)),
            Err(AlgebraError::DimensionMismatch { expected: 3, found: 1 })
        );
    }

    #[test]
    fn ad_h_is_diagonal() {
        assert_eq!(sl2().ad(0), MatrixQ::diag(&[rat(0), rat(2), rat(-2)]));
        assert_eq!(sl2().left_mul(&unit_vec(3, 0)), sl2().ad(0));
        assert_eq!(sl2().right_mul(&unit_vec(3, 0)), sl2().right_ad(0));
    }

    #[test]
    fn change_basis_by_identity_is_noop() {
        let t = sl2();
        assert_eq!(t.change_basis(&MatrixQ::identity(3)).unwrap(), t);
        assert_eq!(
            t.change_basis(&MatrixQ::zeros(3, 3)),
            Err(AlgebraError::SingularChangeOfBasis)
        );
    }

    #[test]
    fn from_products_checks_shape() {
        let bad = vec![vec![vec![rat(0)]; 2], vec![vec![rat(0)]; 1]];
        assert!(StructureTensor::from_products(bad).is_err());
    }
}
