use alloc::vec::Vec;

use num_traits::Zero;

use super::{kernel, rref_with_pivots, EchelonBasis, LinalgError, MatrixQ, Rational};

/// A subspace of `Q^n`, stored through its reduced row-echelon basis.
///
/// The representative is unique, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: MatrixQ,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: MatrixQ::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: MatrixQ::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let m = MatrixQ::from_rows(ambient, vectors)?;
        Ok(Self::span_of_rows(&m))
    }

    /// Row space of `m`.
    pub fn span_of_rows(m: &MatrixQ) -> Self {
        let (red, pivots) = rref_with_pivots(m);
        let basis = MatrixQ::from_fn(pivots.len(), m.cols(), |i, j| red.get(i, j).clone());
        Self {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &MatrixQ) -> Self {
        Self::span_of_rows(&m.transpose())
    }

    pub(crate) fn from_rref_rows(ambient: usize, rows: Vec<Vec<Rational>>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("rref rows are nonzero"))
            .collect();
        let basis = MatrixQ::from_rows(ambient, rows).expect("rref rows have ambient length");
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, n: usize) -> Result<(), LinalgError> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    /// Coordinates of `v` in the canonical basis, or `None` when `v` lies
    /// outside. With a reduced basis they are simply the pivot entries of `v`.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        self.check_len(v.len())?;
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = super::zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(self.vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in rebuilt.iter_mut().zip(row) {
                *x += c * r;
            }
        }
        Ok((rebuilt.as_slice() == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient)?;
        for v in other.vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        let mut b = self.echelon();
        for v in other.vectors() {
            b.insert(v);
        }
        Ok(b.into_subspace())
    }

    /// `U ∩ W` computed as the annihilator of `ann(U) + ann(W)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        let ann = self.annihilator().sum(&other.annihilator())?;
        Ok(ann.annihilator())
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient)?;
        Ok(self == other)
    }

    /// `{x : <x, u> = 0 for all u in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// Image under a square map acting on columns.
    pub fn image(&self, map: &MatrixQ) -> Result<Subspace, LinalgError> {
        self.check_len(map.cols())?;
        let mut b = EchelonBasis::new(map.rows());
        for v in self.vectors() {
            b.insert(&map.apply(v));
        }
        Ok(b.into_subspace())
    }

    pub fn echelon(&self) -> EchelonBasis {
        let mut b = EchelonBasis::new(self.ambient);
        for v in self.vectors() {
            b.insert(v);
        }
        b
    }
}

impl core::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {})", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, unit_vec};
    use alloc::vec;

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::from_vectors(n, idx.iter().map(|&i| unit_vec(n, i)).collect()).unwrap()
    }

    #[test]
    fn sum_and_intersection() {
        assert_eq!(span(3, &[0]).sum(&span(3, &[1])).unwrap(), span(3, &[0, 1]));
        assert_eq!(span(3, &[0, 1]).intersect(&span(3, &[1, 2])).unwrap(), span(3, &[1]));
        assert!(span(3, &[0]).intersect(&span(3, &[2])).unwrap().is_zero());
    }

    #[test]
    fn full_space_contains_everything() {
        let v = vec![rat(3), rat(-7), rat(11)];
        assert!(Subspace::full(3).contains(&v).unwrap());
        assert!(!span(3, &[0, 1]).contains(&v).unwrap());
    }

    #[test]
    fn equality_is_canonical() {
        let a = Subspace::from_vectors(2, vec![vec![rat(2), rat(4)]]).unwrap();
        let b = Subspace::from_vectors(2, vec![vec![rat(-1), rat(-2)]]).unwrap();
        assert!(a.equal(&b).unwrap());
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let err = span(3, &[0]).sum(&span(2, &[0])).unwrap_err();
        assert_eq!(err, LinalgError::DimensionMismatch { expected: 3, found: 2 });
        assert!(span(3, &[0]).contains(&[rat(1)]).is_err());
    }

    #[test]
    fn coordinates_in_reduced_basis() {
        let s = Subspace::from_vectors(3, vec![vec![rat(1), rat(0), rat(2)], vec![rat(0), rat(1), rat(-1)]])
            .unwrap();
        let v = vec![rat(3), rat(5), rat(1)];
        assert_eq!(s.coordinates(&v).unwrap(), Some(vec![rat(3), rat(5)]));
        assert_eq!(s.coordinates(&[rat(0), rat(0), rat(1)]).unwrap(), None);
    }
}
