use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::Zero;

use super::killing::killing_unchecked;
use super::{is_semisimple_lie, spin, AnalysisError};
use crate::algebra::{BiHomAlgebra, StructureTensor};
use crate::exactlin::{char_poly, kernel, rational_roots, MatrixQ, PolyQ, Rational, Subspace, VectorQ};
use crate::twist::induce_lie;

/// A permutation of `0..n`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// `None` unless `images` is a bijection of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// A single cycle through every point.
    pub fn is_transitive(&self) -> bool {
        match self.0.len() {
            0 => false,
            1 => true,
            n => self.cycles().first().is_some_and(|c| c.len() == n),
        }
    }
}

/// Cycle notation, 1-based; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub const M_EQUALS_TWO_WARNING: &str =
    "m = 2: two simple ideals; reported as computed, although the general structure result excludes m = 2";

/// Simple ideals of the induced Lie algebra and how `alpha`, `beta` permute them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub ideals: Vec<Subspace>,
    pub sigma_alpha: Permutation,
    pub sigma_beta: Permutation,
    pub m: usize,
}

impl Decomposition {
    pub fn warning(&self) -> Option<&'static str> {
        (self.m == 2).then_some(M_EQUALS_TWO_WARNING)
    }
}

fn subspace_order(a: &Subspace, b: &Subspace) -> Ordering {
    a.pivots()
        .cmp(b.pivots())
        .then_with(|| a.basis().as_slice().cmp(b.basis().as_slice()))
}

/// Linear combination `sum c_r b_r` of a subspace's basis rows.
fn combine(s: &Subspace, coords: &[Rational]) -> VectorQ {
    let mut v = crate::exactlin::zero_vec(s.ambient_dim());
    for (c, row) in coords.iter().zip(s.vectors()) {
        if c.is_zero() {
            continue;
        }
        for (x, r) in v.iter_mut().zip(row) {
            *x += c * r;
        }
    }
    v
}

fn from_coordinates(s: &Subspace, coord_space: &Subspace) -> Subspace {
    let vs = coord_space.vectors().map(|c| combine(s, c)).collect();
    Subspace::from_vectors(s.ambient_dim(), vs).expect("ambient lengths agree")
}

struct Splitter<'a> {
    ads: Vec<MatrixQ>,
    killing: &'a MatrixQ,
}

impl Splitter<'_> {
    /// Killing-orthogonal complement of `inner` inside `outer`.
    fn complement(&self, outer: &Subspace, inner: &Subspace) -> Subspace {
        let basis: Vec<&[Rational]> = outer.vectors().collect();
        let rows: Vec<VectorQ> = inner
            .vectors()
            .map(|j| {
                let kj = self.killing.transpose().apply(j);
                basis
                    .iter()
                    .map(|b| kj.iter().zip(b.iter()).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect();
        let m = MatrixQ::from_rows(basis.len(), rows).expect("row lengths agree");
        from_coordinates(outer, &kernel(&m))
    }

    /// Matrices of the `ad` action restricted to `ideal`, in its basis.
    fn restricted(&self, ideal: &Subspace) -> Vec<MatrixQ> {
        let d = ideal.dim();
        self.ads
            .iter()
            .map(|ad| {
                let cols: Vec<VectorQ> = ideal
                    .vectors()
                    .map(|b| {
                        ideal
                            .coordinates(&ad.apply(b))
                            .expect("lengths agree")
                            .expect("ideal is ad-stable")
                    })
                    .collect();
                MatrixQ::from_columns(d, &cols).expect("square")
            })
            .collect()
    }

    /// Basis of `{Z : Z A = A Z for every restricted ad A}`.
    fn commutant(&self, restricted: &[MatrixQ], d: usize) -> Vec<MatrixQ> {
        // unknown z[p][s] sits at index p * d + s
        let mut rows = Vec::new();
        for a in restricted {
            for p in 0..d {
                for q in 0..d {
                    let mut row = crate::exactlin::zero_vec(d * d);
                    for s in 0..d {
                        row[p * d + s] += a.get(s, q);
                        row[s * d + q] -= a.get(p, s);
                    }
                    rows.push(row);
                }
            }
        }
        let system = MatrixQ::from_rows(d * d, rows).expect("row lengths agree");
        kernel(&system)
            .vectors()
            .map(|z| MatrixQ::from_fn(d, d, |i, j| z[i * d + j].clone()))
            .collect()
    }

    /// A proper nonzero ideal inside `ideal`, if one can be found.
    fn proper_sub_ideal(&self, ideal: &Subspace) -> Result<Option<Subspace>, AnalysisError> {
        for v in ideal.vectors() {
            let j = spin(ideal.ambient_dim(), &[v.to_vec()], &self.ads);
            if j.dim() < ideal.dim() {
                return Ok(Some(j));
            }
        }
        let d = ideal.dim();
        let restricted = self.restricted(ideal);
        let commutant = self.commutant(&restricted, d);
        if commutant.len() <= 1 {
            return Ok(None);
        }
        let mut residual: Option<PolyQ> = None;
        for z in commutant {
            let scalar = z.get(0, 0).clone();
            if z == MatrixQ::identity(d).scale(&scalar) {
                continue;
            }
            let roots = rational_roots(&char_poly(&z)?);
            if let Some((lambda, _)) = roots.roots.first() {
                let eig = kernel(&z.shift(lambda));
                return Ok(Some(from_coordinates(ideal, &eig)));
            }
            residual.get_or_insert(roots.residual);
        }
        match residual {
            Some(residual) => Err(AnalysisError::IrrationalSplit { residual }),
            None => Ok(None),
        }
    }

    fn split(&self, ideal: Subspace, out: &mut Vec<Subspace>) -> Result<(), AnalysisError> {
        match self.proper_sub_ideal(&ideal)? {
            None => out.push(ideal),
            Some(j) => {
                let rest = self.complement(&ideal, &j);
                self.split(j, out)?;
                self.split(rest, out)?;
            }
        }
        Ok(())
    }
}

/// Minimal ideals of a semisimple Lie algebra, sorted canonically.
///
/// Minimal ideals are the irreducible submodules of the adjoint action. Each
/// candidate is first split by spinning its basis vectors; failing that, by an
/// eigenspace of a non-scalar element of the commutant of the action. Only
/// rational eigenvalues are used.
pub fn decompose_semisimple(t: &StructureTensor) -> Result<Vec<Subspace>, AnalysisError> {
    if !is_semisimple_lie(t)? {
        return Err(AnalysisError::NotSemisimple);
    }
    let n = t.dim();
    let killing = killing_unchecked(t);
    let splitter = Splitter {
        ads: (0..n).map(|i| t.ad(i)).collect(),
        killing: &killing,
    };
    let mut out = Vec::new();
    splitter.split(Subspace::full(n), &mut out)?;
    out.sort_by(subspace_order);
    Ok(out)
}

/// `sigma` with `map(ideals[i]) = ideals[sigma(i)]`.
pub fn automorphism_permutation(ideals: &[Subspace], map: &MatrixQ) -> Result<Permutation, AnalysisError> {
    let mut images = Vec::with_capacity(ideals.len());
    for (i, ideal) in ideals.iter().enumerate() {
        let image = ideal.image(map)?;
        let j = ideals
            .iter()
            .position(|other| *other == image)
            .ok_or(AnalysisError::NotPermuted { ideal: i })?;
        images.push(j);
    }
    Permutation::from_images(images).ok_or(AnalysisError::NotPermuted { ideal: 0 })
}

/// Decomposes the induced Lie algebra of a regular BiHom-Lie algebra and
/// records how the structure maps permute the simple ideals.
pub fn decompose_bihom(a: &BiHomAlgebra) -> Result<Decomposition, AnalysisError> {
    let induced = induce_lie(a)?;
    let ideals = decompose_semisimple(&induced.lie)?;
    let sigma_alpha = automorphism_permutation(&ideals, a.alpha())?;
    let sigma_beta = automorphism_permutation(&ideals, a.beta())?;
    let m = ideals.len();
    Ok(Decomposition {
        ideals,
        sigma_alpha,
        sigma_beta,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{block_permutation, make_sl2};
    use crate::exactlin::{rat, unit_vec};
    use alloc::string::ToString;
    use alloc::vec;

    fn block(n: usize, range: core::ops::Range<usize>) -> Subspace {
        Subspace::from_vectors(n, range.map(|i| unit_vec(n, i)).collect()).unwrap()
    }

    fn sl2_power(k: usize) -> StructureTensor {
        let s = make_sl2();
        let parts: Vec<&StructureTensor> = (0..k).map(|_| &s).collect();
        StructureTensor::direct_sum(&parts)
    }

    #[test]
    fn sl2_is_its_own_ideal() {
        assert_eq!(decompose_semisimple(&make_sl2()).unwrap(), vec![Subspace::full(3)]);
    }

    #[test]
    fn block_sums_split_into_blocks() {
        assert_eq!(decompose_semisimple(&sl2_power(2)).unwrap(), vec![block(6, 0..3), block(6, 3..6)]);
        assert_eq!(
            decompose_semisimple(&sl2_power(3)).unwrap(),
            vec![block(9, 0..3), block(9, 3..6), block(9, 6..9)]
        );
    }

    #[test]
    fn mixed_basis_needs_the_commutant() {
        // basis vectors h1 + h2, e1 + e2, ... each spin to everything
        let n = 6;
        let p = MatrixQ::from_fn(n, n, |i, j| match (i % 3 == j % 3, i < 3, j < 3) {
            (true, _, true) => rat(1),
            (true, true, false) => rat(1),
            (true, false, false) => rat(-1),
            _ => rat(0),
        });
        let t = sl2_power(2).change_basis(&p).unwrap();
        let ideals = decompose_semisimple(&t).unwrap();
        assert_eq!(ideals.len(), 2);
        assert!(ideals.iter().all(|i| i.dim() == 3));
        assert!(ideals[0].intersect(&ideals[1]).unwrap().is_zero());
    }

    #[test]
    fn solvable_input_is_rejected() {
        assert_eq!(decompose_semisimple(&StructureTensor::zeros(2)), Err(AnalysisError::NotSemisimple));
    }

    #[test]
    fn permutation_examples() {
        let ideals = decompose_semisimple(&sl2_power(2)).unwrap();
        let id = automorphism_permutation(&ideals, &MatrixQ::identity(6)).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "()");
        let swap = automorphism_permutation(&ideals, &block_permutation(3, &[1, 0])).unwrap();
        assert_eq!(swap.images(), &[1, 0]);
        assert_eq!(swap.to_string(), "(1 2)");

        let ideals = decompose_semisimple(&sl2_power(3)).unwrap();
        let cyc = automorphism_permutation(&ideals, &block_permutation(3, &[1, 2, 0])).unwrap();
        assert!(cyc.is_transitive());
        assert_eq!(cyc.to_string(), "(1 2 3)");
    }

    #[test]
    fn unrelated_map_is_not_permuting() {
        let ideals = decompose_semisimple(&sl2_power(2)).unwrap();
        let mut m = MatrixQ::identity(6);
        m.set(0, 3, rat(1));
        assert_eq!(automorphism_permutation(&ideals, &m), Err(AnalysisError::NotPermuted { ideal: 1 }));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![2, 0]).is_none());
        assert!(Permutation::identity(1).is_transitive());
        assert!(!Permutation::identity(2).is_transitive());
    }
}
