//! Classification of 3-dimensional simple multiplicative BiHom-Lie algebras
//! over the rationals, with an exact change of basis onto the catalog.
//!
//! The induced Lie algebra of such an algebra is a split form of sl2 and the
//! structure maps are commuting automorphisms of it. Every commuting pair
//! with rational eigenvalues either fixes a split Cartan element (the `L1`
//! family) or is a pair of powers of one unipotent automorphism (`L2`, `L3`).
//! Both cases are brought to a canonical form `(sl2, alpha, beta)` in an
//! adapted sl2-triple, and the catalog algebra is brought to the same form.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{AxiomReport, BiHomAlgebra, StructureTensor};
use crate::analysis::{is_semisimple_lie, simplicity, AnalysisError};
use crate::catalog::{make_l1, make_l2, make_l3};
use crate::exactlin::{
    char_poly, frac, generalized_eigenspace, height, invert, kernel, rat, rational_roots, solve, MatrixQ, PolyQ,
    Rational, Subspace, VectorQ,
};
use crate::twist::{induce_lie, StructureMap, TwistError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("expected a 3-dimensional algebra, found dimension {0}")]
    DimensionNotThree(usize),
    #[error("algebra violates the BiHom-Lie axioms ({} fails)", .0.first_failure().map_or("?", |f| f.0))]
    AxiomViolation(Box<AxiomReport>),
    #[error("algebra is not regular: {0} is not invertible")]
    NotRegular(StructureMap),
    #[error("algebra is not simple: {0}")]
    NotSimple(String),
    #[error("induced Lie algebra is not semisimple")]
    NotSemisimple,
    #[error("induced Lie algebra is not split over the rationals (no rational sl2-triple found)")]
    NotSplit,
    #[error("structure map has irrational eigenvalues (residual factor {0})")]
    IrrationalEigenvalues(PolyQ),
    #[error("eigenvalues {0:?} do not have the shape 1, a, 1/a of an automorphism of sl2")]
    NotAutomorphismShape(Vec<Rational>),
    #[error("no catalog family matches: {0}")]
    Unmatched(String),
}

impl From<AnalysisError> for ClassifyError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::AxiomViolation(r) => Self::AxiomViolation(r),
            AnalysisError::NotRegular(m) => Self::NotRegular(m),
            AnalysisError::NotSemisimple | AnalysisError::NotLie(_) => Self::NotSemisimple,
            AnalysisError::DimensionMismatch { found, .. } => Self::DimensionNotThree(found),
            other => Self::Unmatched(other.to_string()),
        }
    }
}

impl From<TwistError> for ClassifyError {
    fn from(e: TwistError) -> Self {
        match e {
            TwistError::AxiomViolation(r) => Self::AxiomViolation(r),
            TwistError::NotRegular(m) | TwistError::Singular(m) => Self::NotRegular(m),
            TwistError::DimensionMismatch { found, .. } => Self::DimensionNotThree(found),
            other => Self::Unmatched(other.to_string()),
        }
    }
}

/// A basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub h: VectorQ,
    pub e: VectorQ,
    pub f: VectorQ,
}

impl Sl2Triple {
    /// Columns `h, e, f`.
    pub fn matrix(&self) -> MatrixQ {
        MatrixQ::from_columns(self.h.len(), &[self.h.clone(), self.e.clone(), self.f.clone()])
            .expect("equal lengths")
    }

    pub fn verify(&self, t: &StructureTensor) -> bool {
        let br = |x: &[Rational], y: &[Rational]| t.bracket(x, y).ok();
        let two = rat(2);
        br(&self.h, &self.e) == Some(scaled(&self.e, &two))
            && br(&self.h, &self.f) == Some(scaled(&self.f, &-two))
            && br(&self.e, &self.f) == Some(self.h.clone())
    }
}

fn scaled(v: &[Rational], s: &Rational) -> VectorQ {
    v.iter().map(|x| x * s).collect()
}

fn grid_values() -> [Rational; 7] {
    [rat(0), rat(1), rat(-1), rat(2), rat(-2), frac(1, 2), frac(-1, 2)]
}

/// Positive `c` when `ad x` has eigenvalues exactly `0, c, -c` with `c != 0`.
fn split_scale(t: &StructureTensor, x: &[Rational]) -> Option<Rational> {
    let cp = char_poly(&t.left_mul(x)).ok()?;
    let roots = rational_roots(&cp);
    if !roots.splits() {
        return None;
    }
    let c = roots.roots.first()?.0.clone();
    if c.is_positive() && roots.multiplicity(&c) == 1 && roots.multiplicity(&-&c) == 1 {
        Some(c)
    } else {
        None
    }
}

fn one_vector(s: &Subspace) -> Option<VectorQ> {
    if s.dim() == 1 {
        s.vectors().next().map(<[Rational]>::to_vec)
    } else {
        None
    }
}

/// Completes a split semisimple element `h0` with `ad h0` eigenvalues
/// `0, ±c` to a triple whose `h` is `(2/c) h0`.
fn triple_through(t: &StructureTensor, h0: &[Rational]) -> Option<Sl2Triple> {
    let c = split_scale(t, h0)?;
    let h = scaled(h0, &(rat(2) / c));
    triple_from_h_e(t, h, None)
}

/// Given `h` with `ad h` eigenvalues `0, ±2` (and optionally an eigenvector
/// `e` for 2), picks `e` and scales `f` so that `[e, f] = h`.
fn triple_from_h_e(t: &StructureTensor, h: VectorQ, e: Option<VectorQ>) -> Option<Sl2Triple> {
    let ad = t.left_mul(&h);
    let e = match e {
        Some(e) => e,
        None => one_vector(&kernel(&ad.shift(&rat(2))))?,
    };
    let f0 = one_vector(&kernel(&ad.shift(&rat(-2))))?;
    let ef = t.bracket(&e, &f0).ok()?;
    let idx = h.iter().position(|x| !x.is_zero())?;
    let kappa = &ef[idx] / &h[idx];
    if kappa.is_zero() {
        return None;
    }
    let triple = Sl2Triple {
        f: scaled(&f0, &kappa.recip()),
        h,
        e,
    };
    triple.verify(t).then_some(triple)
}

/// Searches `h` over combinations of the basis with coefficients in
/// `{0, ±1, ±2, ±1/2}`, smallest height and support first, for one whose
/// `ad h` has eigenvalues `0, ±c` with `c` rational.
pub fn find_sl2_triple(t: &StructureTensor) -> Result<Sl2Triple, ClassifyError> {
    let n = t.dim();
    if n != 3 {
        return Err(ClassifyError::DimensionNotThree(n));
    }
    if !is_semisimple_lie(t)? {
        return Err(ClassifyError::NotSemisimple);
    }
    let grid = grid_values();
    let mut candidates: Vec<[usize; 3]> = Vec::new();
    for a in 0..grid.len() {
        for b in 0..grid.len() {
            for c in 0..grid.len() {
                if (a, b, c) != (0, 0, 0) {
                    candidates.push([a, b, c]);
                }
            }
        }
    }
    let key = |idx: &[usize; 3]| {
        let h = idx.iter().map(|&i| height(&grid[i])).max().expect("three entries");
        let support: Vec<usize> = (0..3).filter(|&p| idx[p] != 0).collect();
        (h, support.len(), support, *idx)
    };
    candidates.sort_by_cached_key(key);
    for idx in candidates {
        let x: VectorQ = idx.iter().map(|&i| grid[i].clone()).collect();
        if let Some(triple) = triple_through(t, &x) {
            return Ok(triple);
        }
    }
    Err(ClassifyError::NotSplit)
}

/// Conjugacy shape of an automorphism of sl2 with rational eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    Identity,
    /// Eigenvalues `1, a, 1/a` with `|a| > 1`.
    DiagonalDistinct(Rational),
    /// Eigenvalues `1, -1, -1`, diagonalizable.
    DiagNegPair,
    /// Unipotent with a single Jordan block.
    UnipotentFull,
    /// Unipotent with Jordan blocks of sizes 2 and 1; never an automorphism of sl2.
    UnipotentPartial,
    /// Eigenvalues `1, -1, -1` with a Jordan block for `-1`; never an automorphism of sl2.
    NegJordan,
}

impl Profile {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, Profile::Identity | Profile::DiagonalDistinct(_) | Profile::DiagNegPair)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Identity => f.write_str("identity"),
            Profile::DiagonalDistinct(a) => write!(f, "diagonal(1, {}, {})", a, a.recip()),
            Profile::DiagNegPair => f.write_str("diagonal(1, -1, -1)"),
            Profile::UnipotentFull => f.write_str("unipotent, one Jordan block"),
            Profile::UnipotentPartial => f.write_str("unipotent, Jordan blocks 2+1"),
            Profile::NegJordan => f.write_str("eigenvalues 1, -1, -1 with a Jordan block"),
        }
    }
}

pub fn alpha_profile(m: &MatrixQ) -> Result<Profile, ClassifyError> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(ClassifyError::DimensionNotThree(m.rows().max(m.cols())));
    }
    let cp = char_poly(m).map_err(|_| ClassifyError::DimensionNotThree(3))?;
    let roots = rational_roots(&cp);
    if !roots.splits() {
        return Err(ClassifyError::IrrationalEigenvalues(roots.residual));
    }
    let mut all: Vec<Rational> = Vec::new();
    for (r, k) in &roots.roots {
        for _ in 0..*k {
            all.push(r.clone());
        }
    }
    let shape_err = || ClassifyError::NotAutomorphismShape(all.clone());
    let one = Rational::one();
    let pos = all.iter().position(|r| *r == one).ok_or_else(shape_err)?;
    let rest: Vec<&Rational> = all.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, r)| r).collect();
    if rest[0] * rest[1] != one {
        return Err(shape_err());
    }
    let dims = |lambda: &Rational| -> Vec<usize> {
        generalized_eigenspace(m, lambda)
            .expect("square")
            .iter()
            .map(Subspace::dim)
            .collect()
    };
    if *rest[0] == one {
        return Ok(if m.is_identity() {
            Profile::Identity
        } else if dims(&one) == vec![1, 2, 3] {
            Profile::UnipotentFull
        } else {
            Profile::UnipotentPartial
        });
    }
    if *rest[0] == -&one {
        return Ok(if kernel(&m.shift(&-&one)).dim() == 2 {
            Profile::DiagNegPair
        } else {
            Profile::NegJordan
        });
    }
    let a = if rest[0].abs() > one { rest[0] } else { rest[1] };
    Ok(Profile::DiagonalDistinct(a.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    L1,
    L2,
    L3,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::L3 => "L3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify3`]. `change_of_basis` is a matrix `P` with
/// `input.conjugate(P)` equal, entry for entry, to [`ClassLabel::catalog_algebra`].
///
/// Parameters are normalized: for `L1(a, b)`, `(a, b)` and `(1/a, 1/b)` are
/// the same algebra, and the representative has `|a| > 1`, or `|a| = 1` and
/// `|b| >= 1`. `L2` has no parameter; `L3` has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLabel {
    pub family: Family,
    pub params: Vec<Rational>,
    pub change_of_basis: MatrixQ,
    /// An sl2-triple of the induced Lie algebra, in input coordinates, in
    /// which both maps take their canonical form.
    pub triple: Sl2Triple,
    pub alpha_profile: Profile,
    pub beta_profile: Profile,
}

impl ClassLabel {
    pub fn catalog_algebra(&self) -> BiHomAlgebra {
        catalog_instance(self.family, &self.params)
    }

    /// True when both labels name the same isomorphism class.
    pub fn same_class(&self, other: &ClassLabel) -> bool {
        self.family == other.family && self.params == other.params
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::L1 => write!(f, "L1(a={}, b={})", self.params[0], self.params[1]),
            Family::L2 => f.write_str("L2"),
            Family::L3 => write!(f, "L3(a={})", self.params[0]),
        }
    }
}

fn catalog_instance(family: Family, params: &[Rational]) -> BiHomAlgebra {
    match family {
        Family::L1 => make_l1(params[0].clone(), params[1].clone()).expect("nonzero normalized parameters"),
        Family::L2 => make_l2(),
        Family::L3 => make_l3(params[0].clone()),
    }
}

struct NormalForm {
    family: Family,
    params: Vec<Rational>,
    triple: Sl2Triple,
    alpha_profile: Profile,
    beta_profile: Profile,
}

fn needs_swap(a: &Rational, b: &Rational) -> bool {
    let one = Rational::one();
    a.abs() < one || (a.abs() == one && b.abs() < one)
}

/// Nilpotent logarithm of a unipotent 3x3 matrix: `N - N^2/2` with `N = u - I`.
fn unipotent_log(u: &MatrixQ) -> MatrixQ {
    let n = u.shift(&Rational::one());
    let n2 = n.matmul(&n);
    &n - &n2.scale(&frac(1, 2))
}

/// The element `x` with `ad x = d`, if there is one.
fn ad_preimage(t: &StructureTensor, d: &MatrixQ) -> Option<VectorQ> {
    let n = t.dim();
    let cols: Vec<MatrixQ> = (0..n).map(|i| t.ad(i)).collect();
    let system = MatrixQ::from_fn(n * n, n, |r, i| cols[i].get(r / n, r % n).clone());
    let x = solve(&system, d.as_slice()).ok()??;
    (t.left_mul(&x) == *d).then_some(x)
}

fn torus_normal_form(
    lie: &StructureTensor,
    alpha: &MatrixQ,
    beta: &MatrixQ,
    pa: Profile,
    pb: Profile,
) -> Result<NormalForm, ClassifyError> {
    let one = Rational::one();
    let fixed = kernel(&alpha.shift(&one)).intersect(&kernel(&beta.shift(&one))).expect("same ambient");
    let triple = match fixed.dim() {
        3 => find_sl2_triple(lie)?,
        1 => {
            let h0 = fixed.vectors().next().expect("dimension one").to_vec();
            triple_through(lie, &h0).ok_or(ClassifyError::NotSplit)?
        }
        0 => {
            return Err(ClassifyError::Unmatched(String::from(
                "alpha and beta are commuting involutions with no common fixed vector",
            )))
        }
        _ => return Err(ClassifyError::Unmatched(String::from("common fixed space has dimension 2"))),
    };
    let eigen_on_e = |m: &MatrixQ| -> Option<Rational> {
        let image = m.apply(&triple.e);
        let idx = triple.e.iter().position(|x| !x.is_zero())?;
        let s = &image[idx] / &triple.e[idx];
        (image == scaled(&triple.e, &s)).then_some(s)
    };
    let (a, b) = match (eigen_on_e(alpha), eigen_on_e(beta)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(ClassifyError::Unmatched(String::from("e is not a common eigenvector"))),
    };
    let (triple, a, b) = if needs_swap(&a, &b) {
        let flipped = Sl2Triple {
            h: scaled(&triple.h, &-&one),
            e: triple.f,
            f: triple.e,
        };
        (flipped, a.recip(), b.recip())
    } else {
        (triple, a, b)
    };
    Ok(NormalForm {
        family: Family::L1,
        params: vec![a, b],
        triple,
        alpha_profile: pa,
        beta_profile: pb,
    })
}

fn unipotent_normal_form(
    lie: &StructureTensor,
    alpha: &MatrixQ,
    beta: &MatrixQ,
    pa: Profile,
    pb: Profile,
) -> Result<NormalForm, ClassifyError> {
    let log_a = unipotent_log(alpha);
    let log_b = unipotent_log(beta);
    let (family, params, generator) = match (&pa, &pb) {
        (Profile::Identity, Profile::UnipotentFull) => (Family::L2, Vec::new(), log_b),
        (Profile::UnipotentFull, Profile::Identity) => (Family::L3, vec![Rational::zero()], log_a),
        (Profile::UnipotentFull, Profile::UnipotentFull) => {
            let idx = log_a.as_slice().iter().position(|x| !x.is_zero()).expect("nonzero log");
            let s = &log_b.as_slice()[idx] / &log_a.as_slice()[idx];
            if log_b != log_a.scale(&s) {
                return Err(ClassifyError::Unmatched(String::from(
                    "commuting unipotent maps that are not powers of one another",
                )));
            }
            (Family::L3, vec![s], log_a)
        }
        _ => {
            return Err(ClassifyError::Unmatched(format_pair(&pa, &pb)));
        }
    };
    let e = ad_preimage(lie, &generator)
        .ok_or_else(|| ClassifyError::Unmatched(String::from("unipotent map is not exp(ad n)")))?;
    let two_e = scaled(&e, &rat(2));
    let h = solve(&lie.right_mul(&e), &two_e)
        .ok()
        .flatten()
        .ok_or(ClassifyError::NotSplit)?;
    let triple = triple_from_h_e(lie, h, Some(e)).ok_or(ClassifyError::NotSplit)?;
    Ok(NormalForm {
        family,
        params,
        triple,
        alpha_profile: pa,
        beta_profile: pb,
    })
}

fn format_pair(pa: &Profile, pb: &Profile) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    let _ = write!(s, "alpha is {pa} and beta is {pb}");
    s
}

fn normal_form(a: &BiHomAlgebra) -> Result<NormalForm, ClassifyError> {
    let n = a.dim();
    if n != 3 {
        return Err(ClassifyError::DimensionNotThree(n));
    }
    let verdict = simplicity(a)?;
    if !verdict.simple {
        let reason = if verdict.abelian {
            String::from("bracket is zero")
        } else {
            let mut s = String::new();
            let _ = fmt::Write::write_fmt(
                &mut s,
                format_args!("operators span {} of 9 dimensions, so a proper ideal exists", verdict.enveloping_dim),
            );
            s
        };
        return Err(ClassifyError::NotSimple(reason));
    }
    let induced = induce_lie(a)?;
    if !is_semisimple_lie(&induced.lie)? {
        return Err(ClassifyError::NotSemisimple);
    }
    normal_form_of_induced(a, &induced.lie)
}

/// The catalog instances are known to be simple; skip re-verifying them.
fn normal_form_of_catalog(a: &BiHomAlgebra) -> Result<NormalForm, ClassifyError> {
    let alpha_inv = invert(a.alpha()).expect("catalog maps are invertible");
    let beta_inv = invert(a.beta()).expect("catalog maps are invertible");
    normal_form_of_induced(a, &a.tensor().twisted(&alpha_inv, &beta_inv))
}

fn normal_form_of_induced(a: &BiHomAlgebra, lie: &StructureTensor) -> Result<NormalForm, ClassifyError> {
    let pa = alpha_profile(a.alpha())?;
    let pb = alpha_profile(a.beta())?;
    for p in [&pa, &pb] {
        if matches!(p, Profile::UnipotentPartial | Profile::NegJordan) {
            let mut s = String::new();
            let _ = fmt::Write::write_fmt(&mut s, format_args!("a structure map is {p}, which no automorphism of sl2 is"));
            return Err(ClassifyError::NotSimple(s));
        }
    }
    if pa.is_semisimple() && pb.is_semisimple() {
        torus_normal_form(lie, a.alpha(), a.beta(), pa, pb)
    } else {
        unipotent_normal_form(lie, a.alpha(), a.beta(), pa, pb)
    }
}

/// Classifies a 3-dimensional simple multiplicative BiHom-Lie algebra and
/// certifies the answer: the returned change of basis conjugates the input
/// onto the catalog algebra exactly, or an error is returned.
pub fn classify3(a: &BiHomAlgebra) -> Result<ClassLabel, ClassifyError> {
    let nf = normal_form(a)?;
    let target = catalog_instance(nf.family, &nf.params);
    let reference = normal_form_of_catalog(&target)?;
    let q_input = nf.triple.matrix();
    let q_target = reference.triple.matrix();
    let p = q_input.matmul(&invert(&q_target).expect("triples are bases"));
    let conjugated = a.conjugate(&p).map_err(|_| ClassifyError::DimensionNotThree(a.dim()))?;
    if !conjugated.same_structure(&target) {
        return Err(ClassifyError::Unmatched(String::from(
            "change of basis failed exact verification",
        )));
    }
    Ok(ClassLabel {
        family: nf.family,
        params: nf.params,
        change_of_basis: p,
        triple: nf.triple,
        alpha_profile: nf.alpha_profile,
        beta_profile: nf.beta_profile,
    })
}

/// `f` intertwines both pairs of maps and carries the first bracket to the
/// second: `f alpha1 = alpha2 f`, `f beta1 = beta2 f`, `f[x, y]_1 = [f x, f y]_2`.
pub fn verify_isomorphism(a1: &BiHomAlgebra, a2: &BiHomAlgebra, f: &MatrixQ) -> bool {
    let n = a1.dim();
    if a2.dim() != n || f.rows() != n || f.cols() != n || invert(f).is_err() {
        return false;
    }
    if f.matmul(a1.alpha()) != a2.alpha().matmul(f) || f.matmul(a1.beta()) != a2.beta().matmul(f) {
        return false;
    }
    let images: Vec<VectorQ> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(a1.tensor().product(i, j));
            match a2.tensor().bracket(&images[i], &images[j]) {
                Ok(rhs) if rhs == lhs => {}
                _ => return false,
            }
        }
    }
    true
}

/// An isomorphism `f: a1 -> a2` (as a matrix) when the two algebras are
/// isomorphic, `None` when they are not.
pub fn bihom_isomorphic3(a1: &BiHomAlgebra, a2: &BiHomAlgebra) -> Result<Option<MatrixQ>, ClassifyError> {
    let l1 = classify3(a1)?;
    let l2 = classify3(a2)?;
    if !l1.same_class(&l2) {
        return Ok(None);
    }
    let p1_inv = invert(&l1.change_of_basis).expect("certified change of basis");
    let f = l2.change_of_basis.matmul(&p1_inv);
    if verify_isomorphism(a1, a2, &f) {
        Ok(Some(f))
    } else {
        Err(ClassifyError::Unmatched(String::from("composed isomorphism failed verification")))
    }
}
