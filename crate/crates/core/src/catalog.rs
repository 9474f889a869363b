//! Exact constructors for sl2 and the three families of 3-dimensional simple
//! multiplicative BiHom-Lie algebras.
//!
//! The `L3` table is the twist of the induced `L2` bracket by the unipotent pair
//! `(U, U^a)`. Two e1-coefficients differ from the commonly printed table,
//! which fails the axioms; see `ERRATA.md` and [`make_l3_as_printed`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{BiHomAlgebra, StructureTensor};
use crate::exactlin::{frac, rat, MatrixQ, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("missing parameter {0}")]
    MissingParameter(&'static str),
    #[error("{family} takes no parameter {param}")]
    UnexpectedParameter { family: &'static str, param: &'static str },
    #[error("unknown catalog entry {0:?} (expected sl2, L1, L2 or L3)")]
    UnknownName(String),
}

fn tensor_from_table(dim: usize, table: &[((usize, usize), [Rational; 3])]) -> StructureTensor {
    let mut t = StructureTensor::zeros(dim);
    for ((i, j), v) in table {
        t.set_product(i - 1, j - 1, v);
    }
    t
}

/// sl2 in the basis `(h, e, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn make_sl2() -> StructureTensor {
    let r = rat;
    tensor_from_table(
        3,
        &[
            ((1, 2), [r(0), r(2), r(0)]),
            ((2, 1), [r(0), r(-2), r(0)]),
            ((1, 3), [r(0), r(0), r(-2)]),
            ((3, 1), [r(0), r(0), r(2)]),
            ((2, 3), [r(1), r(0), r(0)]),
            ((3, 2), [r(-1), r(0), r(0)]),
        ],
    )
}

/// `diag(1, t, 1/t)`.
pub fn torus(t: &Rational) -> MatrixQ {
    MatrixQ::diag(&[Rational::one(), t.clone(), t.recip()])
}

/// The unipotent block `U = [[1,1,0],[0,1,1],[0,0,1]]`.
pub fn unipotent() -> MatrixQ {
    MatrixQ::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]])
}

/// `U^a = [[1, a, (a^2 - a)/2], [0, 1, a], [0, 0, 1]]`, valid for any rational `a`.
pub fn unipotent_power(a: &Rational) -> MatrixQ {
    let corner = (a * a - a) / rat(2);
    MatrixQ::from_fn(3, 3, |i, j| match (i, j) {
        _ if i == j => Rational::one(),
        (0, 1) | (1, 2) => a.clone(),
        (0, 2) => corner.clone(),
        _ => Rational::zero(),
    })
}

/// `L1(a, b)`: `alpha = diag(1, a, 1/a)`, `beta = diag(1, b, 1/b)`.
pub fn make_l1(a: Rational, b: Rational) -> Result<BiHomAlgebra, CatalogError> {
    if a.is_zero() {
        return Err(CatalogError::ZeroParameter("a"));
    }
    if b.is_zero() {
        return Err(CatalogError::ZeroParameter("b"));
    }
    let z = Rational::zero;
    let two = rat(2);
    let tensor = tensor_from_table(
        3,
        &[
            ((1, 2), [z(), &two * &b, z()]),
            ((1, 3), [z(), z(), -&two / &b]),
            ((2, 1), [z(), -&two * &a, z()]),
            ((2, 3), [&a / &b, z(), z()]),
            ((3, 1), [z(), z(), &two / &a]),
            ((3, 2), [-&b / &a, z(), z()]),
        ],
    );
    Ok(BiHomAlgebra::new(tensor, torus(&a), torus(&b)).expect("3x3 maps"))
}

/// `L2`: `alpha = I`, `beta = U`.
pub fn make_l2() -> BiHomAlgebra {
    let r = rat;
    let tensor = tensor_from_table(
        3,
        &[
            ((1, 2), [r(2), r(0), r(0)]),
            ((1, 3), [r(1), r(2), r(0)]),
            ((2, 1), [r(-2), r(0), r(0)]),
            ((2, 2), [r(-2), r(0), r(0)]),
            ((2, 3), [r(1), r(1), r(2)]),
            ((3, 1), [r(1), r(-2), r(0)]),
            ((3, 2), [r(0), r(-3), r(-2)]),
            ((3, 3), [r(-1), r(-1), r(-2)]),
        ],
    );
    BiHomAlgebra::new(tensor, MatrixQ::identity(3), unipotent()).expect("3x3 maps")
}

/// The Lie bracket induced by `L2`, a copy of sl2 on which `U` acts as an
/// automorphism: `[e1,e2] = 2e1`, `[e1,e3] = -e1 + 2e2`, `[e2,e3] = e1 + e2 + 2e3`.
pub fn l2_induced_lie() -> StructureTensor {
    let r = rat;
    tensor_from_table(
        3,
        &[
            ((1, 2), [r(2), r(0), r(0)]),
            ((2, 1), [r(-2), r(0), r(0)]),
            ((1, 3), [r(-1), r(2), r(0)]),
            ((3, 1), [r(1), r(-2), r(0)]),
            ((2, 3), [r(1), r(1), r(2)]),
            ((3, 2), [r(-1), r(-1), r(-2)]),
        ],
    )
}

fn l3_tensor(a: &Rational, printed: bool) -> StructureTensor {
    let r = rat;
    let one = Rational::one();
    let half = frac(1, 2);
    let a2 = a * a;
    // e1-coefficients of [e2,e3] and [e3,e3]; the printed table halves the
    // first and has (a + 4) where (a + 2) belongs in the second
    let (c23, c33) = if printed {
        ((r(3) * a - &a2) * &half, (&one - a) * (a + r(4)) * &half)
    } else {
        (r(3) * a - &a2, (&one - a) * (a + r(2)) * &half)
    };
    tensor_from_table(
        3,
        &[
            ((1, 2), [r(2), r(0), r(0)]),
            ((1, 3), [r(2) * a - &one, r(2), r(0)]),
            ((2, 1), [r(-2), r(0), r(0)]),
            ((2, 2), [r(2) * (&one - a), r(0), r(0)]),
            ((2, 3), [c23, r(3), r(2)]),
            ((3, 1), [r(-1), r(-2), r(0)]),
            ((3, 2), [-(a + &one), -(r(2) * a + &one), r(-2)]),
            ((3, 3), [c33, &one - &a2, r(2) * (&one - a)]),
        ],
    )
}

/// `L3(a)`: `alpha = U`, `beta = U^a`.
pub fn make_l3(a: Rational) -> BiHomAlgebra {
    BiHomAlgebra::new(l3_tensor(&a, false), unipotent(), unipotent_power(&a)).expect("3x3 maps")
}

/// `L3(a)` with the bracket table exactly as commonly printed. It fails the
/// BiHom-Lie axioms for generic `a` and exists to document the erratum.
pub fn make_l3_as_printed(a: Rational) -> BiHomAlgebra {
    BiHomAlgebra::new(l3_tensor(&a, true), unipotent(), unipotent_power(&a)).expect("3x3 maps")
}

/// Block-diagonal direct sum of tensors and maps.
pub fn direct_sum(parts: &[&BiHomAlgebra]) -> BiHomAlgebra {
    let tensors: Vec<&StructureTensor> = parts.iter().map(|p| p.tensor()).collect();
    let alphas: Vec<&MatrixQ> = parts.iter().map(|p| p.alpha()).collect();
    let betas: Vec<&MatrixQ> = parts.iter().map(|p| p.beta()).collect();
    BiHomAlgebra::new(
        StructureTensor::direct_sum(&tensors),
        MatrixQ::block_diag(&alphas),
        MatrixQ::block_diag(&betas),
    )
    .expect("block sizes agree")
}

/// Permutation matrix sending block `i` (of size `block`) onto block `perm[i]`,
/// keeping positions inside blocks.
pub fn block_permutation(block: usize, perm: &[usize]) -> MatrixQ {
    let n = block * perm.len();
    let mut m = MatrixQ::zeros(n, n);
    for (i, &target) in perm.iter().enumerate() {
        for r in 0..block {
            m.set(target * block + r, i * block + r, Rational::one());
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    Sl2,
    L1,
    L2,
    L3,
}

impl CatalogName {
    pub fn parse(name: &str) -> Result<Self, CatalogError> {
        match name {
            "sl2" => Ok(Self::Sl2),
            "L1" => Ok(Self::L1),
            "L2" => Ok(Self::L2),
            "L3" => Ok(Self::L3),
            other => Err(CatalogError::UnknownName(other.into())),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Sl2 => "sl2",
            Self::L1 => "L1",
            Self::L2 => "L2",
            Self::L3 => "L3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub params: Vec<Rational>,
    pub algebra: BiHomAlgebra,
}

impl CatalogEntry {
    /// `L1` with `a = +-1` sits outside the diagonal-distinct case of the
    /// 3-dimensional classification (alpha then has a repeated eigenvalue).
    pub fn outside_generic_case(&self) -> bool {
        self.name == CatalogName::L1 && (self.params[0].is_one() || self.params[0] == rat(-1))
    }
}

/// Looks an entry up by name, as the command line does.
pub fn entry(name: &str, a: Option<Rational>, b: Option<Rational>) -> Result<CatalogEntry, CatalogError> {
    let name = CatalogName::parse(name)?;
    let reject = |param, value: &Option<Rational>| match value {
        Some(_) => Err(CatalogError::UnexpectedParameter {
            family: name.as_str(),
            param,
        }),
        None => Ok(()),
    };
    let (params, algebra) = match name {
        CatalogName::Sl2 => {
            reject("a", &a)?;
            reject("b", &b)?;
            (vec![], BiHomAlgebra::from_lie(make_sl2()))
        }
        CatalogName::L1 => {
            let a = a.ok_or(CatalogError::MissingParameter("a"))?;
            let b = b.ok_or(CatalogError::MissingParameter("b"))?;
            let alg = make_l1(a.clone(), b.clone())?;
            (vec![a, b], alg)
        }
        CatalogName::L2 => {
            reject("a", &a)?;
            reject("b", &b)?;
            (vec![], make_l2())
        }
        CatalogName::L3 => {
            reject("b", &b)?;
            let a = a.ok_or(CatalogError::MissingParameter("a"))?;
            (vec![a.clone()], make_l3(a))
        }
    };
    Ok(CatalogEntry { name, params, algebra })
}
