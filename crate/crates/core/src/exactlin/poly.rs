use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, MatrixQ, Rational};

/// Univariate rational polynomial, coefficients lowest degree first.
///
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// `prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut p = Self::new(alloc::vec![Rational::one()]);
        for r in roots {
            p = p.mul(&Self::new(alloc::vec![-r.clone(), Rational::one()]));
        }
        p
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &MatrixQ) -> MatrixQ {
        let n = m.rows();
        let mut acc = MatrixQ::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.matmul(m);
            acc = acc.shift(&-c.clone());
        }
        acc
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::default();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }

    /// Synthetic division by `(x - r)`; returns quotient and remainder.
    pub fn div_linear(&self, r: &Rational) -> (PolyQ, Rational) {
        if self.is_zero() {
            return (PolyQ::default(), Rational::zero());
        }
        let mut q = alloc::vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            carry = carry * r + c;
            if i > 0 {
                q[i - 1] = carry.clone();
            }
        }
        (PolyQ::new(q), carry)
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if d == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if d == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

/// Monic `det(xI - m)` by the Faddeev-LeVerrier recurrence.
pub fn char_poly(m: &MatrixQ) -> Result<PolyQ, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    // coeffs[k] multiplies x^k
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = MatrixQ::zeros(n, n);
    for k in 1..=n {
        acc = acc.matmul(m).shift(&-coeffs[n + 1 - k].clone());
        let am = m.matmul(&acc);
        coeffs[n - k] = -am.trace() / super::rat(k as i64);
    }
    Ok(PolyQ::new(coeffs))
}

/// Rational roots with multiplicity, plus the cofactor left after removing them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Sorted by decreasing root.
    pub roots: Vec<(Rational, usize)>,
    pub residual: PolyQ,
}

impl RationalRoots {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, r: &Rational) -> usize {
        self.roots
            .iter()
            .find(|(x, _)| x == r)
            .map_or(0, |(_, m)| *m)
    }

    /// Every root is rational (the residual is a constant).
    pub fn splits(&self) -> bool {
        self.residual.is_constant()
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let limit = n.sqrt();
    let mut d = BigInt::one();
    while d <= limit {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots by the classical candidate search `p | a_0`, `q | a_n` after
/// clearing denominators. Irrational or complex roots stay in the residual.
pub fn rational_roots(p: &PolyQ) -> RationalRoots {
    let mut rest = p.clone();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    if rest.is_zero() {
        return RationalRoots { roots, residual: rest };
    }
    let mut zero_mult = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coefficients()[0].is_zero() {
        rest = PolyQ::new(rest.coefficients()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if !rest.is_constant() {
        let lcm = rest
            .coefficients()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lcm = Rational::from_integer(lcm);
        let ints: Vec<BigInt> = rest.coefficients().iter().map(|c| (c * &lcm).to_integer()).collect();
        let ps = positive_divisors(&ints[0]);
        let qs = positive_divisors(ints.last().expect("nonconstant"));
        let mut candidates: Vec<Rational> = Vec::new();
        for p in &ps {
            for q in &qs {
                let c = Rational::new(p.clone(), q.clone());
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
        candidates.sort();
        candidates.dedup();
        for c in candidates {
            let mut mult = 0;
            loop {
                if rest.is_constant() {
                    break;
                }
                let (q, r) = rest.div_linear(&c);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
    }
    roots.sort_by(|a, b| b.0.cmp(&a.0));
    RationalRoots {
        roots,
        residual: rest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, rat};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn char_poly_examples() {
        let id = MatrixQ::identity(3);
        assert_eq!(char_poly(&id).unwrap(), PolyQ::from_roots(&[rat(1), rat(1), rat(1)]));
        let a1 = MatrixQ::diag(&[rat(1), rat(2), frac(1, 2)]);
        assert_eq!(char_poly(&a1).unwrap(), PolyQ::from_roots(&[rat(1), rat(2), frac(1, 2)]));
        let a5 = MatrixQ::diag(&[rat(1), rat(-1), rat(-1)]);
        assert_eq!(char_poly(&a5).unwrap(), PolyQ::from_roots(&[rat(1), rat(-1), rat(-1)]));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion_on_3x3() {
        let m = MatrixQ::from_i64(&[&[2, -1, 3], &[0, 4, 1], &[5, 2, -2]]);
        // det(xI - m) = x^3 - tr x^2 + (sum of principal 2-minors) x - det
        let tr = m.trace();
        // minors on rows/cols {1,2}, {1,3}, {2,3}: 8, -19, -10
        let minors = rat(8) + rat(-19) + rat(-10);
        let det = m.det().unwrap();
        assert_eq!(char_poly(&m).unwrap(), PolyQ::new(vec![-det, minors, -tr, rat(1)]));
    }

    #[test]
    fn roots_examples() {
        let p = PolyQ::from_roots(&[rat(1), rat(1), rat(1)]);
        let r = rational_roots(&p);
        assert_eq!(r.roots, vec![(rat(1), 3)]);
        assert!(r.splits());

        let p = PolyQ::new(vec![rat(1), frac(-5, 2), rat(1)]);
        let r = rational_roots(&p);
        assert_eq!(r.roots, vec![(rat(2), 1), (frac(1, 2), 1)]);

        let p = PolyQ::from_i64(&[1, 0, 1]);
        let r = rational_roots(&p);
        assert!(r.roots.is_empty());
        assert_eq!(r.residual, p);
    }

    #[test]
    fn zero_roots_and_mixed_residual() {
        // x^2 (x - 3/4)(x^2 - 2)
        let p = PolyQ::from_roots(&[rat(0), rat(0), frac(3, 4)]).mul(&PolyQ::from_i64(&[-2, 0, 1]));
        let r = rational_roots(&p);
        assert_eq!(r.roots, vec![(frac(3, 4), 1), (rat(0), 2)]);
        assert_eq!(r.residual.degree(), Some(2));
        assert!(!r.splits());
    }

    #[test]
    fn display() {
        let p = PolyQ::new(vec![rat(1), frac(-5, 2), rat(1)]);
        assert_eq!(p.to_string(), "x^2 - 5/2*x + 1");
        assert_eq!(PolyQ::default().to_string(), "0");
    }

    #[test]
    fn divisors() {
        let d: Vec<i64> = positive_divisors(&BigInt::from(-12))
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
