use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{LinalgError, MatrixQ, Rational, Subspace};

/// Reduced row-echelon form and pivot columns.
pub fn rref_with_pivots(m: &MatrixQ) -> (MatrixQ, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        if !inv.is_one() {
            for x in a.row_mut(r) {
                *x *= &inv;
            }
        }
        let pivot_row: Vec<Rational> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for (x, p) in a.row_mut(i).iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Unique reduced row-echelon form of `m` together with its rank.
pub fn rref(m: &MatrixQ) -> (MatrixQ, usize) {
    let (a, pivots) = rref_with_pivots(m);
    (a, pivots.len())
}

pub fn rank(m: &MatrixQ) -> usize {
    rref(m).1
}

/// Null space `{x : m x = 0}` as a canonical subspace of `Q^cols`.
pub fn kernel(m: &MatrixQ) -> Subspace {
    let (a, pivots) = rref_with_pivots(m);
    let n = m.cols();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = super::zero_vec(n);
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a.get(r, free).clone();
            }
            v
        })
        .collect();
    Subspace::from_vectors(n, basis).expect("kernel vectors have ambient length")
}

/// Exact inverse by Gauss-Jordan elimination on `[m | I]`.
pub fn invert(m: &MatrixQ) -> Result<MatrixQ, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let aug = MatrixQ::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let (red, pivots) = rref_with_pivots(&aug);
    let rank = pivots.iter().filter(|&&p| p < n).count();
    if rank < n {
        return Err(LinalgError::SingularMatrix { rank, n });
    }
    Ok(MatrixQ::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
}

/// One solution of `m x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve(m: &MatrixQ, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let n = m.cols();
    let aug = MatrixQ::from_fn(m.rows(), n + 1, |i, j| if j < n { m.get(i, j).clone() } else { b[i].clone() });
    let (red, pivots) = rref_with_pivots(&aug);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = super::zero_vec(n);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = red.get(r, n).clone();
    }
    Ok(Some(x))
}

/// Kernels of `(m - lambda I)^k` for `k = 1, 2, ...` until the dimension
/// stops growing. The dimension profile encodes the Jordan blocks at `lambda`.
pub fn generalized_eigenspace(m: &MatrixQ, lambda: &Rational) -> Result<Vec<Subspace>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let shifted = m.shift(lambda);
    let mut power = shifted.clone();
    let mut chain: Vec<Subspace> = Vec::new();
    loop {
        let k = kernel(&power);
        if let Some(last) = chain.last() {
            if last.dim() == k.dim() {
                break;
            }
        }
        let full = k.dim() == m.rows();
        chain.push(k);
        if full {
            break;
        }
        power = power.matmul(&shifted);
    }
    Ok(chain)
}

/// Incrementally maintained reduced row-echelon basis. Used by the spinning
/// loops, which add one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient: usize,
    // (pivot column, row) sorted by pivot column; rows are fully reduced
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Residue of `v` after clearing every pivot column of the basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let factor = w[*p].clone();
            for (x, r) in w.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        super::is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w).skip(p) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, w));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let rows = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::from_rref_rows(self.ambient, rows)
    }
}
