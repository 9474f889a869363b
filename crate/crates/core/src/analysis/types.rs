use alloc::vec::Vec;
use core::fmt;

/// Cartan type of a simple complex Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Series {
    pub const ALL: [Series; 9] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::G2,
        Series::F4,
        Series::E6,
        Series::E7,
        Series::E8,
    ];

    pub fn is_exceptional(self) -> bool {
        !matches!(self, Series::A | Series::B | Series::C | Series::D)
    }

    /// Dimension of the simple algebra of this series and rank. Classical
    /// ranks start at A1, B2, C3, D4 so that no algebra is counted twice.
    fn simple_dim(self, rank: usize) -> Option<usize> {
        let l = rank;
        match self {
            Series::A if l >= 1 => Some(l * (l + 2)),
            Series::B if l >= 2 => Some(l * (2 * l + 1)),
            Series::C if l >= 3 => Some(l * (2 * l + 1)),
            Series::D if l >= 4 => Some(l * (2 * l - 1)),
            Series::G2 => Some(14),
            Series::F4 => Some(52),
            Series::E6 => Some(78),
            Series::E7 => Some(133),
            Series::E8 => Some(248),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::G2 => "G2",
            Series::F4 => "F4",
            Series::E6 => "E6",
            Series::E7 => "E7",
            Series::E8 => "E8",
        }
    }
}

/// `(X, m)`: `m` copies of the simple Lie algebra `X`. The structure maps
/// themselves stand in for the conjugacy data of `(alpha^m, beta^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub series: Series,
    /// 0 for exceptional series.
    pub rank: usize,
    pub m: usize,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.series.is_exceptional() {
            write!(f, "({}, m={})", self.series.name(), self.m)
        } else {
            write!(f, "({}{}, m={})", self.series.name(), self.rank, self.m)
        }
    }
}

/// All `(X, m)` with `m * dim X = dim`, by increasing `m`, then series order
/// A, B, C, D, G2, F4, E6, E7, E8, then rank.
pub fn type_candidates(dim: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for m in (1..=dim).filter(|m| dim.is_multiple_of(*m)) {
        let target = dim / m;
        for series in Series::ALL {
            if series.is_exceptional() {
                if series.simple_dim(0) == Some(target) {
                    out.push(TypeLabel { series, rank: 0, m });
                }
                continue;
            }
            for rank in 1.. {
                match series.simple_dim(rank) {
                    None => continue,
                    Some(d) if d > target => break,
                    Some(d) if d == target => out.push(TypeLabel { series, rank, m }),
                    Some(_) => {}
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn label(series: Series, rank: usize, m: usize) -> TypeLabel {
        TypeLabel { series, rank, m }
    }

    #[test]
    fn dimension_three_is_a1() {
        assert_eq!(type_candidates(3), [label(Series::A, 1, 1)]);
    }

    #[test]
    fn dimension_six_is_two_copies_of_a1() {
        // A: l(l+2) in {3, 8, ...}; B2 = 10 and up exceed 6
        assert_eq!(type_candidates(6), [label(Series::A, 1, 2)]);
    }

    #[test]
    fn dimension_fourteen_is_g2() {
        // 14 / m in {14, 7, 2, 1}: none of 3, 8, 15, 10, 21, 28 divides evenly
        assert_eq!(type_candidates(14), [label(Series::G2, 0, 1)]);
    }

    #[test]
    fn classical_overlaps_are_excluded() {
        // B2 = C2 (dim 10) and A3 = D3 (dim 15) appear once each
        assert_eq!(type_candidates(10), [label(Series::B, 2, 1)]);
        assert_eq!(type_candidates(15), [label(Series::A, 3, 1), label(Series::A, 1, 5)]);
        assert_eq!(type_candidates(28), [label(Series::D, 4, 1), label(Series::G2, 0, 2)]);
        assert_eq!(
            type_candidates(24),
            [label(Series::A, 4, 1), label(Series::A, 2, 3), label(Series::A, 1, 8)]
        );
        assert!(type_candidates(0).is_empty());
        assert!(type_candidates(1).is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(label(Series::A, 1, 2).to_string(), "(A1, m=2)");
        assert_eq!(label(Series::G2, 0, 1).to_string(), "(G2, m=1)");
    }
}
