//! Exact rational matrices and Gaussian elimination.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::{Error, Rational, RationalVector, Result};

/// Dense row-major matrix of arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| Rational::zero()).collect(),
        }
    }

    /// Builds a matrix from equal-length rows. `cols` is used when `rows` is
    /// empty.
    pub fn from_rows(rows: &[RationalVector], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    /// Reduces in place to row echelon form and returns the rank.
    pub fn row_reduce(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    self.data.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = self.get(rank, col).recip();
            for c in col..cols {
                let v = &self.data[rank * cols + c] * &inv;
                self.data[rank * cols + c] = v;
            }
            for r in rank + 1..rows {
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let delta = &factor * &self.data[rank * cols + c];
                    self.data[r * cols + c] -= delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Number of affinely independent points among `points`: one plus the rank of
/// the differences to the first point.
pub fn affine_rank(points: &[RationalVector]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let dim = first.len();
    let diffs: Vec<RationalVector> = points[1..]
        .iter()
        .map(|p| {
            if p.len() != dim {
                return Err(Error::DimensionMismatch);
            }
            Ok(p.iter().zip(first).map(|(a, b)| a - b).collect())
        })
        .collect::<Result<_>>()?;
    Ok(1 + RationalMatrix::from_rows(&diffs, dim)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(v: &[i64]) -> RationalVector {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&[q(&[0, 0]), q(&[1, 0]), q(&[0, 1])]).unwrap(), 3);
        assert_eq!(affine_rank(&[q(&[0]), q(&[1]), q(&[1])]).unwrap(), 2);
        let p2 = [q(&[0, 0, 0]), q(&[1, 0, 0]), q(&[0, 1, 0]), q(&[0, 0, 1])];
        assert_eq!(affine_rank(&p2).unwrap(), 4);
        assert_eq!(affine_rank(&[]), Err(Error::EmptyInput));
        assert_eq!(
            affine_rank(&[q(&[0]), q(&[1, 2])]),
            Err(Error::DimensionMismatch)
        );
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = RationalMatrix::from_rows(&[q(&[1, 2, 3]), q(&[2, 4, 6]), q(&[1, 0, 1])], 3).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(RationalMatrix::zeros(2, 2).rank(), 0);
        let half = Rational::new(1.into(), 2.into());
        let m = RationalMatrix::from_rows(&[vec![half.clone(), half], q(&[1, 1])], 2).unwrap();
        assert_eq!(m.rank(), 1);
    }
}
