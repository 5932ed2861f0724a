//! Exact rational matrices and fraction-free rank computation.
//!
//! Every dimension in this crate (Cech cohomology, Koszul homology) reduces
//! to ranks of small matrices over Q. Ranks are computed by fraction-free
//! Gaussian elimination (Bareiss): rows are first scaled to integers, then
//! eliminated with exact minor arithmetic, in `i128` when the entries fit
//! and in `BigInt` otherwise. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A dense matrix over Q, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size, size);
        for i in 0..size {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product; shapes must be compatible.
    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Scale each row to integers; row scaling preserves rank.
        let mut int_rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            int_rows.push(
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
        }
        match to_i128(&int_rows) {
            Some(small) => rank_i128(small).unwrap_or_else(|| rank_bigint(int_rows)),
            None => rank_bigint(int_rows),
        }
    }

    /// `cols - rank`, the kernel dimension of the matrix as a map from
    /// column space to row space.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

fn to_i128(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|x| i128::try_from(x).ok())
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

/// Bareiss elimination in `i128`; returns `None` on overflow so the caller
/// can redo the computation in `BigInt`.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = m[rank][col]
                    .checked_mul(m[i][j])?
                    .checked_sub(m[i][col].checked_mul(m[rank][j])?)?;
                m[i][j] = t / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

/// Fraction-free elimination over arbitrary-precision integers. Every
/// intermediate entry is a minor of the scaled input, so the division by
/// the previous pivot is exact.
fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                debug_assert!((&t % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    let _ = prev.abs();
    rank
}
