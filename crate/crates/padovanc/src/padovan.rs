//! Exact integer arithmetic for the Padovan sequence, Q-matrix powers,
//! determinants, and the center minor.
//!
//! The sequence is defined by `P(0) = 0, P(1) = 0, P(2) = 1` and
//! `P(k) = P(k-2) + P(k-3)`. Its companion matrix Q has determinant 1, and
//! the entries of `Q^n` are Padovan numbers. Entries grow exponentially with
//! the exponent, so everything here runs on arbitrary-precision integers and
//! never rounds or wraps.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// A 3x3 matrix of unbounded signed integers.
///
/// Rows and columns are numbered 1..=3, matching the row-major labeling used
/// throughout the codec (`q1..q9` for key matrices, `b1..b9` for blocks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix3 {
    entries: [[BigInt; 3]; 3],
}

impl Matrix3 {
    pub fn new(entries: [[BigInt; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn from_i64(entries: [[i64; 3]; 3]) -> Self {
        Self {
            entries: entries.map(|row| row.map(BigInt::from)),
        }
    }

    pub fn identity() -> Self {
        let mut entries: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        Self { entries }
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        assert!(
            (1..=3).contains(&row) && (1..=3).contains(&col),
            "row and col are 1-based indices in 1..=3"
        );
        &self.entries[row - 1][col - 1]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let entries = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(BigInt::zero(), |acc, k| {
                    acc + &self.entries[i][k] * &rhs.entries[k][j]
                })
            })
        });
        Self { entries }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> BigInt {
        let e = &self.entries;
        &e[0][0] * (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1])
            - &e[0][1] * (&e[1][0] * &e[2][2] - &e[1][2] * &e[2][0])
            + &e[0][2] * (&e[1][0] * &e[2][1] - &e[1][1] * &e[2][0])
    }

    /// Minor obtained by deleting row 2 and column 2: `b1*b9 - b3*b7` in the
    /// row-major labeling. A block is encodable exactly when this is nonzero.
    pub fn minor22(&self) -> BigInt {
        let e = &self.entries;
        &e[0][0] * &e[2][2] - &e[0][2] * &e[2][0]
    }
}

/// `P(k)`, computed iteratively from the recurrence.
pub fn padovan(k: u64) -> BigInt {
    let mut window = [BigInt::zero(), BigInt::zero(), BigInt::one()];
    if k < 3 {
        return window[k as usize].clone();
    }
    for _ in 3..=k {
        let next = &window[1] + &window[0];
        window.rotate_left(1);
        window[2] = next;
    }
    window[2].clone()
}

/// The Padovan companion matrix `[[0,1,0],[0,0,1],[1,1,0]]`. Its determinant
/// is 1, so multiplying a block by any power of it preserves the block's
/// determinant.
pub fn q_matrix() -> Matrix3 {
    Matrix3::from_i64([[0, 1, 0], [0, 0, 1], [1, 1, 0]])
}

/// `Q^n` by exponentiation by squaring. Rejects `n = 0`.
///
/// The result always equals the closed form
/// `[[P(n-1), P(n+1), P(n)], [P(n), P(n+2), P(n+1)], [P(n+1), P(n+3), P(n+2)]]`,
/// which the tests use as a cross-check.
pub fn q_power(n: u64) -> Result<Matrix3, Error> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    let mut result = Matrix3::identity();
    let mut base = q_matrix();
    let mut exp = n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(&base);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(&base);
        }
    }
    Ok(result)
}
