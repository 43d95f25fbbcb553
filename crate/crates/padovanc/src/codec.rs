//! Per-block encoding and decoding.
//!
//! A block travels as its determinant `d` plus the eight entries around the
//! center. The decoder forms the product of the key matrix with the block,
//! leaving the unknown-center contributions out of the middle column, and
//! recovers the center as the root of a linear equation: expanding the
//! product's determinant along that column gives `d = constant + coeff * x`,
//! and the key matrix has determinant 1 so the product's determinant is `d`
//! itself. [`oracle_center`] solves the same problem straight from the
//! block's own cofactor expansion, bypassing the key matrix; the two routes
//! must always agree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::alphabet::AlphabetKey;
use crate::blocking::{ensure_minor_condition, normalize_text, Block, MessageMatrix};
use crate::error::Error;
use crate::padovan::{q_power, Matrix3};

/// One transmitted row: the block determinant and the eight disclosed
/// entries in label order b1, b2, b3, b4, b6, b7, b8, b9 (center b5 absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodedRow {
    pub d: BigInt,
    pub disclosed: [u8; 8],
}

impl CodedRow {
    /// Disclosed entry by its 1..=9 label; label 5 is the withheld center.
    fn entry(&self, label: usize) -> BigInt {
        debug_assert!(label != 5 && (1..=9).contains(&label));
        let index = if label < 5 { label - 1 } else { label - 2 };
        BigInt::from(self.disclosed[index])
    }

    /// Center minor computed from the disclosed entries alone:
    /// `b1*b9 - b3*b7`. Receivers can check it without knowing the center.
    pub fn minor22(&self) -> i64 {
        let b = |i: usize| i64::from(self.disclosed[i]);
        b(0) * b(7) - b(2) * b(5)
    }

    fn block_with_center(&self, center: u8) -> Result<Block, Error> {
        let d = &self.disclosed;
        Block::new([
            [d[0], d[1], d[2]],
            [d[3], center, d[4]],
            [d[5], d[6], d[7]],
        ])
    }
}

/// The complete coded message: `m * m` rows in row-major tile order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodedMessage {
    pub m: usize,
    pub rows: Vec<CodedRow>,
}

/// Partial product of the key matrix with a block: the middle column lacks
/// the unknown-center terms `q2*b5`, `q5*b5`, `q8*b5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialE {
    components: [BigInt; 9],
}

impl PartialE {
    /// Component by its 1..=9 label, row-major.
    pub fn component(&self, label: usize) -> &BigInt {
        assert!((1..=9).contains(&label), "labels run 1..=9");
        &self.components[label - 1]
    }
}

/// Encode a block as its determinant plus the eight non-center entries.
/// The center minor must be nonzero, otherwise the receiver could never
/// reconstruct the center.
pub fn encode_block(block: &Block) -> Result<CodedRow, Error> {
    let matrix = block.to_matrix();
    if matrix.minor22().is_zero() {
        return Err(Error::ZeroMinor);
    }
    let c = |r, col| block.cell(r, col);
    Ok(CodedRow {
        d: matrix.det(),
        disclosed: [
            c(1, 1),
            c(1, 2),
            c(1, 3),
            c(2, 1),
            c(2, 3),
            c(3, 1),
            c(3, 2),
            c(3, 3),
        ],
    })
}

/// The nine partial-product components for a coded row under a key matrix.
pub fn partial_e(qn: &Matrix3, row: &CodedRow) -> PartialE {
    let q = |r, c| qn.entry(r, c);
    let b = |label| row.entry(label);
    let e1 = q(1, 1) * b(1) + q(1, 2) * b(4) + q(1, 3) * b(7);
    let e2 = q(1, 1) * b(2) + q(1, 3) * b(8);
    let e3 = q(1, 1) * b(3) + q(1, 2) * b(6) + q(1, 3) * b(9);
    let e4 = q(2, 1) * b(1) + q(2, 2) * b(4) + q(2, 3) * b(7);
    let e5 = q(2, 1) * b(2) + q(2, 3) * b(8);
    let e6 = q(2, 1) * b(3) + q(2, 2) * b(6) + q(2, 3) * b(9);
    let e7 = q(3, 1) * b(1) + q(3, 2) * b(4) + q(3, 3) * b(7);
    let e8 = q(3, 1) * b(2) + q(3, 3) * b(8);
    let e9 = q(3, 1) * b(3) + q(3, 2) * b(6) + q(3, 3) * b(9);
    PartialE {
        components: [e1, e2, e3, e4, e5, e6, e7, e8, e9],
    }
}

/// Coefficient and constant of the decode equation `d = constant + coeff*x`,
/// obtained by expanding the product determinant along its middle column.
pub fn center_equation(qn: &Matrix3, e: &PartialE) -> (BigInt, BigInt) {
    let e = |label| e.component(label);
    let q = |r, c| qn.entry(r, c);
    let minor1 = e(6) * e(7) - e(4) * e(9);
    let minor2 = e(1) * e(9) - e(7) * e(3);
    let minor3 = e(3) * e(4) - e(1) * e(6);
    let coeff = q(1, 2) * &minor1 + q(2, 2) * &minor2 + q(3, 2) * &minor3;
    let constant = e(2) * &minor1 + e(5) * &minor2 + e(8) * &minor3;
    (coeff, constant)
}

/// Solve the decode equation for the center. The solution must be an exact
/// integer; anything else means the row was corrupted in transit.
pub fn solve_center(qn: &Matrix3, e: &PartialE, d: &BigInt) -> Result<BigInt, Error> {
    let (coeff, constant) = center_equation(qn, e);
    if coeff.is_zero() {
        return Err(Error::SingularSystem);
    }
    let (quotient, remainder) = (d - constant).div_rem(&coeff);
    if !remainder.is_zero() {
        return Err(Error::NonIntegerSolution);
    }
    Ok(quotient)
}

/// Reconstruct a block from its coded row, solving for the center through
/// the key matrix.
pub fn decode_block(row: &CodedRow, qn: &Matrix3) -> Result<Block, Error> {
    let e = partial_e(qn, row);
    let center = solve_center(qn, &e, &row.d)?;
    let center_u8 = u8::try_from(&center).map_err(|_| Error::CenterOutOfRange(center.clone()))?;
    if center_u8 > 27 {
        return Err(Error::CenterOutOfRange(center));
    }
    let block = row.block_with_center(center_u8)?;
    debug_assert_eq!(block.to_matrix().det(), row.d);
    Ok(block)
}

/// Recover the center directly from the block's own cofactor expansion,
/// without any key matrix: the determinant is linear in the center with the
/// disclosed minor as its coefficient. Used as an independent check on
/// [`solve_center`].
pub fn oracle_center(row: &CodedRow) -> Result<BigInt, Error> {
    let minor = BigInt::from(row.minor22());
    if minor.is_zero() {
        return Err(Error::SingularSystem);
    }
    let zero_centered = row.block_with_center(0)?;
    let constant = zero_centered.to_matrix().det();
    let (quotient, remainder) = (&row.d - constant).div_rem(&minor);
    if !remainder.is_zero() {
        return Err(Error::NonIntegerSolution);
    }
    Ok(quotient)
}

/// Full encode pipeline: normalize, clear zero minors, build the matrix,
/// and encode every block in tile order.
pub fn encode_message(text: &str) -> Result<CodedMessage, Error> {
    let symbols = normalize_text(text)?;
    let (_, matrix) = ensure_minor_condition(&symbols)?;
    let rows = matrix
        .blocks()
        .iter()
        .map(encode_block)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CodedMessage {
        m: matrix.m(),
        rows,
    })
}

/// Full decode pipeline: derive the key from the row count, decode every
/// block, reassemble the matrix, and map values back to text.
pub fn decode_message(coded: &CodedMessage) -> Result<String, Error> {
    match coded.m.checked_mul(coded.m) {
        Some(expected) if expected == coded.rows.len() => {}
        _ => {
            return Err(Error::RowCountMismatch {
                m: coded.m,
                found: coded.rows.len(),
            })
        }
    }
    let key = AlphabetKey::for_block_count(coded.m)?;
    let qn = q_power(key.exponent())?;
    let blocks = coded
        .rows
        .iter()
        .map(|row| decode_block(row, &qn))
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = MessageMatrix::from_blocks(coded.m, &blocks)?;
    matrix.to_plaintext(&key)
}
