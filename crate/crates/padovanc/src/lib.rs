//! Determinant-keyed block codec over powers of the Padovan Q-matrix.
//!
//! Messages become 3m x 3m matrices of alphabet values, cut into 3x3 blocks.
//! Each block is transmitted as its determinant plus eight of its nine
//! entries; the receiver reconstructs the withheld center entry by solving a
//! linear determinant equation through `Q^n`, where both the alphabet shift
//! and the exponent `n` derive from the block count. All arithmetic is exact
//! over arbitrary-precision integers.
//!
//! Note that `n` is derivable from the transmitted block count, so this is
//! an encoding with a built-in determinant check, not encryption.

pub mod alphabet;
pub mod blocking;
pub mod codec;
mod error;
pub mod padovan;
pub mod wire;

pub use alphabet::AlphabetKey;
pub use blocking::{build_matrix, ensure_minor_condition, normalize_text, Block, MessageMatrix};
pub use codec::{
    center_equation, decode_block, decode_message, encode_block, encode_message, oracle_center,
    partial_e, solve_center, CodedMessage, CodedRow, PartialE,
};
pub use error::Error;
pub use padovan::{padovan, q_matrix, q_power, Matrix3};
