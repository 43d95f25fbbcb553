//! The keyed 28-symbol alphabet: letters A..Z, the word separator ',', and
//! the padding symbol '0'. A key shifts every symbol's base offset by `n`
//! modulo 28, where `n` is also the exponent applied to the Q-matrix during
//! decoding.

use crate::error::Error;

/// Number of symbols in the alphabet.
pub const SYMBOL_COUNT: u8 = 28;

/// The alphabet in offset order: offset 0..=25 are 'A'..='Z', offset 26 is
/// ',', offset 27 is '0'.
pub const SYMBOLS: [char; 28] = [
    'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J', 'K', 'L', 'M', 'N', 'O', 'P', 'Q', 'R', 'S',
    'T', 'U', 'V', 'W', 'X', 'Y', 'Z', ',', '0',
];

fn symbol_offset(c: char) -> Option<u8> {
    match c {
        'A'..='Z' => Some(c as u8 - b'A'),
        ',' => Some(26),
        '0' => Some(27),
        _ => None,
    }
}

/// Shift parameter for the alphabet and exponent for the key matrix.
///
/// Derived from the block count `m`: `n = 4` when `m = 1`, otherwise
/// `n = m*m`. Two keys with the same residue `n mod 28` induce the same
/// character map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphabetKey {
    exponent: u64,
    shift: u8,
}

impl AlphabetKey {
    /// Key for a message matrix split into `m * m` blocks.
    pub fn for_block_count(m: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidBlockCount(0));
        }
        let n = if m == 1 {
            4
        } else {
            (m as u64)
                .checked_pow(2)
                .ok_or(Error::InvalidBlockCount(m))?
        };
        Self::with_exponent(n)
    }

    /// Key with an explicit shift `n >= 1`.
    pub fn with_exponent(n: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(Self {
            exponent: n,
            shift: (n % u64::from(SYMBOL_COUNT)) as u8,
        })
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn shift_residue(&self) -> u8 {
        self.shift
    }

    /// Value of a symbol under this key: `(n + offset) mod 28`.
    pub fn encode_char(&self, c: char) -> Result<u8, Error> {
        let offset = symbol_offset(c).ok_or(Error::UnknownSymbol(c))?;
        Ok((self.shift + offset) % SYMBOL_COUNT)
    }

    /// Inverse of [`encode_char`](Self::encode_char) for values in 0..=27.
    pub fn decode_value(&self, v: u8) -> Result<char, Error> {
        if v >= SYMBOL_COUNT {
            return Err(Error::ValueOutOfRange(v));
        }
        let offset = (v + SYMBOL_COUNT - self.shift) % SYMBOL_COUNT;
        Ok(SYMBOLS[usize::from(offset)])
    }
}
