//! Text normalization, message-matrix construction, 3x3 tiling, and the
//! zero-minor remediation loop.
//!
//! A normalized message is laid out row-major into the smallest 3m x 3m
//! matrix that holds it, with the tail padded by the '0' symbol. The matrix
//! splits into m*m blocks in row-major tile order. Every block must have a
//! nonzero center minor before it can be encoded; remediation inserts '0'
//! symbols into the message until that holds. Normalization never emits '0',
//! so decoders can strip every '0' unambiguously.

use crate::alphabet::AlphabetKey;
use crate::error::Error;
use crate::padovan::Matrix3;

/// A 3m x 3m matrix of alphabet values in 0..=27, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageMatrix {
    m: usize,
    values: Vec<u8>,
}

impl MessageMatrix {
    pub fn new(m: usize, values: Vec<u8>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidBlockCount(0));
        }
        if values.len() != 9 * m * m {
            return Err(Error::DimensionMismatch {
                m,
                cells: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| v > 27) {
            return Err(Error::ValueOutOfRange(bad));
        }
        Ok(Self { m, values })
    }

    /// Number of blocks per side; the matrix is 3m x 3m.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn side(&self) -> usize {
        3 * self.m
    }

    /// Value at 1-based `(row, col)`.
    pub fn value(&self, row: usize, col: usize) -> u8 {
        let side = self.side();
        assert!(
            (1..=side).contains(&row) && (1..=side).contains(&col),
            "row and col are 1-based indices in 1..={side}"
        );
        self.values[(row - 1) * side + (col - 1)]
    }

    /// The m*m blocks in row-major tile order: left to right, then top to
    /// bottom.
    pub fn blocks(&self) -> Vec<Block> {
        let side = self.side();
        let mut out = Vec::with_capacity(self.m * self.m);
        for tile_row in 0..self.m {
            for tile_col in 0..self.m {
                let cells = std::array::from_fn(|r| {
                    std::array::from_fn(|c| {
                        self.values[(3 * tile_row + r) * side + 3 * tile_col + c]
                    })
                });
                out.push(Block { cells });
            }
        }
        out
    }

    /// Reassemble a matrix from blocks in row-major tile order.
    pub fn from_blocks(m: usize, blocks: &[Block]) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidBlockCount(0));
        }
        match m.checked_mul(m) {
            Some(expected) if expected == blocks.len() => {}
            _ => {
                return Err(Error::RowCountMismatch {
                    m,
                    found: blocks.len(),
                })
            }
        }
        let side = 3 * m;
        let mut values = vec![0u8; side * side];
        for (i, block) in blocks.iter().enumerate() {
            let (tile_row, tile_col) = (i / m, i % m);
            for r in 0..3 {
                for c in 0..3 {
                    values[(3 * tile_row + r) * side + 3 * tile_col + c] = block.cells[r][c];
                }
            }
        }
        Self::new(m, values)
    }

    /// Map values back to text: '0' padding is dropped and ',' becomes a
    /// single space.
    pub fn to_plaintext(&self, key: &AlphabetKey) -> Result<String, Error> {
        let mut out = String::with_capacity(self.values.len());
        for &v in &self.values {
            match key.decode_value(v)? {
                '0' => {}
                ',' => out.push(' '),
                c => out.push(c),
            }
        }
        Ok(out)
    }
}

/// One 3x3 tile of a message matrix, entries in 0..=27.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    cells: [[u8; 3]; 3],
}

impl Block {
    pub fn new(cells: [[u8; 3]; 3]) -> Result<Self, Error> {
        for row in &cells {
            for &v in row {
                if v > 27 {
                    return Err(Error::ValueOutOfRange(v));
                }
            }
        }
        Ok(Self { cells })
    }

    /// Cell at 1-based `(row, col)`.
    pub fn cell(&self, row: usize, col: usize) -> u8 {
        assert!(
            (1..=3).contains(&row) && (1..=3).contains(&col),
            "row and col are 1-based indices in 1..=3"
        );
        self.cells[row - 1][col - 1]
    }

    /// The withheld (2,2) entry.
    pub fn center(&self) -> u8 {
        self.cells[1][1]
    }

    pub fn to_matrix(&self) -> Matrix3 {
        Matrix3::from_i64(self.cells.map(|row| row.map(i64::from)))
    }
}

/// Uppercase letters and turn each single inter-word space into ','.
///
/// Accepts ASCII letters of either case separated by single spaces. Leading,
/// trailing, and doubled spaces are rejected, as is everything else. The
/// output never contains '0'.
pub fn normalize_text(raw: &str) -> Result<Vec<char>, Error> {
    if raw.ends_with(' ') {
        return Err(Error::MalformedSpacing);
    }
    let mut out = Vec::with_capacity(raw.len());
    let mut prev_was_space = true; // rejects a leading space
    for ch in raw.chars() {
        match ch {
            ' ' => {
                if prev_was_space {
                    return Err(Error::MalformedSpacing);
                }
                out.push(',');
                prev_was_space = true;
            }
            'A'..='Z' | 'a'..='z' => {
                out.push(ch.to_ascii_uppercase());
                prev_was_space = false;
            }
            other => return Err(Error::InvalidCharacter(other)),
        }
    }
    Ok(out)
}

fn minimal_block_count(len: usize) -> usize {
    let mut m = 1;
    while 9 * m * m < len {
        m += 1;
    }
    m
}

/// Lay the symbols into the smallest 3m x 3m matrix, pad the tail with '0',
/// and encode everything with the key for that block count.
pub fn build_matrix(symbols: &[char]) -> Result<MessageMatrix, Error> {
    if symbols.is_empty() {
        return Err(Error::EmptyMessage);
    }
    let m = minimal_block_count(symbols.len());
    let key = AlphabetKey::for_block_count(m)?;
    let pad = key.encode_char('0')?;
    let mut values = Vec::with_capacity(9 * m * m);
    for &c in symbols {
        values.push(key.encode_char(c)?);
    }
    values.resize(9 * m * m, pad);
    MessageMatrix::new(m, values)
}

fn all_minors_nonzero(matrix: &MessageMatrix) -> bool {
    use num_traits::Zero;
    matrix
        .blocks()
        .iter()
        .all(|b| !b.to_matrix().minor22().is_zero())
}

/// Deterministic layout used when prepending cannot clear the minors: spread
/// the message by inserting '0' runs so that every block receives at least
/// one message symbol on its bottom-left corner cell, with all other corner
/// cells left as padding. Message symbols never encode to the padding value,
/// so each block's minor becomes pad*(pad - symbol), nonzero whenever the
/// padding value itself is nonzero.
fn spread_layout(symbols: &[char], m: usize) -> Option<Vec<char>> {
    let side = 3 * m;
    let len = symbols.len();
    // Eligible cells: whole middle block rows, middle block columns, and the
    // bottom-left corner of each block (the only corner that takes a symbol).
    let mut eligible = Vec::new();
    let mut corner_cells = 0usize;
    for r in 0..side {
        for c in 0..side {
            let cell = r * side + c;
            if r % 3 == 1 || c % 3 == 1 {
                eligible.push((cell, false));
            } else if r % 3 == 2 && c % 3 == 0 {
                eligible.push((cell, true));
                corner_cells += 1;
            }
        }
    }
    if len < corner_cells || len > eligible.len() {
        return None;
    }
    let mut out = Vec::with_capacity(side * side);
    let mut remaining = symbols.iter();
    let mut left = len;
    let mut corners_left = corner_cells;
    for (cell, is_corner) in eligible {
        if left == 0 {
            break;
        }
        if is_corner || left > corners_left {
            while out.len() < cell {
                out.push('0');
            }
            out.push(*remaining.next()?);
            left -= 1;
            if is_corner {
                corners_left -= 1;
            }
        }
    }
    if left > 0 {
        return None;
    }
    Some(out)
}

/// Make every block's center minor nonzero by inserting '0' symbols.
///
/// First tries the prepend loop: one '0' at the front per iteration, up to
/// `9 * (m0 + 1)^2` prepends where `m0` is the block count of the original
/// message. Prepending alone cannot fix every message shape (a padding tail
/// that covers a whole block keeps that block's minor at zero no matter how
/// many zeros go in front), so when the budget runs out the symbols are
/// spread across the tiles instead. Returns the adjusted symbols together
/// with the rebuilt matrix.
pub fn ensure_minor_condition(symbols: &[char]) -> Result<(Vec<char>, MessageMatrix), Error> {
    let matrix = build_matrix(symbols)?;
    let budget = 9 * (matrix.m() + 1) * (matrix.m() + 1);
    if all_minors_nonzero(&matrix) {
        return Ok((symbols.to_vec(), matrix));
    }
    let mut padded = symbols.to_vec();
    for _ in 0..budget {
        padded.insert(0, '0');
        let matrix = build_matrix(&padded)?;
        if all_minors_nonzero(&matrix) {
            return Ok((padded, matrix));
        }
    }
    let mut m = minimal_block_count(symbols.len());
    for _ in 0..4 {
        if let Some(spread) = spread_layout(symbols, m) {
            let matrix = build_matrix(&spread)?;
            if matrix.m() == m && all_minors_nonzero(&matrix) {
                return Ok((spread, matrix));
            }
        }
        m += 1;
    }
    Err(Error::RemediationFailed {
        prepends: budget,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn chars(s: &str) -> Vec<char> {
        s.chars().collect()
    }

    #[test]
    fn normalize_replaces_spaces_with_commas() {
        assert_eq!(normalize_text("HELLO ALA").unwrap(), chars("HELLO,ALA"));
        assert_eq!(normalize_text("ALA JENAN").unwrap(), chars("ALA,JENAN"));
        assert_eq!(normalize_text("A").unwrap(), chars("A"));
        assert_eq!(normalize_text("hello ala").unwrap(), chars("HELLO,ALA"));
        assert_eq!(normalize_text("").unwrap(), Vec::<char>::new());
    }

    #[test]
    fn normalize_rejects_bad_spacing_and_characters() {
        assert_eq!(normalize_text(" HELLO"), Err(Error::MalformedSpacing));
        assert_eq!(normalize_text("HELLO "), Err(Error::MalformedSpacing));
        assert_eq!(normalize_text("HELLO  ALA"), Err(Error::MalformedSpacing));
        assert_eq!(normalize_text("HELLO,ALA"), Err(Error::InvalidCharacter(',')));
        assert_eq!(normalize_text("HELLO3"), Err(Error::InvalidCharacter('3')));
        assert_eq!(normalize_text("HÉLLO"), Err(Error::InvalidCharacter('É')));
    }

    #[test]
    fn build_matrix_sizes() {
        assert_eq!(build_matrix(&chars("HELLO,ALA")).unwrap().m(), 1);
        assert_eq!(build_matrix(&['A'; 36]).unwrap().m(), 2);
        let padded = build_matrix(&['A'; 10]).unwrap();
        assert_eq!(padded.m(), 2);
        // 26 trailing cells hold the encoded padding symbol
        let pad = AlphabetKey::for_block_count(2)
            .unwrap()
            .encode_char('0')
            .unwrap();
        let tail: Vec<u8> = (11..=36)
            .map(|i| padded.value((i - 1) / 6 + 1, (i - 1) % 6 + 1))
            .collect();
        assert_eq!(tail, vec![pad; 26]);
        assert_eq!(build_matrix(&[]), Err(Error::EmptyMessage));
    }

    #[test]
    fn build_matrix_values_golden() {
        let matrix = build_matrix(&chars("HELLO,ALA")).unwrap();
        let got: Vec<u8> = (1..=3)
            .flat_map(|r| (1..=3).map(move |c| (r, c)))
            .map(|(r, c)| matrix.value(r, c))
            .collect();
        assert_eq!(got, vec![11, 8, 15, 15, 18, 2, 4, 15, 4]);
    }

    #[test]
    fn split_blocks_tile_order() {
        let text = "HELLO TO BE THE BEST DO YOUR BEST";
        let matrix = build_matrix(&normalize_text(text).unwrap()).unwrap();
        assert_eq!(matrix.m(), 2);
        let blocks = matrix.blocks();
        // top-left tile: matrix rows 1..3 begin H E L / T O , / T H E
        let first: [[u8; 3]; 3] =
            std::array::from_fn(|r| std::array::from_fn(|c| blocks[0].cell(r + 1, c + 1)));
        assert_eq!(first, [[11, 8, 15], [23, 18, 2], [23, 11, 8]]);
        // top-right tile starts with cells 4..6 of the first matrix row: L O ,
        assert_eq!(
            [blocks[1].cell(1, 1), blocks[1].cell(1, 2), blocks[1].cell(1, 3)],
            [15, 18, 2]
        );
        // bottom-left tile starts with row 4: S T ,
        assert_eq!(
            [blocks[2].cell(1, 1), blocks[2].cell(1, 2), blocks[2].cell(1, 3)],
            [22, 23, 2]
        );
    }

    #[test]
    fn message_matrix_validates_shape_and_range() {
        assert_eq!(
            MessageMatrix::new(1, vec![0; 8]),
            Err(Error::DimensionMismatch { m: 1, cells: 8 })
        );
        let mut values = vec![0; 9];
        values[4] = 28;
        assert_eq!(
            MessageMatrix::new(1, values),
            Err(Error::ValueOutOfRange(28))
        );
        assert_eq!(
            MessageMatrix::from_blocks(2, &[Block::new([[0; 3]; 3]).unwrap()]),
            Err(Error::RowCountMismatch { m: 2, found: 1 })
        );
    }

    #[test]
    fn single_block_message_equals_matrix() {
        let matrix = build_matrix(&chars("HELLO,ALA")).unwrap();
        let blocks = matrix.blocks();
        assert_eq!(blocks.len(), 1);
        for r in 1..=3 {
            for c in 1..=3 {
                assert_eq!(blocks[0].cell(r, c), matrix.value(r, c));
            }
        }
    }

    #[test]
    fn ensure_minor_keeps_valid_messages_unchanged() {
        let symbols = chars("HELLO,ALA");
        let (kept, matrix) = ensure_minor_condition(&symbols).unwrap();
        assert_eq!(kept, symbols);
        assert_eq!(matrix, build_matrix(&symbols).unwrap());
    }

    #[test]
    fn ensure_minor_remediates_by_prepending() {
        let symbols = normalize_text("ALA JENAN").unwrap();
        let initial = build_matrix(&symbols).unwrap();
        assert!(initial.blocks()[0].to_matrix().minor22().is_zero());

        let (padded, matrix) = ensure_minor_condition(&symbols).unwrap();
        let mut expected = vec!['0'; 13];
        expected.extend_from_slice(&symbols);
        assert_eq!(padded, expected);
        assert_eq!(matrix.m(), 2);
        let minors: Vec<i64> = matrix
            .blocks()
            .iter()
            .map(|b| i64::try_from(b.to_matrix().minor22()).unwrap())
            .collect();
        assert_eq!(minors, vec![36, 27, 12, 42]);
    }

    #[test]
    fn ensure_minor_spreads_uniform_messages() {
        // A full board of one letter can never be fixed by prepending: every
        // reachable layout keeps some block's corners uniform.
        let symbols = vec!['A'; 9];
        let (spread, matrix) = ensure_minor_condition(&symbols).unwrap();
        let kept: Vec<char> = spread.iter().copied().filter(|&c| c != '0').collect();
        assert_eq!(kept, symbols);
        assert!(all_minors_nonzero(&matrix));
    }

    #[test]
    fn ensure_minor_covers_prepend_resistant_lengths() {
        // Lengths whose padding tail swallows whole blocks defeat the
        // prepend loop; the spread fallback must carry them.
        for len in [37usize, 85, 150] {
            let symbols: Vec<char> = (0..len)
                .map(|i| char::from(b'A' + (i % 26) as u8))
                .collect();
            let (_, matrix) = ensure_minor_condition(&symbols).unwrap();
            assert!(all_minors_nonzero(&matrix), "len = {len}");
        }
    }

    proptest! {
        #[test]
        fn normalize_never_emits_padding_symbol(words in prop::collection::vec("[a-zA-Z]{1,8}", 1..6)) {
            let text = words.join(" ");
            let symbols = normalize_text(&text).unwrap();
            prop_assert!(!symbols.contains(&'0'));
        }

        #[test]
        fn build_matrix_picks_minimal_m(len in 1usize..=250) {
            let symbols = vec!['B'; len];
            let matrix = build_matrix(&symbols).unwrap();
            let m = matrix.m();
            prop_assert!(9 * m * m >= len);
            prop_assert!(m == 1 || 9 * (m - 1) * (m - 1) < len);
        }

        #[test]
        fn blocks_roundtrip_through_reassembly(values in prop::collection::vec(0u8..=27, 36)) {
            let matrix = MessageMatrix::new(2, values).unwrap();
            let rebuilt = MessageMatrix::from_blocks(2, &matrix.blocks()).unwrap();
            prop_assert_eq!(matrix, rebuilt);
        }

        #[test]
        fn remediated_messages_have_nonzero_minors(words in prop::collection::vec("[A-Z]{1,8}", 1..8)) {
            let text = words.join(" ");
            let symbols = normalize_text(&text).unwrap();
            let (_, matrix) = ensure_minor_condition(&symbols).unwrap();
            prop_assert!(all_minors_nonzero(&matrix));
        }
    }
}
