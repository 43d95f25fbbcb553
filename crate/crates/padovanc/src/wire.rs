//! The on-disk coded-message format.
//!
//! Line 1 is exactly `PADOVANC v1 m=<m>`. Then `m*m` lines follow, one per
//! block in tile order, each carrying nine base-10 integers joined by single
//! commas with no spaces: the determinant, then the eight disclosed entries.
//! Every line ends with LF and nothing follows the last row. Determinants
//! are written in full; they can be negative and arbitrarily large.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::codec::{CodedMessage, CodedRow};
use crate::error::Error;

const MAGIC: &str = "PADOVANC";
const VERSION: &str = "v1";

/// Render a coded message as UTF-8 bytes. Output is byte-deterministic.
pub fn serialize(coded: &CodedMessage) -> String {
    let mut out = format!("{MAGIC} {VERSION} m={}\n", coded.m);
    for row in &coded.rows {
        out.push_str(&row.d.to_string());
        for entry in row.disclosed {
            out.push(',');
            out.push_str(&entry.to_string());
        }
        out.push('\n');
    }
    out
}

/// Strict inverse of [`serialize`].
pub fn parse(bytes: &[u8]) -> Result<CodedMessage, Error> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| Error::BadHeader("file is not UTF-8 text".into()))?;
    let body = text.strip_suffix('\n').ok_or(Error::BadLineTermination)?;
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let m = parse_header(header)?;
    let expected = m
        .checked_mul(m)
        .ok_or_else(|| Error::BadHeader(format!("m = {m} is too large")))?;
    let row_lines: Vec<&str> = lines.collect();
    if row_lines.len() != expected {
        return Err(Error::RowCountMismatch {
            m,
            found: row_lines.len(),
        });
    }
    let mut rows = Vec::with_capacity(expected);
    for (i, line) in row_lines.iter().enumerate() {
        rows.push(parse_row(line, i + 2)?);
    }
    Ok(CodedMessage { m, rows })
}

fn parse_header(header: &str) -> Result<usize, Error> {
    let m_token = header
        .strip_prefix(MAGIC)
        .and_then(|rest| rest.strip_prefix(' '))
        .and_then(|rest| rest.strip_prefix(VERSION))
        .and_then(|rest| rest.strip_prefix(' '))
        .and_then(|rest| rest.strip_prefix("m="))
        .ok_or_else(|| Error::BadHeader(format!("expected `{MAGIC} {VERSION} m=<m>`")))?;
    let m: usize = m_token
        .parse()
        .map_err(|_| Error::BadHeader(format!("bad block count {m_token:?}")))?;
    if m == 0 {
        return Err(Error::BadHeader("m must be positive".into()));
    }
    Ok(m)
}

fn parse_row(line: &str, line_no: usize) -> Result<CodedRow, Error> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 9 {
        return Err(Error::BadFieldCount {
            line: line_no,
            found: fields.len(),
        });
    }
    let d = BigInt::from_str(fields[0]).map_err(|_| Error::BadIntegerField {
        line: line_no,
        field: 1,
    })?;
    let mut disclosed = [0u8; 8];
    for (i, field) in fields[1..].iter().enumerate() {
        let value = BigInt::from_str(field).map_err(|_| Error::BadIntegerField {
            line: line_no,
            field: i + 2,
        })?;
        disclosed[i] = u8::try_from(&value)
            .ok()
            .filter(|&v| v <= 27)
            .ok_or(Error::EntryOutOfRange {
                line: line_no,
                field: i + 2,
            })?;
    }
    Ok(CodedRow { d, disclosed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example_message() -> CodedMessage {
        CodedMessage {
            m: 1,
            rows: vec![CodedRow {
                d: BigInt::from(2208),
                disclosed: [11, 8, 15, 15, 3, 4, 15, 4],
            }],
        }
    }

    #[test]
    fn serialize_golden_bytes() {
        assert_eq!(
            serialize(&example_message()),
            "PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15,4\n"
        );
    }

    #[test]
    fn serialize_negative_determinant() {
        let coded = CodedMessage {
            m: 1,
            rows: vec![CodedRow {
                d: BigInt::from(-794),
                disclosed: [5, 8, 3, 23, 8, 3, 5, 8],
            }],
        };
        let text = serialize(&coded);
        assert!(text.ends_with("-794,5,8,3,23,8,3,5,8\n"));
    }

    #[test]
    fn parse_inverts_serialize_on_example() {
        let coded = example_message();
        assert_eq!(parse(serialize(&coded).as_bytes()).unwrap(), coded);
    }

    #[test]
    fn parse_rejects_bad_headers() {
        for text in [
            "2208,11,8,15,15,3,4,15,4\n",
            "PADOVAN v1 m=1\nrow\n",
            "PADOVANC v2 m=1\nrow\n",
            "PADOVANC v1 m=0\n",
            "PADOVANC v1 m=x\n",
            "PADOVANC v1 m= 1\n",
            "PADOVANC  v1 m=1\n",
        ] {
            assert!(
                matches!(parse(text.as_bytes()), Err(Error::BadHeader(_))),
                "{text:?}"
            );
        }
    }

    #[test]
    fn parse_rejects_wrong_row_count() {
        let text = "PADOVANC v1 m=2\n1,0,1,0,1,0,1,0,1\n1,0,1,0,1,0,1,0,1\n1,0,1,0,1,0,1,0,1\n";
        assert_eq!(
            parse(text.as_bytes()),
            Err(Error::RowCountMismatch { m: 2, found: 3 })
        );
    }

    #[test]
    fn parse_rejects_bad_field_counts() {
        let short = "PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15\n";
        assert_eq!(
            parse(short.as_bytes()),
            Err(Error::BadFieldCount { line: 2, found: 8 })
        );
        let long = "PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15,4,9\n";
        assert_eq!(
            parse(long.as_bytes()),
            Err(Error::BadFieldCount { line: 2, found: 10 })
        );
    }

    #[test]
    fn parse_rejects_non_integer_fields() {
        let text = "PADOVANC v1 m=1\nabc,11,8,15,15,3,4,15,4\n";
        assert_eq!(
            parse(text.as_bytes()),
            Err(Error::BadIntegerField { line: 2, field: 1 })
        );
        let spaced = "PADOVANC v1 m=1\n2208, 11,8,15,15,3,4,15,4\n";
        assert_eq!(
            parse(spaced.as_bytes()),
            Err(Error::BadIntegerField { line: 2, field: 2 })
        );
    }

    #[test]
    fn parse_rejects_out_of_range_entries() {
        for bad in ["30", "-1", "99999999999999999999999"] {
            let text = format!("PADOVANC v1 m=1\n2208,{bad},8,15,15,3,4,15,4\n");
            assert_eq!(
                parse(text.as_bytes()),
                Err(Error::EntryOutOfRange { line: 2, field: 2 }),
                "{bad}"
            );
        }
    }

    #[test]
    fn parse_enforces_line_termination() {
        assert_eq!(parse(b""), Err(Error::BadLineTermination));
        let unterminated = "PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15,4";
        assert_eq!(
            parse(unterminated.as_bytes()),
            Err(Error::BadLineTermination)
        );
        let trailing_blank = "PADOVANC v1 m=1\n2208,11,8,15,15,3,4,15,4\n\n";
        assert_eq!(
            parse(trailing_blank.as_bytes()),
            Err(Error::RowCountMismatch { m: 1, found: 2 })
        );
    }

    fn coded_message_strategy() -> impl Strategy<Value = CodedMessage> {
        (1usize..=3)
            .prop_flat_map(|m| {
                prop::collection::vec(
                    (any::<i128>(), prop::array::uniform8(0u8..=27)),
                    m * m..=m * m,
                )
                .prop_map(move |rows| CodedMessage {
                    m,
                    rows: rows
                        .into_iter()
                        .map(|(d, disclosed)| CodedRow {
                            d: BigInt::from(d),
                            disclosed,
                        })
                        .collect(),
                })
            })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(coded in coded_message_strategy()) {
            let bytes = serialize(&coded);
            prop_assert_eq!(serialize(&coded), bytes.clone());
            prop_assert_eq!(parse(bytes.as_bytes()).unwrap(), coded);
        }
    }
}
