use num_bigint::BigInt;

/// Everything that can go wrong across the pipeline, from text intake to the
/// wire format. The CLI maps these onto exit codes, so variants stay distinct
/// rather than collapsing into strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid character {0:?}: messages may contain only letters and single spaces")]
    InvalidCharacter(char),

    #[error("malformed spacing: leading, trailing, or doubled space")]
    MalformedSpacing,

    #[error("message is empty")]
    EmptyMessage,

    #[error("symbol {0:?} is not one of the 28 alphabet symbols")]
    UnknownSymbol(char),

    #[error("value {0} is outside the alphabet range 0..=27")]
    ValueOutOfRange(u8),

    #[error("invalid block count {0}: must be positive")]
    InvalidBlockCount(usize),

    #[error("matrix exponent must be positive")]
    ZeroExponent,

    #[error("block has a zero center minor, its center entry would be unrecoverable")]
    ZeroMinor,

    #[error("decode equation is singular: the center coefficient is zero")]
    SingularSystem,

    #[error("decode equation has no integer solution: the coded row is corrupt")]
    NonIntegerSolution,

    #[error("recovered center {0} is outside the alphabet range 0..=27")]
    CenterOutOfRange(BigInt),

    #[error("could not clear zero minors after {prepends} zero prepends (m = {m})")]
    RemediationFailed { prepends: usize, m: usize },

    #[error("coded message with m = {m} must carry m*m rows, found {found}")]
    RowCountMismatch { m: usize, found: usize },

    #[error("message matrix with m = {m} must hold 9*m*m entries, found {cells}")]
    DimensionMismatch { m: usize, cells: usize },

    #[error("bad header: {0}")]
    BadHeader(String),

    #[error("line {line}: expected 9 comma-separated fields, found {found}")]
    BadFieldCount { line: usize, found: usize },

    #[error("line {line}, field {field}: not a valid integer")]
    BadIntegerField { line: usize, field: usize },

    #[error("line {line}, field {field}: disclosed entry outside 0..=27")]
    EntryOutOfRange { line: usize, field: usize },

    #[error("file must end with a single newline and no trailing blank line")]
    BadLineTermination,
}
