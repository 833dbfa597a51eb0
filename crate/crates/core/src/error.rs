use thiserror::Error;

use crate::idset::AtomId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    /// An enumeration guard tripped; `guard` names the bound.
    #[error("{guard} guard exceeded: {size} > {limit}")]
    TooLarge {
        guard: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("argument cap exceeded: more than {cap} arguments")]
    CapExceeded { cap: usize },

    #[error("atom {0} is not an assumption")]
    NotAnAssumption(AtomId),

    #[error("classic AF semantics require a framework without supports")]
    SupportsPresent,

    #[error("invalid framework: {0}")]
    Invalid(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing or malformed header, expected `{expected}`")]
    Header { expected: &'static str },
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("{kind} {value} out of range (1..={max})")]
    OutOfRange {
        kind: &'static str,
        value: i64,
        max: usize,
    },
    #[error("contrary on non-assumption {0}")]
    ContraryOnNonAssumption(usize),
    #[error("duplicate contrary declaration for {0}")]
    DuplicateContrary(usize),
    #[error("assumption {0} has no contrary")]
    MissingContrary(usize),
    #[error("no assumptions declared")]
    NoAssumptions,
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("empty clause")]
    EmptyClause,
    #[error("clause contains complementary literals {0} and -{0}")]
    Tautology(i64),
    #[error("unterminated clause at end of input")]
    UnterminatedClause,
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }
}
