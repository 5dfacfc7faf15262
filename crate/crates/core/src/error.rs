use std::fmt;

use thiserror::Error;

/// Position-tagged diagnostic from one of the text parsers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    pub fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate letter name `{0}`")]
    DuplicateLetter(String),
    #[error("letter `{name}` has nonpositive degree {degree}")]
    NonpositiveDegree { name: String, degree: i64 },
    #[error("`{0}` is reserved and cannot name a letter")]
    ReservedName(String),
    #[error("conflicting pairing entries for [{a}, {b}]: `{first}` vs `{second}`")]
    PairingConflict {
        a: String,
        b: String,
        first: String,
        second: String,
    },
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("letter `{0}` does not belong to the active alphabet")]
    AlphabetMismatch(String),
    #[error("the unit letter is not allowed as an operand of {0}")]
    UnitLetter(&'static str),
    #[error("{0} needs words of length at least 1")]
    EmptyWordOperand(&'static str),
    #[error("the rescaling map has no inverse at weight zero")]
    ZeroLambdaInverse,
    #[error("index sequence must have all entries positive")]
    ZeroEntryInIndex,
    #[error("alphabet has no letter with index {0}")]
    IndexOutOfRange(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("parse error at {0}")]
    Parse(ParseError),
    #[error("pairing file line {line}: {message}")]
    PairingFile { line: usize, message: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("at {line}:{column}: {source}")]
    Eval {
        line: usize,
        column: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("{0}")]
    Config(String),
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
