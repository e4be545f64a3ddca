use thiserror::Error;

/// Errors raised while building or parsing posets and derived objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("posets are limited to {max} elements, got {got}")]
    TooLarge { got: usize, max: usize },
    #[error("label sets of the two posets overlap at `{0}`")]
    LabelCollision(String),
    #[error("invalid label `{0}`: labels must be nonempty and free of whitespace, `<`, `,`, `#`, braces")]
    InvalidLabel(String),
}

/// A parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice family is empty")]
    Empty,
    #[error("member {0:#x} is not an ideal of the base poset")]
    NotIdeal(u64),
    #[error("member {0:#x} appears twice")]
    Duplicate(u64),
    #[error("family is not closed under union and intersection")]
    NotClosed,
    #[error("element order is not a linear extension of inclusion")]
    NotLinearExtension,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("poset is not (2+2)-free")]
    Not2Plus2Free,
    #[error("invalid composition matrix: {0}")]
    InvalidMatrix(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("poset enumeration is capped at {max} elements, requested {requested}")]
    BoundExceeded { requested: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("subduction did not terminate within {0} iterations")]
    IterationCap(usize),
    #[error("`{0:?}` is not a linear extension of the lattice")]
    NotLinearExtension(Vec<usize>),
    #[error("edge {0:?} of the walk has no generator")]
    UnmappedEdge((usize, usize)),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum CheckError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("sweep disagreement on poset:\n{poset}\n{detail}")]
    Disagreement { poset: String, detail: String },
}
