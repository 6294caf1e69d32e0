use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: [{0}] vs [{1}]")]
    ContextMismatch(String, String),

    #[error("prime field modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("duplicate variable name `{0}` in ring context")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("no image given for variable `{0}`")]
    MissingImage(String),

    #[error("image of `{0}` is not a unit")]
    NonUnitImage(String),

    #[error("exponent vector has length {got}, context arity is {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not monomial: {0}")]
    NotMonomial(String),

    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),

    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),

    #[error("variable `{0}` is not a member of an indexed family")]
    NotIndexedFamily(String),

    #[error("strand count mismatch: expected {expected}, got {got}")]
    StrandMismatch { expected: usize, got: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("word contains a virtual generator but the representation is classical")]
    VirtualLetter,

    #[error("virtual crossing present but mode `{0}` is classical")]
    VirtualInClassicalMode(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("string link is not pure")]
    NotPure,

    #[error("n must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("semidirect compatibility fails: {0}")]
    Compatibility(String),

    #[error("{0}")]
    Degenerate(String),
}

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
