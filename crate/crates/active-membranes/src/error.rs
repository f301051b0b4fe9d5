use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("unknown register `{0}`")]
    UnknownRegister(String),
    #[error("unknown instruction label `{0}`")]
    UnknownInstrLabel(String),
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("env cannot divide")]
    EnvDivide,
    #[error("env cannot communicate out")]
    EnvCommOut,
    #[error("env has no parent to communicate in from")]
    EnvCommIn,
    #[error("reserved object consumed: `{0}`")]
    ReservedObjectConsumed(String),
    #[error("division requires an elementary membrane label, `{0}` has children")]
    DivideNonLeaf(String),
    #[error("input multiset given but the system declares no input membrane")]
    NoInputMembrane,

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("object multiplicity overflow")]
    CountOverflow,
    #[error("machine repeats a configuration: configuration graph is cyclic")]
    CyclicMachine,

    #[error("malformed bit string `{0}`")]
    MalformedBits(String),
    #[error("malformed unary word: a `0` follows a `1`")]
    MalformedUnary,
    #[error("odd-length string cannot be de-interleaved")]
    OddLength,
    #[error("identity reduction requires exactly one query, got {0}")]
    IdentityArity(usize),
    #[error("query 1^{queried} exceeds the family bound q(n) = {bound}")]
    QueryOutOfRange { queried: u64, bound: u64 },

    #[error("{0}")]
    Family(String),
    #[error("mode `{0}` is not supported by this operation")]
    UnsupportedMode(String),

    #[error("circuit fan-in references gate g{0} out of range")]
    GateOutOfRange(usize),
    #[error("circuit input length mismatch: expected {expected}, got {got}")]
    InputLenMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { line, col, msg: msg.into() }
    }
}
