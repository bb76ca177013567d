use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("generators act on different degrees ({expected} and {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("the element set is not a subgroup of the given group")]
    NotASubgroup,
    #[error("the subgroup is not normal")]
    NotNormal,
    #[error("bad parameters for {kind}: {reason}")]
    BadParams { kind: &'static str, reason: String },
    #[error("action generator {0} is not an automorphism")]
    NotAnAutomorphism(usize),
    #[error("the action does not respect the relations of the acting group")]
    ActionIncompatible,
    #[error("no registered group SmallGroup({order}, {id})")]
    UnknownNamedGroup { order: usize, id: usize },
    #[error("registry group SmallGroup({order}, {id}) failed its element-order checksum")]
    RegistryDrift { order: usize, id: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is too large")]
    TooLarge(String),
    #[error("{p} does not divide the group order {order}")]
    PDoesNotDivide { p: u64, order: usize },
    #[error("operation is undefined on the trivial group")]
    TrivialGroup,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate corpus label {label:?} at line {line}")]
    DuplicateLabel { label: String, line: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
