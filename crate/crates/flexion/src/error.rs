use thiserror::Error;

use crate::exact::Alphabet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: Alphabet, found: Alphabet },

    #[error("{op} is only defined on {expected}-moulds")]
    WrongAlphabet { op: &'static str, expected: Alphabet },

    #[error("no substitution image for variable {0}")]
    MissingImage(String),

    #[error("{op}: depth-0 component must be {expected}, found {found}")]
    DepthZero {
        op: &'static str,
        expected: &'static str,
        found: String,
    },

    #[error("depth {requested} exceeds truncation depth {max_depth}")]
    DepthExceeded { requested: usize, max_depth: usize },

    #[error("division by a linear form that vanishes identically")]
    ZeroDivisor,

    #[error("not a flexion unit: {0}")]
    NotFlexionUnit(String),

    #[error("polynomial has a component outside Q<C> + Qx: {0}")]
    NotInCAlgebra(String),

    #[error("mould component at depth {0} is not a polynomial")]
    NotPolynomial(usize),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported format version {0}")]
    Version(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
