use thiserror::Error;

use crate::algebra::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("generator index {index} exceeds arity {arity}")]
    Arity { index: usize, arity: usize },

    #[error("{what} requires characteristic 0 or greater than {bound}, got {field}")]
    UnsupportedCharacteristic {
        what: &'static str,
        bound: usize,
        field: Field,
    },

    #[error("{modulus} is not prime")]
    NotPrime { modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator {name:?} at {line}:{column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("block size {m} does not divide {n}")]
    BlockSize { m: usize, n: usize },

    #[error("representation is reducible")]
    Reducible,

    #[error("fingerprint shapes differ: {0}")]
    ShapeMismatch(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("value is not a scalar matrix: {0}")]
    NotCentral(String),

    #[error("oracle gave up: {0}")]
    GaveUp(String),
}
