use thiserror::Error;

use crate::term::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("element index {index} out of range for an algebra of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("ortholattice law {law} fails at {witness}")]
    LatticeLaw { law: &'static str, witness: String },
    #[error("algebra is not in class {0}")]
    WrongClass(&'static str),
    #[error("size {size} outside the supported range 2..={max}")]
    SizeLimit { size: usize, max: usize },
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
