use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("element is not homogeneous (gradings {0:?})")]
    NotHomogeneous(Vec<i64>),

    #[error("element is a scalar; a non-scalar element is required")]
    Scalar,

    #[error("element is not in {0}")]
    NotInRing(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not in N(u, A1)")]
    NotInN,

    #[error("ad-iteration cap of {0} reached before the element was annihilated")]
    IterationCap(usize),

    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
