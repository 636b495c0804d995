use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("the empty sum is undefined in a semifield")]
    EmptySum,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by {divisor} left a nonzero remainder")]
    InexactDivision { divisor: String },

    #[error("polynomial is not in the span of the Schur Laurent polynomials: {0}")]
    NotInSchurSpan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
