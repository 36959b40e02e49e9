use thiserror::Error;

/// Errors raised by the evaluators and the grid harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A gamma function was requested at a non-positive integer.
    #[error("gamma pole at argument {0}")]
    Pole(f64),

    #[error("binomial({n}, {k}) is out of range: k > n")]
    Range { n: u32, k: u32 },

    /// A hypergeometric denominator Pochhammer vanished before the series terminated.
    #[error("denominator parameter {param} vanishes at term {term}")]
    DenominatorPole { param: f64, term: usize },

    #[error("invalid sum specification: {0}")]
    InvalidSpec(String),

    #[error("invalid Kummer case: {0}")]
    InvalidCase(String),

    /// The requested closed form does not cover this parameter range.
    #[error("{0}")]
    Constraint(String),

    #[error("invalid grid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
