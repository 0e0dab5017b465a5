use thiserror::Error;

/// Errors raised by the analysis library.
///
/// Analysis outcomes (infeasible, inconclusive, assumption failures) are
/// values, not errors; this type only covers invalid input and internal
/// limits.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("precision must be at least {min} digits, got {got}")]
    PrecisionTooLow { min: u32, got: u32 },

    #[error("polynomial must be non-constant")]
    ConstantPolynomial,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("unknown method {name:?}; available: {}", available.join(", "))]
    UnknownMethod { name: String, available: Vec<String> },

    #[error("malformed method: {0}")]
    MalformedMethod(String),

    #[error("method violates the basic assumptions: {0}")]
    InvalidMethod(String),

    #[error("gamma must be positive")]
    NonPositiveGamma,

    #[error("closed form unavailable, use direct evaluation: {0}")]
    ClosedFormUnavailable(String),

    #[error("precision cap of {cap_digits} digits reached: {context}")]
    PrecisionExhausted { cap_digits: u32, context: String },

    #[error("root enclosure failed: {0}")]
    RootEnclosure(String),

    #[error("{0}")]
    Inconclusive(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
