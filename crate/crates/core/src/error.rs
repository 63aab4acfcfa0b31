use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("division by zero in an integral domain")]
    DivisionByZero,
    #[error("invalid multiplicative set: {0}")]
    InvalidMultSet(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("element of degree {degree} lies outside the ambient space of degree <= {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },
    #[error("subgroups live in different ambient spaces")]
    AmbientMismatch,
    #[error("infinite result: {0}")]
    Infinite(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Machine-readable category used by the CLI.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidRing(_) => "invalid_ring",
            Error::RingMismatch(_) => "ring_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::InvalidMultSet(_) => "invalid_mulset",
            Error::Unsupported(_) => "unsupported",
            Error::DegreeOverflow { .. } => "degree_overflow",
            Error::AmbientMismatch => "ambient_mismatch",
            Error::Infinite(_) => "infinite",
            Error::Budget(_) => "budget",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }

    /// Exit code: 2 for exhausted budgets or bounds, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) | Error::Infinite(_) | Error::DegreeOverflow { .. } => 2,
            _ => 1,
        }
    }
}
