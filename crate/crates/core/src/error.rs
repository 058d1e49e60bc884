use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial vanishes at 0; strip powers of t first")]
    VanishesAtZero,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial has no real root")]
    NoRealRoot,

    #[error("division is not exact; remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} exceeded the cap of {cap}")]
    CapExceeded { what: &'static str, cap: u64 },

    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("Perron precondition violated: {0}")]
    PerronViolated(String),

    #[error("growth rate is at most 1: clique polynomial has no root in (0, 1)")]
    NoGrowth,

    #[error("invalid train track: {0}")]
    InvalidTrack(String),

    #[error("weight vector violates the switch condition at vertex {vertex}")]
    NotInWeightSpace { vertex: usize },

    #[error("boundary component {component} has {cusps} cusps; radical elements need an even count")]
    OddCusps { component: usize, cusps: usize },

    #[error("enclosures could not be separated within {rounds} refinement rounds")]
    Unseparated { rounds: u32 },

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl std::fmt::Display) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.to_string(),
        }
    }
}
