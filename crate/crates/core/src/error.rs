use thiserror::Error;

/// Errors surfaced by the engine. All arithmetic is exact, so every error
/// here is a domain or configuration problem, never a numerical one.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symbolic weight t{index} exceeds the variable budget {budget}")]
    Budget { index: usize, budget: usize },

    #[error("custom weight list (length {len}) has no weight for block size {index}")]
    CustomWeight { index: usize, len: usize },

    #[error("enumeration of {n} elements exceeds the oracle cap {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("umbral expression degree {degree} exceeds umbra order {order}")]
    UmbraDegree { degree: usize, order: usize },

    #[error("triangle entry ({n}, {k}) is outside the domain 0 <= k <= n")]
    TriangleDomain { n: usize, k: usize },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient sequence too short: need {need} entries, have {have}")]
    ShortSequence { need: usize, have: usize },

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),

    #[error("duplicate identity id {0:?}")]
    DuplicateIdentity(String),

    #[error("missing parameter {0:?}")]
    MissingParameter(String),

    #[error("parameter {name} = {value} is outside the checkable domain (max {max})")]
    OutOfDomain {
        name: String,
        value: i64,
        max: i64,
    },

    #[error("unexpected parameter {0:?} for this identity")]
    UnexpectedParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
