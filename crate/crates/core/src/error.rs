use thiserror::Error;

use crate::Nat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be a positive integer")]
    ZeroInput,

    #[error("table of {requested} entries exceeds the memory budget of {budget} entries")]
    LimitTooLarge { requested: u64, budget: u64 },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// `t − u` would truncate because σ(u) < u.
    #[error("degenerate subtraction: t = {t} is smaller than u = {u}")]
    DegenerateSubtraction { t: Nat, u: Nat },

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),

    /// The sieve and the brute-force divisor sum disagree on a reported pair.
    #[error("oracle disagreement while re-verifying ({m}, {n})")]
    OracleMismatch { m: Nat, n: Nat },

    #[error("invalid natural number `{0}`")]
    ParseNat(String),

    #[error("serialization failed: {0}")]
    Serialization(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Serialization(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Serialization(err.to_string())
    }
}
