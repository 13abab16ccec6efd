use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A query exceeds what a precomputed table covers.
    #[error("range error: {0}")]
    Range(String),
    /// A request exceeds a configured resource cap.
    #[error("resource limit: {what} = {requested} exceeds cap {cap}")]
    ResourceLimit { what: &'static str, requested: u64, cap: u64 },
    /// An enclosure could not be made narrow enough at the digit cap.
    #[error("precision exhausted at {digits} digits: {context}")]
    PrecisionExhausted { digits: u32, context: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Range(_) => "range",
            Error::ResourceLimit { .. } => "resource",
            Error::PrecisionExhausted { .. } => "precision",
            Error::Parse(_) => "parse",
        }
    }
}
