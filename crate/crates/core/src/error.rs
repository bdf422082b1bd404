use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent user input (JSON specs, labels, automorphisms).
    #[error("{0}")]
    Input(String),
    #[error("structure constants violate {axiom}: {detail}")]
    Axiom { axiom: String, detail: String },
    #[error("automorphisms over different backends")]
    BackendMismatch,
    #[error("infinite instance")]
    Infinite,
    #[error("canonical multiplier unavailable for {0}")]
    NoCanonicalMultiplier(String),
    #[error("grading mismatch: {0}")]
    Grading(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
