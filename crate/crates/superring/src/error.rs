use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two broad classes, mirrored by the CLI exit codes:
/// input/parse problems ([`Error::is_input_error`] returns `true`) and
/// domain errors (everything else).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown generator `{name}` at byte {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("invalid algebra spec: {0}")]
    Spec(String),
    #[error("relation {index} (`{text}`) is not parity-homogeneous")]
    InhomogeneousRelation { index: usize, text: String },
    #[error("the relations generate the whole ring (1 lies in the ideal)")]
    TrivialQuotient,
    #[error("operation requires a finite base field")]
    InfiniteField,
    #[error("operation is undecided over an infinite field: {0}")]
    Undecided(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("zero is excluded here: {0}")]
    ZeroInput(String),
    #[error("unit input is excluded here: {0}")]
    UnitInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("factorization search exceeded the depth cap {0}")]
    CapExceeded(usize),
    #[error("witness verification failed: {0}")]
    VerificationFailed(String),
    #[error("ideal is not proper")]
    ImproperIdeal,
}

impl Error {
    /// True for errors caused by malformed textual input or specs
    /// (CLI exit code 2); false for domain errors (exit code 1).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::UnknownGenerator { .. }
                | Error::Spec(_)
                | Error::InhomogeneousRelation { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
