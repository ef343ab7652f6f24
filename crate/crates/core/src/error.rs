use thiserror::Error;

/// Every failure the engine can report.
///
/// Variants whose doc says "implementation bug" are internal consistency
/// checks; the CLI maps them to exit status 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("F_{p} has no primitive {n}-th root of unity")]
    NoRootOfUnity { p: u64, n: u64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// Implementation bug: a defining relation fails in the structure constants.
    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),
    #[error("unknown generator symbol `{0}`")]
    UnknownSymbol(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("field too small: need p > {needed}, have p = {p}")]
    FieldTooSmall { p: u32, needed: usize },
    #[error("splitting failed: {0}")]
    SplittingFailed(String),
    #[error("algebra carries no Hopf data")]
    MissingHopfData,
    #[error("relation `{0}` violated by the generator matrices")]
    RelationViolated(String),
    #[error("modules or maps live over different algebras")]
    AlgebraMismatch,
    #[error("operation not supported for algebra `{0}`")]
    UnsupportedAlgebra(String),
    #[error("algebra has no simple/PIM tables")]
    MissingTables,
    #[error("element is not idempotent")]
    NotIdempotent,
    /// Implementation bug: a lifting system through an exact complex had no solution.
    #[error("chain map lift failed at degree {0}")]
    LiftFailed(usize),
    #[error("the zero class was supplied where a nonzero class is required")]
    ZeroClass,
    #[error("identification with the basic algebra failed: {0}")]
    IdentificationFailed(String),
    #[error("bad identification: {0}")]
    BadIdentification(String),
    /// Implementation bug: the reciprocity map is not a bijective intertwiner.
    #[error("reciprocity witness is not bijective")]
    WitnessNotBijective,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("linear system has no solution")]
    NoSolution,
    /// Implementation bug: a structural invariant failed after construction.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for variants that indicate an internal inconsistency rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::RelationCheckFailed(_)
                | Error::LiftFailed(_)
                | Error::WitnessNotBijective
                | Error::Invariant(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
