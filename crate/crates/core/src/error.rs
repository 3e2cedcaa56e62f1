use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid surface (genus {genus}, punctures {punctures}): {reason}")]
    InvalidSurface {
        genus: u32,
        punctures: u32,
        reason: &'static str,
    },

    #[error("boundary index {index} out of range 1..={punctures}")]
    InvalidBoundaryIndex { index: usize, punctures: u32 },

    #[error("generator index {0} outside the surface rank")]
    GeneratorOutOfRange(usize),

    #[error("invalid slope {0}/{1}")]
    InvalidSlope(i64, i64),

    #[error("symbolic trace reduction needs a rank-2 surface, got rank {0}")]
    RankNotTwo(usize),

    #[error("no image for generator {0}")]
    MissingGenerator(usize),

    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),

    #[error("basis search exhausted: {0}")]
    BasisSearchExhausted(String),

    #[error("linear system has no solution")]
    Inconsistent,

    #[error("linear system is rank deficient (rank {rank}, unknowns {unknowns})")]
    RankDeficient { rank: usize, unknowns: usize },

    #[error("fit failed: {0}")]
    FitFailed(String),

    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),

    #[error("not a sign action")]
    NotASignAction,

    #[error("coordinate maps act on different coordinate systems")]
    SystemMismatch,

    #[error("invalid lamination: {0}")]
    InvalidLamination(String),

    #[error("boundary trace is not constant in t: {0}")]
    NonConstantBoundary(String),

    #[error("no weighted-slope dominator at height {0}")]
    NoDominator(u64),

    #[error("domination inequality violated: {0}")]
    DominationViolated(String),

    #[error("braid index {index} out of range 1..{r}")]
    BraidIndex { index: usize, r: usize },

    #[error("parity mismatch: r = {r} cannot carry n = {n} boundary components")]
    ParityMismatch { r: usize, n: u8 },

    #[error("configuration sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
