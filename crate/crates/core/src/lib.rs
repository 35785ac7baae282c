//! Exact arithmetic in towers of local fields, Honda formal groups built from
//! their types, and constructive verification of the generators-and-relations
//! structure of the point module `F(p_M)` over the group ring of an unramified
//! extension.
//!
//! Everything is computed modulo a fixed power of the uniformizer; there is no
//! floating point anywhere. Results are exact at the declared precision and
//! every operation that could silently degrade below it aborts instead.

pub mod fixtures;
pub mod fmodule;
pub mod galois;
pub mod honda;
pub mod prec;
pub mod report;
pub mod residue;
pub mod roots;
pub mod series;
pub mod snf;
pub mod structure;
pub mod tower;

pub use fmodule::{FPoint, GroupRingElement, ModuleCtx};
pub use galois::{frobenius_generator, GaloisData};
pub use honda::{FormalGroup, HondaType, TorsionModule};
pub use prec::Precision;
pub use report::{emit, run, Report, RunConfig};
pub use roots::roots_in_field;
pub use series::{TruncSeries1, TruncSeries2};
pub use structure::{HypothesisCheck, PresentationReport};
pub use tower::{FieldElement, FieldTower, StepKind};

use thiserror::Error;

/// Error type shared by every layer of the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not Eisenstein over the level below: {0}")]
    NotEisenstein(String),
    #[error("reduction of the step polynomial is not irreducible over the residue field")]
    NotIrreducibleResidue,
    #[error("requested precision is too low: {0}")]
    PrecisionTooLow(String),
    #[error("operands belong to different field towers")]
    TowerMismatch,
    #[error("division by an element that is zero at working precision")]
    DivisionBelowPrecision,
    #[error("extension is not unramified over the base of the Galois data")]
    NotUnramifiedOverL,
    #[error("two candidate roots agree through the report precision")]
    PrecisionTooLowToSeparate,
    #[error("series live over different coefficient fields or degrees")]
    FieldMismatch,
    #[error("linear coefficient of the series is not a unit")]
    NonUnitLinearTerm,
    #[error("guard digits exhausted: {0}")]
    GuardExhausted(String),
    #[error("no coefficient of the type is a unit; height is infinite")]
    InfiniteHeight,
    #[error("group law has a non-integral coefficient at degree {0}")]
    NonIntegralLaw(usize),
    #[error("endomorphism has a non-integral coefficient at degree {0}")]
    NonIntegralEndo(usize),
    #[error("truncation degree {have} is below the required {need}")]
    TruncationTooShort { have: usize, need: usize },
    #[error("graded solver failed to make progress (valuation stuck at {0})")]
    NonConvergence(i64),
    #[error("coboundary solver requires a norm-zero input")]
    NormNotZero,
    #[error("point operands belong to different groups or towers")]
    Mismatch,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(HypothesisFailure),
    #[error("computed quotient dimension {computed} differs from the formula value {expected}")]
    FormulaMismatch { computed: usize, expected: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invariant factors of the presented module differ from the point module: {0}")]
    InvariantMismatch(String),
    #[error("config error: {0}")]
    ConfigParseError(String),
}

/// Reasons a tower pair can fall outside the structure theorem's hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisFailure {
    /// The smaller field contains no torsion point of the group at all.
    NoTorsion,
    /// The torsion met in the two fields differs or is not a full level.
    UnequalIntersections,
    /// The larger field picks up torsion beyond the level seen downstairs.
    ExtraTorsionInM,
}

impl std::fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HypothesisFailure::NoTorsion => write!(f, "no-torsion"),
            HypothesisFailure::UnequalIntersections => write!(f, "unequal-intersections"),
            HypothesisFailure::ExtraTorsionInM => write!(f, "extra-torsion-in-M"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
