//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("quiver is not acyclic")]
    CyclicQuiver,
    #[error("quasi-Cartan companion does not match the quiver: {0}")]
    CompanionMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("not an admissible cut: {0}")]
    NotAdmissibleCut(String),
    #[error("truncation bound {0} too small: length-{0} paths do not vanish in the quotient")]
    TruncationTooSmall(usize),
    #[error("path space exceeds cap while truncating at {0}; the quotient is unlikely to be finite-dimensional")]
    PathExplosion(usize),
    #[error("algebra is not schurian: dim e_y A e_x = {0} > 1")]
    NotSchurian(usize),
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("underlying graph is not a Dynkin diagram (A/D/E)")]
    NotDynkin,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("grading window too small: Hom(T, F^{0}T) is nonzero at the window boundary")]
    WindowTooSmall(i64),
    #[error("global dimension {0} exceeds 2")]
    GldimTooLarge(usize),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("not a Dynkin cluster-tilted quiver: {0}")]
    NotClusterQuiver(String),
    #[error("rolling potential failed to decrease: {0}")]
    PotentialNotDecreasing(String),
    #[error("rolling exceeded the maximal number of steps ({0})")]
    MaxStepsExceeded(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
