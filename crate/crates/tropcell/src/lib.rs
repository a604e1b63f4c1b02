//! Cell decompositions of the tropical torus induced by arrangements of
//! tropical hyperplanes, together with the commutative-algebra side of the
//! picture: fine and coarse (co)type monomial ideals, minimal (co)cellular
//! resolutions with exactness certificates, Betti tables, and the dual mixed
//! subdivisions of dilated simplices obtained through the Cayley trick.
//!
//! All geometric computation is exact: coordinates are arbitrary-precision
//! rationals and every tie (sector boundary, forced equality, envelope
//! contact) is decided exactly, never numerically.

pub mod complex;
pub mod doc;
pub mod dual;
pub mod ideals;
pub mod linalg;
pub mod mixed;
pub mod pipeline;
pub mod rat;
pub mod render;
pub mod report;
pub mod resolution;
pub mod tropical;

use thiserror::Error;

/// Crate-wide error type. Variants are grouped by the failure class they
/// represent so the CLI can map them onto stable exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty coordinate list: ambient dimension must be at least 1")]
    EmptyCoordinates,
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("arrangement must contain at least one apex")]
    EmptyArrangement,
    #[error("infeasible constraint system: {0}")]
    Infeasible(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("variable space mismatch: {0}")]
    VariableSpaceMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("labeling violation: {0}")]
    LabelingViolation(String),
    #[error("face poset is not thin: {0}")]
    NotThin(String),
    #[error("incidence signs admit no consistent assignment: {0}")]
    SignAssignment(String),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Coarse classification of errors, shared by the CLI exit codes and the
/// C ABI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureClass {
    /// A computed object violated an invariant it was required to satisfy.
    InvariantViolation,
    /// The input was malformed, out of range, or outside the supported scope.
    InvalidInput,
    /// An enumeration exceeded a configured size or time budget.
    ResourceLimit,
}

impl Error {
    /// Which of the three failure classes this error belongs to.
    pub fn class(&self) -> FailureClass {
        match self {
            Error::EmptyCoordinates
            | Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::EmptyArrangement
            | Error::Precondition(_)
            | Error::Unsupported(_)
            | Error::InvalidDocument(_)
            | Error::Io(_) => FailureClass::InvalidInput,
            Error::ResourceLimit(_) => FailureClass::ResourceLimit,
            Error::Infeasible(_)
            | Error::VariableSpaceMismatch(_)
            | Error::LabelingViolation(_)
            | Error::NotThin(_)
            | Error::SignAssignment(_)
            | Error::Calibration(_)
            | Error::Consistency(_) => FailureClass::InvariantViolation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
