use rattrig::{FieldElement, FieldError, GeometryError, SolverError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    Config(String),
    #[error("drawing needs the rational field, not {0}")]
    UnsupportedField(String),
    #[error("exhaustive enumeration is limited to p <= {bound}, got {modulus}")]
    ExhaustiveBoundExceeded { modulus: u64, bound: u64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("inconsistent data: {0}")]
    InconsistentData(String),
    #[error("no in-field solution of {equation}: discriminant {discriminant} is not a square")]
    NotInField { equation: String, discriminant: String },
    #[error("{failures} law residual(s) were nonzero")]
    VerificationFailed { failures: u64 },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 success, 2 parse or configuration problems, 3 mathematical
    /// inconsistency, 4 no solution in the field.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_)
            | CliError::Field(_)
            | CliError::Config(_)
            | CliError::UnsupportedField(_)
            | CliError::ExhaustiveBoundExceeded { .. }
            | CliError::UnsupportedPattern(_) => 2,
            CliError::Geometry(_) | CliError::InconsistentData(_) | CliError::VerificationFailed { .. } => 3,
            CliError::NotInField { .. } => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<SolverError<FieldElement>> for CliError {
    fn from(e: SolverError<FieldElement>) -> Self {
        match e {
            SolverError::UnsupportedPattern(m) => CliError::UnsupportedPattern(m),
            SolverError::InconsistentData(m) => CliError::InconsistentData(m),
            SolverError::NotInField {
                equation,
                discriminant,
            } => CliError::NotInField {
                equation,
                discriminant: discriminant.to_string(),
            },
        }
    }
}
