use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("map does not factor through the quotient: {0}")]
    DoesNotFactor(String),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("cells are not composable: {0}")]
    NotComposable(String),
    #[error("cells are not parallel: {0}")]
    NotParallel(String),
    #[error("not a bialgebra: {0}")]
    NotABialgebra(String),
    #[error("not a structure-preserving map: {0}")]
    NotAMorphism(String),
    #[error("invalid entwining object: {0}")]
    InvalidObject(String),
    #[error("invalid 1-cell: {0}")]
    InvalidOneCell(String),
    #[error("invalid 2-cell: {0}")]
    InvalidTwoCell(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dims(
        context: &'static str,
        expected: impl ToString,
        found: impl ToString,
    ) -> Self {
        Error::DimensionMismatch {
            context,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
