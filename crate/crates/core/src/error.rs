use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("zero quaternion has no inverse")]
    NotInvertible,

    #[error("scalar-vector form is inconsistent: {0}")]
    InvalidScalarVector(&'static str),

    #[error("invalid orthonormal triad: {0}")]
    InvalidTriad(String),
}
