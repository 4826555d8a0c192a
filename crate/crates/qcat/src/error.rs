use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QcatError {
    #[error("object mismatch in {context}: expected {expected}, found {found}")]
    ObjectMismatch {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("unknown label `{label}` on object {object}")]
    UnknownLabel { label: String, object: String },

    #[error("empty objects are not allowed")]
    EmptyObject,

    #[error("duplicate label `{0}` in object")]
    DuplicateLabel(String),

    #[error("zero is not invertible")]
    ZeroNotInvertible,

    #[error("backend `{backend}` lacks capability: {capability}")]
    CapabilityMissing {
        backend: &'static str,
        capability: &'static str,
    },

    #[error("preparation is not normalizable in backend `{backend}`: no scalar s with s* . s = {sqnorm}")]
    NotNormalizableInBackend { backend: &'static str, sqnorm: String },

    #[error("object {0} is not a unit object")]
    NotUnitObject(String),

    #[error("generator table is incomplete: missing entry for ({0}, {1})")]
    IncompleteTable(String, String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("cannot parse scalar literal `{literal}` for backend `{backend}`: {reason}")]
    BadScalarLiteral {
        backend: &'static str,
        literal: String,
        reason: String,
    },

    #[error("parse error at {line}:{col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("type mismatch: {context}: left is {left}, right is {right}")]
    TypeMismatch {
        context: &'static str,
        left: String,
        right: String,
    },

    #[error("bad arrow file: {0}")]
    BadArrowFile(String),

    #[error("unknown backend `{0}` (expected bool|rat|gauss|f2|f5|qsqrt2|cplx64)")]
    UnknownBackend(String),
}

pub type Result<T> = std::result::Result<T, QcatError>;
