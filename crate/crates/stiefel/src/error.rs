use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Parameters fail a family's hard validity constraints.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    /// Operands with mismatched field tags or dimensions.
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    /// An internal consistency check failed during construction; indicates a bug.
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    /// A caller-side precondition was violated.
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
