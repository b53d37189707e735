use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("polynomial is constant in {0}")]
    DegreeZero(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("leading coefficient {coefficient} vanishes at every witness point tried")]
    GenericityFailure { coefficient: String },
    #[error("place variable {0} does not occur")]
    VariableAbsent(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
