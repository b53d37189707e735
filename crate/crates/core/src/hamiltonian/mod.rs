//! Poisson brackets, Hamiltonian flows, deformed Lax residuals and
//! integrability checks.

mod flow;
mod lax;
mod matrix;
mod space;
mod verify;

pub use flow::{flow_derivative, hamiltonian_derivative, matrix_derivative, poisson_bracket, Deformation};
pub use lax::{lax_residual, trace_power_conservation, LaxSystem};
pub use matrix::{char_poly, Matrix};
pub use space::PhaseSpace;
pub use verify::{rank_q, verify_integrable, VerificationReport, DEFAULT_WITNESS_POINTS};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HamiltonianError {
    #[error("symbol {0} appears twice in the phase space")]
    DuplicateSymbol(String),
    #[error("matrix rows are not all of the same length as the row count")]
    NotSquare,
    #[error("Lax matrices have sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("gauge matrix has a zero diagonal entry")]
    SingularGauge,
    #[error("every witness point hit a pole or the critical locus; choose another seed")]
    WitnessDegeneracy,
}

#[cfg(test)]
mod tests;
