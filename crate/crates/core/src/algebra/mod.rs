//! Exact arithmetic kernel.

pub mod error;
pub mod expr;
pub mod gcd;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod symbol;
pub mod valuation;

pub use error::AlgebraError;
pub use expr::{parse_expr, parse_expr_with, Macro, Macros};
pub use gcd::gcd;
pub use poly::{Monomial, MultiPoly, PolyJson};
pub use ratfunc::RationalFunction;
pub use rational::{format_q, parse_q, q, qf, Q};
pub use resultant::{discriminant_nonzero, discriminant_poly, resultant};
pub use symbol::Symbol;
pub use valuation::{ord_at, ord_poly, Location, Place, Valuation, Witness, DEFAULT_SEED};
