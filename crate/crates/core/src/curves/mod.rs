//! Fibered curve models: Weierstrass forms, charts at infinity and
//! reduction of spectral curves.

mod json;
mod models;
mod reduce;

pub use json::{CurveJson, FiberedCurve, PolyInput};
pub use models::{
    bar_symbol, infinity_model_g1, infinity_model_g2, normalize_g1, normalize_g2, Genus, InfinityModel,
    WeierstrassG1, WeierstrassG2,
};
pub use reduce::{reduce_to_weierstrass, reduce_with_branch, Branch, Reduction, Shape, SpectralCurve, WeierstrassModel};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("unsupported curve shape: {0}")]
    UnsupportedShape(String),
    #[error("the reduced model is singular for every fiber")]
    GenusDrop,
    #[error("both a0 and a1 vanish identically")]
    DegenerateSextic,
    #[error("the family is singular or a denominator vanishes identically")]
    SingularFamily,
    #[error("leading sextic coefficient depends on the fibration variable")]
    NoInfinityModel,
    #[error("invalid curve input: {0}")]
    InvalidInput(String),
}

#[cfg(test)]
mod tests;
