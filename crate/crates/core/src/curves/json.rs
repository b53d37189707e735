use serde::{Deserialize, Serialize};

use crate::algebra::{parse_expr, Macros, MultiPoly, PolyJson, Symbol};

use super::models::{WeierstrassG1, WeierstrassG2};
use super::reduce::SpectralCurve;
use super::CurveError;

/// A polynomial given either as an infix expression or as a term list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Expr(String),
    Terms(PolyJson),
}

impl PolyInput {
    pub fn to_poly(&self) -> Result<MultiPoly, CurveError> {
        let bad = |e: String| CurveError::InvalidInput(e);
        match self {
            PolyInput::Expr(s) => {
                let r = parse_expr(s, &Macros::new()).map_err(|e| bad(format!("{}: {}", s, e)))?;
                r.as_poly().cloned().ok_or_else(|| bad(format!("{}: not a polynomial", s)))
            }
            PolyInput::Terms(j) => MultiPoly::from_json(j).map_err(bad),
        }
    }
}

/// Curve input format shared by the bundled catalog and user files.
///
/// `g1`: coefficients [a, b] of y^2 = x^3 + a x + b.
/// `g2`: coefficients [a0, ..., a6] of y^2 = a0 x^6 + ... + a6.
/// `spectral`: a plane curve F(x, y) = 0 with variables [x, y].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum CurveJson {
    G1 {
        coefficients: Vec<PolyInput>,
        fibration_variable: String,
    },
    G2 {
        coefficients: Vec<PolyInput>,
        fibration_variable: String,
    },
    Spectral {
        variables: Vec<String>,
        equation: PolyInput,
        fibration_variable: String,
    },
}

/// A curve over the line of its fibration variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberedCurve {
    G1(WeierstrassG1),
    G2(WeierstrassG2),
    Spectral(SpectralCurve),
}

impl FiberedCurve {
    pub fn fibration(&self) -> Symbol {
        match self {
            FiberedCurve::G1(w) => w.var,
            FiberedCurve::G2(w) => w.var,
            FiberedCurve::Spectral(c) => c.fibration,
        }
    }
}

impl CurveJson {
    pub fn to_curve(&self) -> Result<FiberedCurve, CurveError> {
        let bad = |e: &str| CurveError::InvalidInput(e.to_string());
        match self {
            CurveJson::G1 {
                coefficients,
                fibration_variable,
            } => {
                let [a, b] = coefficients.as_slice() else {
                    return Err(bad("g1 takes two coefficients"));
                };
                Ok(FiberedCurve::G1(WeierstrassG1::new(
                    a.to_poly()?,
                    b.to_poly()?,
                    Symbol::new(fibration_variable),
                )))
            }
            CurveJson::G2 {
                coefficients,
                fibration_variable,
            } => {
                if coefficients.len() != 7 {
                    return Err(bad("g2 takes seven coefficients"));
                }
                let cs: Vec<MultiPoly> = coefficients.iter().map(|c| c.to_poly()).collect::<Result<_, _>>()?;
                let a: [MultiPoly; 7] = cs.try_into().expect("length checked");
                Ok(FiberedCurve::G2(WeierstrassG2::new(a, Symbol::new(fibration_variable))))
            }
            CurveJson::Spectral {
                variables,
                equation,
                fibration_variable,
            } => {
                let [x, y] = variables.as_slice() else {
                    return Err(bad("spectral curves take variables [x, y]"));
                };
                Ok(FiberedCurve::Spectral(SpectralCurve {
                    poly: equation.to_poly()?,
                    x: Symbol::new(x),
                    y: Symbol::new(y),
                    fibration: Symbol::new(fibration_variable),
                }))
            }
        }
    }
}
