use std::collections::HashMap;

use num_traits::One;

use crate::algebra::gcd::{gcd, primitive_part_in, squarefree_in};
use crate::algebra::ratfunc::subs_poly;
use crate::algebra::{discriminant_nonzero, qf, MultiPoly, RationalFunction, Symbol, Q};

use super::models::{Genus, WeierstrassG1, WeierstrassG2};
use super::CurveError;

/// Plane curve F(x, y) = 0 fibered over the line of `fibration`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralCurve {
    pub poly: MultiPoly,
    pub x: Symbol,
    pub y: Symbol,
    pub fibration: Symbol,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeierstrassModel {
    G1(WeierstrassG1),
    G2(WeierstrassG2),
}

impl WeierstrassModel {
    pub fn genus(&self) -> Genus {
        match self {
            WeierstrassModel::G1(_) => Genus::One,
            WeierstrassModel::G2(_) => Genus::Two,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// y^2 = f(x)
    Weierstrass,
    /// c(x) y^2 + p(x) y + q(x) = 0
    Quadratic,
    /// y^4 - P(x) y^2 + Q(x) = 0
    Biquadratic,
}

/// Branch of the square root in the biquadratic reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Weierstrass model with the coordinate change that produced it.
///
/// When `coordinates` is present, substituting X and Y (rational in the
/// source x, y) into the model equation gives an element of the ideal of the
/// source polynomial. A quartic is replaced by its Jacobian, which has no
/// such coordinate map.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub model: WeierstrassModel,
    pub shape: Shape,
    pub coordinates: Option<(RationalFunction, RationalFunction)>,
    /// Radicand P^2 - 4Q of a biquadratic curve.
    pub radicand: Option<MultiPoly>,
    pub jacobian: bool,
}

impl Reduction {
    /// Checks that the recorded coordinates map the model into the ideal of the source.
    pub fn certify(&self, curve: &SpectralCurve) -> Option<bool> {
        let (cx, cy) = self.coordinates.as_ref()?;
        let (mx, my) = (Symbol::new("__X"), Symbol::new("__Y"));
        let eq = match &self.model {
            WeierstrassModel::G1(w) => w.equation(mx, my),
            WeierstrassModel::G2(w) => w.equation(mx, my),
        };
        let mut b = HashMap::new();
        b.insert(mx, cx.clone());
        b.insert(my, cy.clone());
        let r = RationalFunction::from_poly(eq).subs(&b).ok()?;
        Some(r.is_zero() || r.num().div_exact(&curve.poly).is_some())
    }
}

/// Transforms a supported curve into Weierstrass form.
pub fn reduce_to_weierstrass(c: &SpectralCurve) -> Result<Reduction, CurveError> {
    reduce_with_branch(c, Branch::Plus)
}

pub fn reduce_with_branch(c: &SpectralCurve, branch: Branch) -> Result<Reduction, CurveError> {
    let (x, y) = (c.x, c.y);
    let cs = c.poly.coeffs_in(y);
    let dy = cs.len().saturating_sub(1);
    let xr = RationalFunction::var(x);
    let yr = RationalFunction::var(y);
    match dy {
        2 => {
            let (cc, p, q) = (&cs[2], &cs[1], &cs[0]);
            if cc.contains_var(y) || p.contains_var(y) || q.contains_var(y) {
                return Err(CurveError::UnsupportedShape("coefficients involve y".into()));
            }
            if p.is_zero() && cc.is_constant() {
                let inv = Q::one() / cc.constant_value().unwrap();
                let f = (-q).scale(&inv);
                let mut r = finish(&f, x, c.fibration, xr, yr)?;
                r.shape = Shape::Weierstrass;
                return Ok(r);
            }
            // (2 c y + p)^2 = p^2 - 4 c q
            let f = &p.pow(2) - &(cc * q).scale(&Q::from_integer(4.into()));
            let ny = &(&RationalFunction::from_poly(cc.scale(&Q::from_integer(2.into()))) * &yr)
                + &RationalFunction::from_poly(p.clone());
            let mut r = finish(&f, x, c.fibration, xr, ny)?;
            r.shape = Shape::Quadratic;
            Ok(r)
        }
        4 => {
            if !cs[1].is_zero() || !cs[3].is_zero() {
                return Err(CurveError::UnsupportedShape("odd powers of y in a quartic".into()));
            }
            let lead = match cs[4].constant_value() {
                Some(v) => v,
                None => return Err(CurveError::UnsupportedShape("non-constant leading coefficient in y".into())),
            };
            let inv = Q::one() / lead;
            let pp = (-&cs[2]).scale(&inv);
            let qq = cs[0].scale(&inv);
            if pp.contains_var(y) || qq.contains_var(y) {
                return Err(CurveError::UnsupportedShape("coefficients involve y".into()));
            }
            biquadratic(&pp, &qq, c, branch)
        }
        _ => Err(CurveError::UnsupportedShape(format!("degree {} in y", dy))),
    }
}

fn biquadratic(pp: &MultiPoly, qq: &MultiPoly, c: &SpectralCurve, branch: Branch) -> Result<Reduction, CurveError> {
    let x = c.x;
    let radicand = &pp.pow(2) - &qq.scale(&Q::from_integer(4.into()));
    let dr = radicand.degree_in(x);
    if dr != 1 {
        return Err(CurveError::UnsupportedShape(format!(
            "radicand of degree {} in {}; only linear radicands are parametrized",
            dr, x
        )));
    }
    let rc = radicand.coeffs_in(x);
    let (alpha, beta) = (rc[1].clone(), rc[0].clone());
    let u = Symbol::new("__u");
    let ur = RationalFunction::var(u);
    let sign = match branch {
        Branch::Plus => RationalFunction::one(),
        Branch::Minus => RationalFunction::constant(-Q::one()),
    };
    // x = (u^2 - beta)/alpha, y^2 = (P(x) + u)/2
    let xu = (&(&ur.pow(2) - &RationalFunction::from_poly(beta)) / &RationalFunction::from_poly(alpha.clone()))
        .map_err(|_| CurveError::SingularFamily)?;
    let mut b = HashMap::new();
    b.insert(x, xu);
    let pu = RationalFunction::from_poly(pp.clone()).subs(&b).map_err(|_| CurveError::SingularFamily)?;
    let half = RationalFunction::constant(qf(1, 2));
    let f = &(&pu + &(&sign * &ur)) * &half;
    let m = pp.degree_in(x).div_ceil(2);
    let scale = RationalFunction::from_poly(alpha.pow(2 * m));
    let f = &f * &scale;
    let f = f.as_poly().cloned().ok_or(CurveError::SingularFamily)?;
    let f = rename(&f, u, x);
    // u = +-(2 y^2 - P(x)), Y = alpha^m y
    let yr = RationalFunction::var(c.y);
    let uexpr = &sign * &(&(&yr.pow(2) * &RationalFunction::constant(Q::from_integer(2.into())))
        - &RationalFunction::from_poly(pp.clone()));
    let yexpr = &RationalFunction::from_poly(alpha.pow(m)) * &yr;
    let mut r = finish(&f, x, c.fibration, uexpr, yexpr)?;
    r.shape = Shape::Biquadratic;
    r.radicand = Some(radicand);
    Ok(r)
}

fn rename(p: &MultiPoly, from: Symbol, to: Symbol) -> MultiPoly {
    p.subs(from, &MultiPoly::var(to))
}

/// Processes W^2 = f(X) where X, W are the current coordinates in terms of the source.
fn finish(
    f: &MultiPoly,
    x: Symbol,
    fib: Symbol,
    cx: RationalFunction,
    cy: RationalFunction,
) -> Result<Reduction, CurveError> {
    if f.is_zero() {
        return Err(CurveError::GenusDrop);
    }
    let (f, s) = strip_squares(f, x);
    let mut at = HashMap::new();
    at.insert(x, cx.clone());
    let s = subs_poly(&s, &at).map_err(|_| CurveError::SingularFamily)?;
    let cy = (&cy / &s).map_err(|_| CurveError::SingularFamily)?;
    let d = f.degree_in(x);
    let check_genus = |f: &MultiPoly| -> Result<(), CurveError> {
        match discriminant_nonzero(f, x) {
            Ok(true) => Ok(()),
            _ => Err(CurveError::GenusDrop),
        }
    };
    match d {
        0..=2 => Err(CurveError::GenusDrop),
        3 => {
            check_genus(&f)?;
            let co = f.coeffs_in(x);
            let (c0, c1, c2, c3) = (&co[0], &co[1], &co[2], &co[3]);
            // X = c3 x + c2/3, Y = c3 y
            let third = qf(1, 3);
            let a = &(c1 * c3) - &c2.pow(2).scale(&third);
            let b = &(&c2.pow(3).scale(&qf(2, 27)) - &(&(c1 * c2) * c3).scale(&third)) + &(c0 * &c3.pow(2));
            let c3r = RationalFunction::from_poly(c3.clone());
            let nx = &(&c3r * &cx) + &RationalFunction::from_poly(c2.scale(&third));
            let ny = &c3r * &cy;
            Ok(Reduction {
                model: WeierstrassModel::G1(WeierstrassG1::new(a, b, fib)),
                shape: Shape::Weierstrass,
                coordinates: Some((nx, ny)),
                radicand: None,
                jacobian: false,
            })
        }
        4 => {
            check_genus(&f)?;
            let co = f.coeffs_in(x);
            let (e, dd, c, b, a) = (&co[0], &co[1], &co[2], &co[3], &co[4]);
            let i = &(&(a * e).scale(&Q::from_integer(12.into())) - &(b * dd).scale(&Q::from_integer(3.into())))
                + &c.pow(2);
            let j = &(&(&(&(&(a * c) * e).scale(&Q::from_integer(72.into()))
                + &(&(b * c) * dd).scale(&Q::from_integer(9.into())))
                - &(a * &dd.pow(2)).scale(&Q::from_integer(27.into())))
                - &(e * &b.pow(2)).scale(&Q::from_integer(27.into())))
                - &c.pow(3).scale(&Q::from_integer(2.into()));
            let m27 = Q::from_integer((-27).into());
            Ok(Reduction {
                model: WeierstrassModel::G1(WeierstrassG1::new(i.scale(&m27), j.scale(&m27), fib)),
                shape: Shape::Weierstrass,
                coordinates: None,
                radicand: None,
                jacobian: true,
            })
        }
        5 | 6 => {
            check_genus(&f)?;
            let co = f.coeffs_in(x);
            let a: [MultiPoly; 7] = std::array::from_fn(|i| co.get(6 - i).cloned().unwrap_or_else(MultiPoly::zero));
            Ok(Reduction {
                model: WeierstrassModel::G2(WeierstrassG2::new(a, fib)),
                shape: Shape::Weierstrass,
                coordinates: Some((cx, cy)),
                radicand: None,
                jacobian: false,
            })
        }
        _ => Err(CurveError::UnsupportedShape(format!("degree {} in {} exceeds genus two", d, x))),
    }
}

/// Writes f = s^2 f0 with f0 free of repeated factors in x.
fn strip_squares(f: &MultiPoly, x: Symbol) -> (MultiPoly, MultiPoly) {
    let mut f = f.clone();
    let mut s = MultiPoly::one();
    loop {
        let g = primitive_part_in(&gcd(&f, &f.derivative(x)), x);
        if g.degree_in(x) == 0 {
            return (f, s);
        }
        let r = squarefree_in(&g, x);
        f = f.div_exact(&r.pow(2)).expect("repeated factor divides twice");
        s = &s * &r;
    }
}
