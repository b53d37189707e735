use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::gcd::{gcd, primitive_part_in, squarefree_in};
use crate::algebra::{MultiPoly, RationalFunction, Symbol};

use super::CurveError;

/// y^2 = x^3 + a x + b over the line of `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassG1 {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub var: Symbol,
}

/// y^2 = a[0] x^6 + a[1] x^5 + ... + a[6] over the line of `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassG2 {
    pub a: [MultiPoly; 7],
    pub var: Symbol,
}

/// Chart at var = infinity with coordinate `bar` = 1/var.
///
/// The source model is recovered by x_bar = x * bar^(w N), y_bar = y * bar^(3N),
/// bar = 1/var, then multiplying the equation by var^(6N), where w = 2 in
/// genus one and w = 1 in genus two and N = n - k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityModel<W> {
    pub model: W,
    pub n: u32,
    /// Number of bar-divisions removed by minimization.
    pub k: u32,
    pub source_var: Symbol,
    pub bar: Symbol,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Genus {
    One,
    Two,
}

pub fn bar_symbol(var: Symbol) -> Symbol {
    Symbol::new(&format!("{}bar", var.name()))
}

/// All derivatives of `p` in `v` of order below `k`.
fn derivatives(p: &MultiPoly, v: Symbol, k: u32) -> Vec<MultiPoly> {
    let mut out = Vec::new();
    let mut cur = p.clone();
    for _ in 0..k {
        if cur.is_zero() {
            break;
        }
        let next = cur.derivative(v);
        out.push(cur);
        cur = next;
    }
    out
}

/// Squarefree polynomial in `v` whose factors l satisfy l^w | p_j for every
/// (p_j, w_j) pair; constant when none exists.
fn common_power_divisor(parts: &[(&MultiPoly, u32)], v: Symbol) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for (p, w) in parts {
        if p.is_zero() {
            continue;
        }
        for d in derivatives(p, v, *w) {
            g = gcd(&g, &d);
            if g.degree_in(v) == 0 {
                return MultiPoly::one();
            }
        }
    }
    if g.is_zero() {
        return MultiPoly::one();
    }
    let g = primitive_part_in(&g, v);
    squarefree_in(&g, v)
}

fn divide_power(p: &MultiPoly, l: &MultiPoly, e: u32) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    p.div_exact(&l.pow(e)).expect("power of a common divisor divides")
}

impl WeierstrassG1 {
    pub fn new(a: MultiPoly, b: MultiPoly, var: Symbol) -> WeierstrassG1 {
        WeierstrassG1 { a, b, var }
    }

    /// y^2 - x^3 - a x - b in the given coordinates.
    pub fn equation(&self, x: Symbol, y: Symbol) -> MultiPoly {
        let (xv, yv) = (MultiPoly::var(x), MultiPoly::var(y));
        &(&(&yv.pow(2) - &xv.pow(3)) - &(&self.a * &xv)) - &self.b
    }
}

/// Removes every l(var) with l^4 | a and l^6 | b.
pub fn normalize_g1(w: &WeierstrassG1) -> Result<WeierstrassG1, CurveError> {
    if w.a.is_zero() && w.b.is_zero() {
        return Err(CurveError::SingularFamily);
    }
    let v = w.var;
    let (mut a, mut b) = (w.a.clone(), w.b.clone());
    loop {
        let l = common_power_divisor(&[(&a, 4), (&b, 6)], v);
        if l.degree_in(v) == 0 {
            return Ok(WeierstrassG1 { a, b, var: v });
        }
        a = divide_power(&a, &l, 4);
        b = divide_power(&b, &l, 6);
    }
}

fn ceil_div(a: u32, b: u32) -> u32 {
    a.div_ceil(b)
}

/// p(1/bar) * bar^e as a polynomial in bar; requires e >= deg p.
fn invert(p: &MultiPoly, v: Symbol, bar: Symbol, e: u32) -> MultiPoly {
    let coeffs = p.coeffs_in(v);
    let mut out = MultiPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            out = &out + &(c * &MultiPoly::var_pow(bar, e - i as u32));
        }
    }
    out
}

fn min_ord(p: &MultiPoly, v: Symbol) -> Option<u32> {
    if p.is_zero() {
        None
    } else {
        Some(p.min_degree_in(v))
    }
}

fn shift_down(p: &MultiPoly, v: Symbol, e: u32) -> MultiPoly {
    if e == 0 || p.is_zero() {
        return p.clone();
    }
    p.div_exact(&MultiPoly::var_pow(v, e)).expect("bar power divides")
}

/// Chart at infinity, minimized at bar = 0.
pub fn infinity_model_g1(w: &WeierstrassG1) -> Result<InfinityModel<WeierstrassG1>, CurveError> {
    if w.a.is_zero() && w.b.is_zero() {
        return Err(CurveError::SingularFamily);
    }
    let v = w.var;
    let bar = bar_symbol(v);
    let n = ceil_div(w.a.degree_in(v), 4).max(ceil_div(w.b.degree_in(v), 6)).max(1);
    let a = invert(&w.a, v, bar, 4 * n);
    let b = invert(&w.b, v, bar, 6 * n);
    let k = [min_ord(&a, bar).map(|o| o / 4), min_ord(&b, bar).map(|o| o / 6)]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(0);
    Ok(InfinityModel {
        model: WeierstrassG1 {
            a: shift_down(&a, bar, 4 * k),
            b: shift_down(&b, bar, 6 * k),
            var: bar,
        },
        n,
        k,
        source_var: v,
        bar,
    })
}

impl InfinityModel<WeierstrassG1> {
    /// Applies the gluing to the chart equation and returns the source equation.
    pub fn round_trip(&self, x: Symbol, y: Symbol) -> Result<MultiPoly, CurveError> {
        let e = self.model.equation(x, y);
        pull_back(&e, self, 2, x, y)
    }
}

impl InfinityModel<WeierstrassG2> {
    pub fn round_trip(&self, x: Symbol, y: Symbol) -> Result<MultiPoly, CurveError> {
        let e = self.model.equation(x, y);
        pull_back(&e, self, 1, x, y)
    }
}

fn pull_back<W>(e: &MultiPoly, m: &InfinityModel<W>, xw: i32, x: Symbol, y: Symbol) -> Result<MultiPoly, CurveError> {
    let big_n = m.n as i32 - m.k as i32;
    let h = RationalFunction::var(m.source_var);
    let hinv = h.inv().map_err(|_| CurveError::SingularFamily)?;
    let mut b = HashMap::new();
    b.insert(x, &RationalFunction::var(x) * &hinv.pow(xw * big_n));
    b.insert(y, &RationalFunction::var(y) * &hinv.pow(3 * big_n));
    b.insert(m.bar, hinv);
    let r = RationalFunction::from_poly(e.clone()).subs(&b).map_err(|_| CurveError::SingularFamily)?;
    let r = &r * &h.pow(6 * big_n);
    r.as_poly().cloned().ok_or(CurveError::SingularFamily)
}

impl WeierstrassG2 {
    pub fn new(a: [MultiPoly; 7], var: Symbol) -> WeierstrassG2 {
        WeierstrassG2 { a, var }
    }

    pub fn sextic(&self, x: Symbol) -> MultiPoly {
        let coeffs: Vec<MultiPoly> = self.a.iter().rev().cloned().collect();
        MultiPoly::from_coeffs_in(x, &coeffs)
    }

    pub fn equation(&self, x: Symbol, y: Symbol) -> MultiPoly {
        &MultiPoly::var(y).pow(2) - &self.sextic(x)
    }

    /// Model after x -> lambda x: a[i] -> a[i] lambda^(6-i).
    pub fn rescale_x(&self, lambda: &MultiPoly) -> WeierstrassG2 {
        let mut a = self.a.clone();
        for (i, c) in a.iter_mut().enumerate() {
            *c = &*c * &lambda.pow(6 - i as u32);
        }
        WeierstrassG2 { a, var: self.var }
    }
}

/// Removes every l(var) with l^i | a[i] for i = 1..6.
pub fn normalize_g2(w: &WeierstrassG2) -> Result<WeierstrassG2, CurveError> {
    if w.a[0].is_zero() && w.a[1].is_zero() {
        return Err(CurveError::DegenerateSextic);
    }
    let v = w.var;
    let mut a = w.a.clone();
    loop {
        let parts: Vec<(&MultiPoly, u32)> = (1..7).map(|i| (&a[i], i as u32)).collect();
        let l = common_power_divisor(&parts, v);
        if l.degree_in(v) == 0 {
            return Ok(WeierstrassG2 { a, var: v });
        }
        for (i, c) in a.iter_mut().enumerate().skip(1) {
            *c = divide_power(c, &l, i as u32);
        }
    }
}

/// Weighted chart at infinity, minimized at bar = 0.
pub fn infinity_model_g2(w: &WeierstrassG2) -> Result<InfinityModel<WeierstrassG2>, CurveError> {
    if w.a[0].is_zero() && w.a[1].is_zero() {
        return Err(CurveError::DegenerateSextic);
    }
    let v = w.var;
    if w.a[0].degree_in(v) > 0 {
        return Err(CurveError::NoInfinityModel);
    }
    let bar = bar_symbol(v);
    let n = (1..7)
        .map(|i| ceil_div(w.a[i].degree_in(v), i as u32))
        .max()
        .unwrap_or(1)
        .max(1);
    let mut a: [MultiPoly; 7] = std::array::from_fn(|i| invert(&w.a[i], v, bar, i as u32 * n));
    let k = (1..7)
        .filter_map(|i| min_ord(&a[i], bar).map(|o| o / i as u32))
        .min()
        .unwrap_or(0);
    for (i, c) in a.iter_mut().enumerate() {
        *c = shift_down(c, bar, i as u32 * k);
    }
    Ok(InfinityModel {
        model: WeierstrassG2 { a, var: bar },
        n,
        k,
        source_var: v,
        bar,
    })
}
