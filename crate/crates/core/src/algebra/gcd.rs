//! Multivariate gcd by recursive primitive remainder sequences.

use std::collections::HashMap;

use super::poly::MultiPoly;
use super::rational::Q;
use super::symbol::Symbol;

/// Greatest common divisor over Q, normalized to coprime integer coefficients
/// with a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.primitive_q();
    }
    if b.is_zero() {
        return a.primitive_q();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let (a, b) = if mono.is_one() {
        (a.clone(), b.clone())
    } else {
        let m = MultiPoly::monomial(mono.clone(), num_traits::One::one());
        (a.div_exact(&m).unwrap(), b.div_exact(&m).unwrap())
    };
    let monopart = MultiPoly::monomial(mono, num_traits::One::one());
    let va = a.variables();
    let vb = b.variables();
    // A variable present in only one argument can be projected away through its content.
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return (&monopart * &gcd(&content_in(&a, v), &b)).primitive_q();
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return (&monopart * &gcd(&a, &content_in(&b, v))).primitive_q();
    }
    // A gcd image of degree 0 in v at a point where neither leading
    // coefficient vanishes proves the gcd is free of v.
    let mut best: Option<(u32, Symbol)> = None;
    let mut unknown = None;
    for &v in &va {
        match image_degree(&a, &b, v) {
            Some(0) => {}
            Some(d) if best.is_none_or(|(bd, _)| d < bd) => best = Some((d, v)),
            Some(_) => {}
            None => unknown = unknown.or(Some(v)),
        }
    }
    let v = match best.map(|(_, v)| v).or(unknown) {
        Some(v) => v,
        None => return monopart,
    };
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_prs(pa, pb, v);
    (&(&monopart * &c) * &g).primitive_q()
}

/// Degree in `v` of the gcd of `a`, `b` after specializing every other
/// variable at a point that keeps both leading coefficients nonzero.
fn image_degree(a: &MultiPoly, b: &MultiPoly, v: Symbol) -> Option<u32> {
    let others: Vec<Symbol> = a.variables().union(&b.variables()).copied().filter(|s| *s != v).collect();
    if others.is_empty() {
        return None;
    }
    let (la, lb) = (a.lc_in(v), b.lc_in(v));
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15 ^ (v.name().len() as u64);
    for _ in 0..IMAGE_TRIES {
        let mut point = HashMap::new();
        for s in &others {
            state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
            let n = ((state >> 33) % 61) as i64 - 30;
            point.insert(*s, Q::from_integer(n.into()));
        }
        if la.eval(&point).is_zero() || lb.eval(&point).is_zero() {
            continue;
        }
        let g = primitive_prs(a.eval(&point), b.eval(&point), v);
        return Some(g.degree_in(v));
    }
    None
}

const IMAGE_TRIES: usize = 4;

fn primitive_prs(mut a: MultiPoly, mut b: MultiPoly, v: Symbol) -> MultiPoly {
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.degree_in(v) == 0 {
            return MultiPoly::one();
        }
        let r = a.pseudo_rem(&b, v);
        if r.is_zero() {
            return primitive_part_in(&b, v);
        }
        if r.degree_in(v) == 0 {
            return MultiPoly::one();
        }
        a = b;
        b = primitive_part_in(&r, v);
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &MultiPoly, v: Symbol) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in p.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return MultiPoly::one();
        }
    }
    acc
}

pub fn primitive_part_in(p: &MultiPoly, v: Symbol) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").primitive_q()
}

/// Squarefree part with respect to `v` (the product of the distinct
/// irreducible factors that involve `v`).
pub fn squarefree_in(p: &MultiPoly, v: Symbol) -> MultiPoly {
    let pp = primitive_part_in(p, v);
    if pp.degree_in(v) == 0 {
        return MultiPoly::one();
    }
    let g = gcd(&pp, &pp.derivative(v));
    pp.div_exact(&g).expect("gcd divides").primitive_q()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(Symbol::new(s))
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = &(&v("x") * &v("y")) + &v("t");
        let a = &f * &(&v("x") + &MultiPoly::int(3));
        let b = &f * &(&v("y").pow(2) - &v("x"));
        assert_eq!(gcd(&a, &b), f.primitive_q());
    }

    #[test]
    fn gcd_coprime_and_monomial() {
        let a = &v("x").pow(3) * &v("y");
        let b = &v("x").pow(2) * &(&v("y") + &MultiPoly::one());
        assert_eq!(gcd(&a, &b), v("x").pow(2));
        assert_eq!(gcd(&v("x"), &v("y")), MultiPoly::one());
    }

    #[test]
    fn gcd_with_rational_scaling() {
        let f = &v("h").scale(&q(4)) - &MultiPoly::int(6);
        let a = &f * &v("h");
        let b = f.scale(&q(-3));
        assert_eq!(gcd(&a, &b), f.primitive_q());
    }

    #[test]
    fn squarefree_part() {
        let h = Symbol::new("h");
        let p = &(&v("h") - &MultiPoly::one()).pow(3) * &(&v("h") + &v("t")).pow(2);
        let s = squarefree_in(&p, h);
        assert_eq!(s, (&(&v("h") - &MultiPoly::one()) * &(&v("h") + &v("t"))).primitive_q());
    }
}
