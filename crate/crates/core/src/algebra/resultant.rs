//! Resultants by the subresultant pseudo-remainder sequence.

use super::error::AlgebraError;
use super::poly::MultiPoly;
use super::symbol::Symbol;
use super::valuation::Witness;

/// Resultant of `p` and `q` with respect to `var`, equal to the Sylvester
/// determinant with `p`'s coefficients in the first rows.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: Symbol) -> Result<MultiPoly, AlgebraError> {
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 {
        return Err(AlgebraError::DegreeZero(var.name().to_string()));
    }
    Ok(subresultant(p.clone(), q.clone(), var))
}

fn subresultant(mut a: MultiPoly, mut b: MultiPoly, v: Symbol) -> MultiPoly {
    let mut sign = false;
    if a.degree_in(v) < b.degree_in(v) {
        if a.degree_in(v) % 2 == 1 && b.degree_in(v) % 2 == 1 {
            sign = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = a.pseudo_rem(&b, v);
        if r.is_zero() {
            return MultiPoly::zero();
        }
        a = b;
        let divisor = &g * &h.pow(delta);
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = a.lc_in(v);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
        if b.degree_in(v) == 0 {
            break;
        }
    }
    let da = a.degree_in(v);
    let lb = b.lc_in(v);
    let res = if da == 0 {
        MultiPoly::one()
    } else {
        lb.pow(da).div_exact(&h.pow(da - 1)).expect("subresultant division is exact")
    };
    if sign {
        -res
    } else {
        res
    }
}

/// Classical discriminant `(-1)^(n(n-1)/2) res(p, p') / lc(p)`.
pub fn discriminant_poly(p: &MultiPoly, var: Symbol) -> Result<MultiPoly, AlgebraError> {
    let n = p.degree_in(var);
    if n < 2 {
        return Err(AlgebraError::DegreeZero(var.name().to_string()));
    }
    let r = resultant(p, &p.derivative(var), var)?;
    let lc = p.lc_in(var);
    let d = r.div_exact(&lc).expect("leading coefficient divides the resultant");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Whether the discriminant of `p` in `var` is a nonzero polynomial.
///
/// A nonzero value at a point where the leading coefficient survives is a
/// proof; otherwise the symbolic discriminant decides.
pub fn discriminant_nonzero(p: &MultiPoly, var: Symbol) -> Result<bool, AlgebraError> {
    let others: Vec<Symbol> = p.variables().into_iter().filter(|s| *s != var).collect();
    let lc = p.lc_in(var);
    let mut w = Witness::default();
    for _ in 0..3 {
        let point = w.point(others.iter().copied());
        if lc.eval(&point).is_zero() {
            continue;
        }
        let image = p.eval(&point);
        if !discriminant_poly(&image, var)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(!discriminant_poly(p, var)?.is_zero())
}

/// Sylvester determinant, used as an independent reference in tests.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, var: Symbol) -> MultiPoly {
    let m = p.degree_in(var) as usize;
    let n = q.degree_in(var) as usize;
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            rows[i][i + k] = pc[m - k].clone();
        }
    }
    for i in 0..m {
        for k in 0..=n {
            rows[n + i][i + k] = qc[n - k].clone();
        }
    }
    super::linalg::det_poly(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(Symbol::new(s))
    }

    #[test]
    fn linear_factors() {
        let x = Symbol::new("x");
        let r = resultant(&(&v("x") - &v("a")), &(&v("x") - &v("b")), x).unwrap();
        assert_eq!(r, &v("a") - &v("b"));
    }

    #[test]
    fn shared_root_vanishes() {
        let x = Symbol::new("x");
        let p = &v("x").pow(2) - &MultiPoly::int(2);
        assert!(resultant(&p, &p, x).unwrap().is_zero());
    }

    #[test]
    fn quadratic_against_derivative() {
        // hand expansion of the 3x3 Sylvester matrix gives 4c - b^2
        let x = Symbol::new("x");
        let p = &(&v("x").pow(2) + &(&v("b") * &v("x"))) + &v("c");
        let dp = &v("x").scale(&q(2)) + &v("b");
        let r = resultant(&p, &dp, x).unwrap();
        assert_eq!(r, &v("c").scale(&q(4)) - &v("b").pow(2));
        assert_eq!(r, sylvester_resultant(&p, &dp, x));
    }

    #[test]
    fn depressed_cubic_discriminant() {
        let x = Symbol::new("x");
        let p = &(&v("x").pow(3) + &(&v("a") * &v("x"))) + &v("b");
        let d = discriminant_poly(&p, x).unwrap();
        let expected = -(&v("a").pow(3).scale(&q(4)) + &v("b").pow(2).scale(&q(27)));
        assert_eq!(d, expected);
    }

    #[test]
    fn small_discriminants() {
        let x = Symbol::new("x");
        let sq = (&v("x") - &MultiPoly::one()).pow(2);
        assert!(discriminant_poly(&sq, x).unwrap().is_zero());
        let p = &v("x").pow(2) + &MultiPoly::one();
        assert_eq!(discriminant_poly(&p, x).unwrap(), MultiPoly::int(-4));
        assert!(matches!(discriminant_poly(&v("x"), x), Err(AlgebraError::DegreeZero(_))));
    }

    #[test]
    fn degree_mismatch_sign() {
        let x = Symbol::new("x");
        let p = &v("x").pow(3) + &v("t");
        let q2 = &v("x").pow(2) + &v("x");
        assert_eq!(resultant(&p, &q2, x).unwrap(), sylvester_resultant(&p, &q2, x));
        assert_eq!(resultant(&q2, &p, x).unwrap(), sylvester_resultant(&q2, &p, x));
        let a = &v("x").pow(3) + &v("x");
        let b = &(&v("x") * &v("s")) + &MultiPoly::int(2);
        assert_eq!(resultant(&b, &a, x).unwrap(), sylvester_resultant(&b, &a, x));
    }
}
