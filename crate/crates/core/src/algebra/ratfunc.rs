use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::gcd::gcd;
use super::poly::MultiPoly;
use super::rational::Q;
use super::symbol::Symbol;

/// Quotient of two polynomials kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RationalFunction, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        Ok(RationalFunction::reduced(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn zero() -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::zero())
    }

    pub fn one() -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::one())
    }

    pub fn constant(c: Q) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::constant(c))
    }

    pub fn var(s: Symbol) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::var(s))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        if self.den.is_one_poly() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        if let Some(c) = den.constant_value() {
            let inv = Q::one() / c;
            return RationalFunction {
                num: num.scale(&inv),
                den: MultiPoly::one(),
            };
        }
        let mono = num.monomial_content().gcd(&den.monomial_content());
        let (mut num, mut den) = if mono.is_one() {
            (num, den)
        } else {
            let m = MultiPoly::monomial(mono, Q::one());
            (num.div_exact(&m).unwrap(), den.div_exact(&m).unwrap())
        };
        if !den.is_monomial() && !num.is_constant() {
            let g = gcd(&num, &den);
            if !g.is_constant() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = Q::one() / lc;
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn inv(&self) -> Result<RationalFunction, AlgebraError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> RationalFunction {
        if e >= 0 {
            RationalFunction {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            }
        } else {
            RationalFunction::reduced(self.den.pow((-e) as u32), self.num.pow((-e) as u32))
        }
    }

    pub fn scale(&self, c: &Q) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self, s: Symbol) -> RationalFunction {
        if self.den.is_one_poly() {
            return RationalFunction::from_poly(self.num.derivative(s));
        }
        let n = &(&self.num.derivative(s) * &self.den) - &(&self.num * &self.den.derivative(s));
        RationalFunction::reduced(n, self.den.pow(2))
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Symbol> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v
    }

    pub fn contains_var(&self, s: Symbol) -> bool {
        self.num.contains_var(s) || self.den.contains_var(s)
    }

    /// Simultaneous substitution of symbols by rational functions.
    pub fn subs(&self, bindings: &HashMap<Symbol, RationalFunction>) -> Result<RationalFunction, AlgebraError> {
        let n = subs_poly(&self.num, bindings)?;
        let d = subs_poly(&self.den, bindings)?;
        &n / &d
    }

    pub fn eval(&self, values: &HashMap<Symbol, Q>) -> Result<RationalFunction, AlgebraError> {
        RationalFunction::new(self.num.eval(values), self.den.eval(values))
    }

    /// Full evaluation at a point; `None` when a symbol is missing or the
    /// denominator vanishes there.
    pub fn eval_q(&self, values: &HashMap<Symbol, Q>) -> Option<Q> {
        let d = self.den.eval_q(values)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_q(values)? / d)
    }
}

trait OnePoly {
    fn is_one_poly(&self) -> bool;
}

impl OnePoly for MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }
}

/// Substitutes rational functions into a polynomial, clearing denominators
/// per bound symbol so only one final reduction is needed.
pub fn subs_poly(
    p: &MultiPoly,
    bindings: &HashMap<Symbol, RationalFunction>,
) -> Result<RationalFunction, AlgebraError> {
    let used: Vec<(Symbol, &RationalFunction, u32)> = bindings
        .iter()
        .filter(|(s, _)| p.contains_var(**s))
        .map(|(s, v)| (*s, v, p.degree_in(*s)))
        .collect();
    if used.is_empty() {
        return Ok(RationalFunction::from_poly(p.clone()));
    }
    let mut numer_map: HashMap<Symbol, MultiPoly> = HashMap::new();
    let mut den_total = MultiPoly::one();
    let all_poly = used.iter().all(|(_, v, _)| v.den.is_one_poly());
    if all_poly {
        for (s, v, _) in &used {
            numer_map.insert(*s, v.num.clone());
        }
        return Ok(RationalFunction::from_poly(p.subs_many(&numer_map)));
    }
    let mut out = MultiPoly::zero();
    let mut pow_cache: HashMap<(Symbol, u32, bool), MultiPoly> = HashMap::new();
    for (_, v, d) in &used {
        den_total = &den_total * &v.den.pow(*d);
    }
    for (m, c) in p.terms() {
        let mut term = MultiPoly::constant(c.clone());
        let mut rest = Vec::new();
        for &(s, e) in m.pairs() {
            match used.iter().find(|u| u.0 == s) {
                Some((_, v, d)) => {
                    let np = pow_cache
                        .entry((s, e, true))
                        .or_insert_with(|| v.num.pow(e))
                        .clone();
                    let dp = pow_cache
                        .entry((s, d - e, false))
                        .or_insert_with(|| v.den.pow(d - e))
                        .clone();
                    term = &(&term * &np) * &dp;
                }
                None => rest.push((s, e)),
            }
        }
        // symbols bound but absent from this monomial still need their full denominator power
        for (s, v, d) in &used {
            if m.exp(*s) == 0 {
                let dp = pow_cache
                    .entry((*s, *d, false))
                    .or_insert_with(|| v.den.pow(*d))
                    .clone();
                term = &term * &dp;
            }
        }
        let mono = super::poly::Monomial::from_pairs(rest);
        out = &out + &term.mul_monomial(&mono, &Q::one());
    }
    RationalFunction::new(out, den_total)
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            if self.den.is_one_poly() {
                return RationalFunction::from_poly(&self.num + &rhs.num);
            }
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(n, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.den.is_one_poly() && rhs.den.is_one_poly() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = Result<RationalFunction, AlgebraError>;
    fn div(self, rhs: &'a RationalFunction) -> Result<RationalFunction, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        Ok(RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn v(s: &str) -> RationalFunction {
        RationalFunction::var(Symbol::new(s))
    }

    #[test]
    fn reduces_common_factors() {
        let x = v("x");
        let one = RationalFunction::one();
        let num = &(&x * &x) - &one;
        let den = &x - &one;
        let r = (&num / &den).unwrap();
        assert_eq!(r, &x + &one);
        assert!(r.as_poly().is_some());
    }

    #[test]
    fn substitution_inverts_variable() {
        let x = Symbol::new("x");
        let h = v("h");
        let p = RationalFunction::var(x).pow(2);
        let mut b = HashMap::new();
        b.insert(x, h.inv().unwrap());
        let r = p.subs(&b).unwrap();
        assert_eq!(r, h.pow(-2));
        let id: HashMap<Symbol, RationalFunction> = [(x, RationalFunction::var(x))].into_iter().collect();
        assert_eq!(p.subs(&id).unwrap(), p);
    }

    #[test]
    fn infinity_cubic_substitution() {
        // x^3 + t x + h with x -> xb/hb^2, h -> 1/hb, scaled by hb^6
        let (xb, hb, t) = (v("xb"), v("hb"), v("t"));
        let x = Symbol::new("x");
        let h = Symbol::new("h");
        let cubic = &(&RationalFunction::var(x).pow(3) + &(&t * &RationalFunction::var(x)))
            + &RationalFunction::var(h);
        let mut b = HashMap::new();
        b.insert(x, (&xb / &hb.pow(2)).unwrap());
        b.insert(h, hb.inv().unwrap());
        let r = &cubic.subs(&b).unwrap() * &hb.pow(6);
        let expected = &(&xb.pow(3) + &(&(&t * &hb.pow(4)) * &xb)) + &hb.pow(5);
        assert_eq!(r, expected);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(MultiPoly::one(), MultiPoly::zero()),
            Err(AlgebraError::DivisionByZeroPoly)
        );
        assert!(matches!(&v("x") / &RationalFunction::zero(), Err(AlgebraError::DivisionByZeroPoly)));
    }

    #[test]
    fn quotient_rule() {
        let x = Symbol::new("x");
        let f = (&RationalFunction::one() / &v("x")).unwrap();
        assert_eq!(f.derivative(x), v("x").pow(-2).scale(&q(-1)));
    }
}
