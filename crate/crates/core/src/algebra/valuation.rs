use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::error::AlgebraError;
use super::poly::MultiPoly;
use super::ratfunc::RationalFunction;
use super::rational::{qf, Q};
use super::symbol::Symbol;

/// Default witness seed used throughout the crate.
pub const DEFAULT_SEED: u64 = 20_240_917;
/// Number of fresh witness draws before a generic coefficient is declared degenerate.
pub const WITNESS_RETRIES: usize = 3;
/// Bound on numerators and denominators of witness coordinates.
pub const WITNESS_HEIGHT: i64 = 13;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Finite(Q),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    pub variable: Symbol,
    pub location: Location,
}

impl Place {
    pub fn zero(variable: Symbol) -> Place {
        Place {
            variable,
            location: Location::Finite(Q::zero()),
        }
    }

    pub fn at(variable: Symbol, c: Q) -> Place {
        Place {
            variable,
            location: Location::Finite(c),
        }
    }

    pub fn infinity(variable: Symbol) -> Place {
        Place {
            variable,
            location: Location::Infinity,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Location::Finite(c) => write!(f, "{}={}", self.variable, super::rational::format_q(c)),
            Location::Infinity => write!(f, "{}=oo", self.variable),
        }
    }
}

/// Order of a function at a place; the zero function has infinite order.
///
/// Serialized as an integer, or the string "+oo" when infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("+oo"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Valuation::Finite(v)),
            Raw::Text(t) if t == "+oo" => Ok(Valuation::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad valuation {:?}", t))),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Equal,
            (Valuation::Infinite, _) => Greater,
            (_, Valuation::Infinite) => Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", v),
            Valuation::Infinite => write!(f, "+oo"),
        }
    }
}

/// Seeded source of random rational points for spectator parameters.
#[derive(Clone, Debug)]
pub struct Witness {
    seed: u64,
    rng: ChaCha8Rng,
}

impl Witness {
    pub fn new(seed: u64) -> Witness {
        Witness {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn draw_q(&mut self) -> Q {
        let n = self.rng.gen_range(-WITNESS_HEIGHT..=WITNESS_HEIGHT);
        let d = self.rng.gen_range(1..=WITNESS_HEIGHT);
        qf(n, d)
    }

    /// Nonzero draw, used where a zero coordinate would be a trivially special point.
    pub fn draw_nonzero_q(&mut self) -> Q {
        loop {
            let v = self.draw_q();
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn point<I: IntoIterator<Item = Symbol>>(&mut self, symbols: I) -> HashMap<Symbol, Q> {
        let mut syms: Vec<Symbol> = symbols.into_iter().collect();
        syms.sort();
        syms.dedup();
        syms.into_iter().map(|s| (s, self.draw_nonzero_q())).collect()
    }
}

impl Default for Witness {
    fn default() -> Self {
        Witness::new(DEFAULT_SEED)
    }
}

/// Valuation of `f` at `place`, all other symbols generic.
pub fn ord_at(f: &RationalFunction, place: &Place, witness: &mut Witness) -> Result<Valuation, AlgebraError> {
    if f.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let v = place.variable;
    match &place.location {
        Location::Infinity => {
            let dn = f.num().degree_in(v) as i64;
            let dd = f.den().degree_in(v) as i64;
            certify(&f.num().lc_in(v), witness)?;
            certify(&f.den().lc_in(v), witness)?;
            Ok(Valuation::Finite(dd - dn))
        }
        Location::Finite(c) => {
            let num = if c.is_zero() { f.num().clone() } else { f.num().shift(v, c) };
            let den = if c.is_zero() { f.den().clone() } else { f.den().shift(v, c) };
            let (on, ln) = lowest(&num, v);
            let (od, ld) = lowest(&den, v);
            certify(&ln, witness)?;
            certify(&ld, witness)?;
            Ok(Valuation::Finite(on as i64 - od as i64))
        }
    }
}

/// Valuation of a polynomial at `place`.
pub fn ord_poly(p: &MultiPoly, place: &Place, witness: &mut Witness) -> Result<Valuation, AlgebraError> {
    ord_at(&RationalFunction::from_poly(p.clone()), place, witness)
}

fn lowest(p: &MultiPoly, v: Symbol) -> (u32, MultiPoly) {
    let k = p.min_degree_in(v);
    let c = p.coeffs_in(v).swap_remove(k as usize);
    (k, c)
}

/// Checks that a symbolically nonzero coefficient survives a generic specialization.
pub fn certify(c: &MultiPoly, witness: &mut Witness) -> Result<(), AlgebraError> {
    if c.is_constant() {
        return Ok(());
    }
    for _ in 0..WITNESS_RETRIES {
        let pt = witness.point(c.variables());
        match c.eval_q(&pt) {
            Some(x) if !x.is_zero() => return Ok(()),
            _ => continue,
        }
    }
    Err(AlgebraError::GenericityFailure {
        coefficient: c.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(Symbol::new(s))
    }

    fn p1_delta() -> MultiPoly {
        let hb = v("hb");
        let t = v("t");
        &hb.pow(10) * &(&MultiPoly::int(27) + &(&t.pow(3).scale(&q(4)) * &hb.pow(2)))
    }

    #[test]
    fn worked_example_orders() {
        let place = Place::zero(Symbol::new("hb"));
        let mut w = Witness::default();
        let delta = RationalFunction::from_poly(p1_delta());
        assert_eq!(ord_at(&delta, &place, &mut w).unwrap(), Valuation::Finite(10));
        let j_num = &v("hb").pow(2) * &v("t").pow(3).scale(&q(4));
        let j_den = &MultiPoly::int(27) + &(&v("t").pow(3).scale(&q(4)) * &v("hb").pow(2));
        let j = RationalFunction::new(j_num, j_den).unwrap();
        assert_eq!(ord_at(&j, &place, &mut w).unwrap(), Valuation::Finite(2));
        assert_eq!(ord_at(&RationalFunction::one(), &place, &mut w).unwrap(), Valuation::Finite(0));
    }

    #[test]
    fn zero_and_infinity() {
        let h = Symbol::new("h");
        let mut w = Witness::default();
        assert_eq!(
            ord_at(&RationalFunction::zero(), &Place::zero(h), &mut w).unwrap(),
            Valuation::Infinite
        );
        let f = RationalFunction::new(v("h"), &v("h").pow(3) + &MultiPoly::one()).unwrap();
        assert_eq!(ord_at(&f, &Place::infinity(h), &mut w).unwrap(), Valuation::Finite(2));
        let g = (&v("h") - &MultiPoly::int(2)).pow(3);
        assert_eq!(ord_poly(&g, &Place::at(h, q(2)), &mut w).unwrap(), Valuation::Finite(3));
    }

    #[test]
    fn witness_is_reproducible() {
        let mut a = Witness::new(7);
        let mut b = Witness::new(7);
        for _ in 0..10 {
            assert_eq!(a.draw_q(), b.draw_q());
        }
    }

    #[test]
    fn valuation_order() {
        assert!(Valuation::Infinite > Valuation::Finite(100));
        assert_eq!(Valuation::Finite(2) + Valuation::Finite(3), Valuation::Finite(5));
        assert_eq!(Valuation::Finite(2) + Valuation::Infinite, Valuation::Infinite);
    }

    #[test]
    fn valuation_json() {
        assert_eq!(serde_json::to_string(&Valuation::Finite(-3)).unwrap(), "-3");
        assert_eq!(serde_json::to_string(&Valuation::Infinite).unwrap(), "\"+oo\"");
        let v: Valuation = serde_json::from_str("\"+oo\"").unwrap();
        assert_eq!(v, Valuation::Infinite);
        let v: Valuation = serde_json::from_str("7").unwrap();
        assert_eq!(v, Valuation::Finite(7));
    }
}
