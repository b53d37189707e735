//! Genus-two fibers: Igusa and Liu invariants, their orders at the fiber, and
//! the stable-model type.

pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{ord_at, qf, AlgebraError, MultiPoly, Place, RationalFunction, Valuation, Witness, Q};
use crate::curves::{infinity_model_g2, normalize_g2, CurveError, InfinityModel, WeierstrassG2};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LiuError {
    #[error("sextic has degree below five")]
    DegenerateSextic,
    #[error("no stable type matches the valuations {0:?}")]
    NoMatch(Box<Ords>),
    #[error("several stable types {types:?} match the valuations {ords:?}")]
    MultiMatch { ords: Box<Ords>, types: Vec<StableType> },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Igusa invariants J2..J10 and Liu's I2, I4, I12 of a binary sextic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IgusaData {
    pub j2: MultiPoly,
    pub j4: MultiPoly,
    pub j6: MultiPoly,
    pub j8: MultiPoly,
    pub j10: MultiPoly,
    pub i2: MultiPoly,
    pub i4: MultiPoly,
    pub i12: MultiPoly,
}

impl IgusaData {
    /// J_{2i} for i = 1..5.
    pub fn j(&self, i: usize) -> &MultiPoly {
        [&self.j2, &self.j4, &self.j6, &self.j8, &self.j10][i - 1]
    }

    pub fn named(&self) -> [(&'static str, &MultiPoly); 8] {
        [
            ("J2", &self.j2),
            ("J4", &self.j4),
            ("J6", &self.j6),
            ("J8", &self.j8),
            ("J10", &self.j10),
            ("I2", &self.i2),
            ("I4", &self.i4),
            ("I12", &self.i12),
        ]
    }
}

/// Sum over a coefficient table, nested Horner in c0, c1, ...
fn eval_table(table: &[(i64, [u8; 7])], c: &[MultiPoly; 7]) -> MultiPoly {
    let terms: Vec<(Q, [u8; 7])> = table.iter().map(|(k, e)| (Q::from_integer((*k).into()), *e)).collect();
    horner(&terms, c, 0)
}

fn horner(terms: &[(Q, [u8; 7])], c: &[MultiPoly; 7], i: usize) -> MultiPoly {
    if i == 7 {
        let s: Q = terms.iter().map(|(k, _)| k.clone()).sum();
        return MultiPoly::constant(s);
    }
    let mut groups: BTreeMap<u8, Vec<(Q, [u8; 7])>> = BTreeMap::new();
    for t in terms {
        groups.entry(t.1[i]).or_default().push(t.clone());
    }
    let top = *groups.keys().next_back().unwrap_or(&0);
    let mut acc = MultiPoly::zero();
    for e in (0..=top).rev() {
        if !acc.is_zero() {
            acc = &acc * &c[i];
        }
        if let Some(g) = groups.get(&e) {
            acc = &acc + &horner(g, c, i + 1);
        }
    }
    acc
}

/// Igusa invariants of y^2 = a[0] x^6 + ... + a[6].
pub fn igusa_invariants(w: &WeierstrassG2) -> Result<IgusaData, LiuError> {
    if w.a[0].is_zero() && w.a[1].is_zero() {
        return Err(LiuError::DegenerateSextic);
    }
    // tables are indexed by the power of x
    let c: [MultiPoly; 7] = std::array::from_fn(|k| w.a[6 - k].clone());
    let ap = eval_table(tables::A_PRIME, &c);
    let bp = eval_table(tables::B_PRIME, &c);
    let cp = eval_table(tables::C_PRIME, &c);
    let dp = eval_table(tables::D_PRIME, &c);
    let j2 = ap.scale(&qf(1, 8));
    let j4 = (&j2.pow(2).scale(&qf(4, 1)) - &bp).scale(&qf(1, 96));
    let j6 = (&(&j2.pow(3).scale(&qf(8, 1)) - &(&j2 * &j4).scale(&qf(160, 1))) - &cp).scale(&qf(1, 576));
    let j8 = (&(&j2 * &j6) - &j4.pow(2)).scale(&qf(1, 4));
    let j10 = dp.scale(&qf(1, 4096));
    let (i2, i4, i12) = liu_i_invariants(&j2, &j4, &j6, &j8);
    Ok(IgusaData {
        j2,
        j4,
        j6,
        j8,
        j10,
        i2,
        i4,
        i12,
    })
}

/// Liu's I2, I4, I12 from J2..J8.
pub fn liu_i_invariants(j2: &MultiPoly, j4: &MultiPoly, j6: &MultiPoly, j8: &MultiPoly) -> (MultiPoly, MultiPoly, MultiPoly) {
    let i2 = j2.clone();
    let i4 = &j2.pow(2) - &j4.scale(&qf(24, 1));
    let i12 = &(&(&(j4.pow(3).scale(&qf(-8, 1))) + &(&(j2 * j4) * j6).scale(&qf(9, 1))) - &j6.pow(2).scale(&qf(27, 1)))
        - &(&j2.pow(2) * j8);
    (i2, i4, i12)
}

/// Stable-model types of a genus-two fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StableType {
    /// smooth
    I,
    /// irreducible elliptic curve with one node
    II,
    /// rational curve with two nodes
    III,
    /// two rational curves meeting at three points
    IV,
    /// two elliptic curves meeting at one point
    V,
    /// elliptic curve and nodal rational curve meeting at one point
    VI,
    /// two nodal rational curves meeting at one point
    VII,
}

impl StableType {
    pub const ALL: [StableType; 7] = [
        StableType::I,
        StableType::II,
        StableType::III,
        StableType::IV,
        StableType::V,
        StableType::VI,
        StableType::VII,
    ];
}

impl fmt::Display for StableType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StableType::I => "I",
            StableType::II => "II",
            StableType::III => "III",
            StableType::IV => "IV",
            StableType::V => "V",
            StableType::VI => "VI",
            StableType::VII => "VII",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for StableType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        StableType::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| format!("unknown stable type {:?}", s))
    }
}

impl Serialize for StableType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Orders of J2, J4, J6, J8, J10, I2, I4, I12 at one place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ords {
    #[serde(rename = "J2")]
    pub j2: Valuation,
    #[serde(rename = "J4")]
    pub j4: Valuation,
    #[serde(rename = "J6")]
    pub j6: Valuation,
    #[serde(rename = "J8")]
    pub j8: Valuation,
    #[serde(rename = "J10")]
    pub j10: Valuation,
    #[serde(rename = "I2")]
    pub i2: Valuation,
    #[serde(rename = "I4")]
    pub i4: Valuation,
    #[serde(rename = "I12")]
    pub i12: Valuation,
}

impl Ords {
    pub fn from_data(d: &IgusaData, place: &Place, witness: &mut Witness) -> Result<Ords, LiuError> {
        let mut o = |p: &MultiPoly| ord_at(&RationalFunction::from_poly(p.clone()), place, witness);
        Ok(Ords {
            j2: o(&d.j2)?,
            j4: o(&d.j4)?,
            j6: o(&d.j6)?,
            j8: o(&d.j8)?,
            j10: o(&d.j10)?,
            i2: o(&d.i2)?,
            i4: o(&d.i4)?,
            i12: o(&d.i12)?,
        })
    }

    fn j(&self, i: usize) -> Valuation {
        [self.j2, self.j4, self.j6, self.j8, self.j10][i - 1]
    }
}

/// Order of a monomial prod f_k^{n_k}; `None` when a factor with a negative
/// exponent vanishes identically (the quotient is undefined).
fn ord_of(parts: &[(Valuation, i64)]) -> Option<Valuation> {
    let mut total = Valuation::Finite(0);
    for &(v, n) in parts {
        match v {
            Valuation::Infinite if n < 0 => return None,
            Valuation::Infinite if n > 0 => total = Valuation::Infinite,
            Valuation::Infinite => {}
            Valuation::Finite(x) => {
                if let Valuation::Finite(t) = total {
                    total = Valuation::Finite(t + n * x);
                }
            }
        }
    }
    Some(total)
}

/// Membership in the valuation ring R.
fn in_r(parts: &[(Valuation, i64)]) -> bool {
    matches!(ord_of(parts), Some(v) if v >= Valuation::Finite(0))
}

/// Membership in the maximal ideal.
fn in_m(parts: &[(Valuation, i64)]) -> bool {
    matches!(ord_of(parts), Some(v) if v > Valuation::Finite(0))
}

fn unit(parts: &[(Valuation, i64)]) -> bool {
    ord_of(parts) == Some(Valuation::Finite(0))
}

/// Whether the conditions for `t` hold.
pub fn condition_holds(t: StableType, o: &Ords) -> bool {
    let v_star = in_m(&[(o.i4, 1), (o.i2, -2)]) && in_m(&[(o.j10, 1), (o.i2, -5)]) && in_m(&[(o.i12, 1), (o.i2, -6)]);
    match t {
        StableType::I => (1..=5).all(|i| in_r(&[(o.j(i), 5), (o.j10, -(i as i64))])),
        StableType::II => {
            (1..=5).all(|i| in_r(&[(o.j(i), 6), (o.i12, -(i as i64))])) && in_m(&[(o.j10, 6), (o.i12, -5)])
        }
        StableType::III => {
            (1..=5).all(|i| in_r(&[(o.j(i), 2), (o.i4, -(i as i64))]))
                && in_m(&[(o.j10, 2), (o.i4, -5)])
                && in_m(&[(o.i12, 1), (o.i4, -3)])
                && (unit(&[(o.j4, 1), (o.i4, -1)]) || unit(&[(o.j6, 2), (o.i4, -3)]))
        }
        StableType::IV => (2..=5).all(|i| in_m(&[(o.j(i), 2), (o.i4, -(i as i64))])),
        StableType::V => {
            v_star && in_r(&[(o.i4, 3), (o.j10, -1), (o.i2, -1)]) && in_r(&[(o.i12, 1), (o.j10, -1), (o.i2, -1)])
        }
        StableType::VI => v_star && in_r(&[(o.i4, 3), (o.i12, -1)]) && in_m(&[(o.j10, 1), (o.i2, 1), (o.i12, -1)]),
        StableType::VII => v_star && in_m(&[(o.i12, 1), (o.i4, -3)]) && in_m(&[(o.j10, 1), (o.i2, 1), (o.i4, -3)]),
    }
}

/// The unique stable type whose conditions hold.
pub fn stable_type(o: &Ords) -> Result<StableType, LiuError> {
    let hits: Vec<StableType> = StableType::ALL.into_iter().filter(|t| condition_holds(*t, o)).collect();
    match hits.len() {
        0 => Err(LiuError::NoMatch(Box::new(*o))),
        1 => Ok(hits[0]),
        _ => Err(LiuError::MultiMatch { ords: Box::new(*o), types: hits }),
    }
}

/// A row of the published fiber tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub nu_type: String,
    pub dynkin: String,
    pub stable: String,
    pub phi: String,
    pub ogg: String,
    #[serde(default)]
    pub nu: String,
    pub page: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct G2FiberReport {
    pub place: String,
    pub fibration: String,
    pub ords: Ords,
    pub stable: StableType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    pub witness_seed: u64,
    #[serde(skip)]
    pub model: Option<InfinityModel<WeierstrassG2>>,
}

/// Normalization, chart at infinity, invariants, orders at bar = 0, stable type.
pub fn classify_g2_at_infinity(
    w: &WeierstrassG2,
    expected: Option<&ExpectedRow>,
    witness: &mut Witness,
) -> Result<G2FiberReport, LiuError> {
    let w = normalize_g2(w)?;
    let m = infinity_model_g2(&w)?;
    let data = igusa_invariants(&m.model)?;
    let ords = Ords::from_data(&data, &Place::zero(m.bar), witness)?;
    let stable = stable_type(&ords)?;
    let agreement = expected.map(|e| e.stable.trim() == stable.to_string());
    Ok(G2FiberReport {
        place: format!("{}=oo", w.var),
        fibration: w.var.name().to_string(),
        ords,
        stable,
        expected: expected.cloned(),
        agreement,
        witness_seed: witness.seed(),
        model: Some(m),
    })
}
