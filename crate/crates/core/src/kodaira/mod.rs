//! Kodaira types of genus-one fibers from the orders of the discriminant and j.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::gcd::{gcd, primitive_part_in};
use crate::algebra::{
    ord_at, AlgebraError, MultiPoly, Place, Q, RationalFunction, Symbol, Valuation, Witness,
};
use crate::curves::{infinity_model_g1, normalize_g1, CurveError, InfinityModel, WeierstrassG1};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KodairaError {
    #[error("discriminant vanishes identically")]
    SingularFamily,
    #[error("no Kodaira type has ord(Delta) = {ord_delta}, ord(j) = {ord_j}")]
    Unclassifiable { ord_delta: i64, ord_j: Valuation },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    I0,
    I(u32),
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Affine Dynkin label, `None` for I0 and II.
    pub fn dynkin(&self) -> Option<String> {
        Some(match self {
            KodairaType::I0 | KodairaType::II => return None,
            KodairaType::I(m) => format!("A_{}^(1)", m - 1),
            KodairaType::III => "A_1^(1)".into(),
            KodairaType::IV => "A_2^(1)".into(),
            KodairaType::IStar(m) => format!("D_{}^(1)", 4 + m),
            KodairaType::IVStar => "E_6^(1)".into(),
            KodairaType::IIIStar => "E_7^(1)".into(),
            KodairaType::IIStar => "E_8^(1)".into(),
        })
    }

    /// Euler number of the fiber, equal to ord(Delta) on a minimal model.
    pub fn euler_number(&self) -> u32 {
        match self {
            KodairaType::I0 => 0,
            KodairaType::I(m) => *m,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IStar(m) => 6 + m,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I0 => write!(f, "I0"),
            KodairaType::I(m) => write!(f, "I{}", m),
            KodairaType::IStar(m) => write!(f, "I{}*", m),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Delta = 4a^3 + 27b^2.
pub fn discriminant_g1(w: &WeierstrassG1) -> Result<MultiPoly, KodairaError> {
    let a3 = w.a.pow(3).scale(&Q::from_integer(4.into()));
    let delta = &a3 + &w.b.pow(2).scale(&Q::from_integer(27.into()));
    if delta.is_zero() {
        return Err(KodairaError::SingularFamily);
    }
    Ok(delta)
}

/// Delta = 4a^3 + 27b^2 and j = 4a^3/Delta.
pub fn delta_j(w: &WeierstrassG1) -> Result<(MultiPoly, RationalFunction), KodairaError> {
    let delta = discriminant_g1(w)?;
    let j = RationalFunction::new(w.a.pow(3).scale(&Q::from_integer(4.into())), delta.clone())?;
    Ok((delta, j))
}

/// Row lookup in the (ord Delta, ord j) table.
pub fn tate_classify(ord_delta: i64, ord_j: Valuation) -> Result<KodairaType, KodairaError> {
    let nonneg = ord_j >= Valuation::Finite(0);
    let t = match (ord_delta, ord_j) {
        (0, _) if nonneg => Some(KodairaType::I0),
        (2, _) if nonneg => Some(KodairaType::II),
        (3, _) if nonneg => Some(KodairaType::III),
        (4, _) if nonneg => Some(KodairaType::IV),
        (6, _) if nonneg => Some(KodairaType::IStar(0)),
        (8, _) if nonneg => Some(KodairaType::IVStar),
        (9, _) if nonneg => Some(KodairaType::IIIStar),
        (10, _) if nonneg => Some(KodairaType::IIStar),
        (m, Valuation::Finite(j)) if m > 0 && j == -m => Some(KodairaType::I(m as u32)),
        (d, Valuation::Finite(j)) if d > 6 && j == 6 - d => Some(KodairaType::IStar((d - 6) as u32)),
        _ => None,
    };
    t.ok_or(KodairaError::Unclassifiable { ord_delta, ord_j })
}

#[derive(Clone, Debug, Serialize)]
pub struct G1FiberReport {
    pub place: String,
    #[serde(rename = "ordDelta")]
    pub ord_delta: i64,
    #[serde(rename = "ordJ")]
    pub ord_j: Valuation,
    pub kodaira: KodairaType,
    pub dynkin: Option<String>,
    #[serde(skip)]
    pub model: Option<InfinityModel<WeierstrassG1>>,
    pub witness_seed: u64,
}

/// Normalization, chart at infinity, valuations at bar = 0, table lookup.
pub fn classify_g1_at_infinity(w: &WeierstrassG1, witness: &mut Witness) -> Result<G1FiberReport, KodairaError> {
    let w = normalize_g1(w)?;
    let m = infinity_model_g1(&w)?;
    let delta = discriminant_g1(&m.model)?;
    let place = Place::zero(m.bar);
    let od = ord_at(&RationalFunction::from_poly(delta), &place, witness)?;
    let od = od.finite().ok_or(KodairaError::SingularFamily)?;
    // ord j = 3 ord a - ord Delta
    let oj = match ord_at(&RationalFunction::from_poly(m.model.a.clone()), &place, witness)? {
        Valuation::Finite(oa) => Valuation::Finite(3 * oa - od),
        Valuation::Infinite => Valuation::Infinite,
    };
    let k = tate_classify(od, oj)?;
    Ok(G1FiberReport {
        place: format!("{}=oo", w.var),
        ord_delta: od,
        ord_j: oj,
        kodaira: k,
        dynkin: k.dynkin(),
        model: Some(m),
        witness_seed: witness.seed(),
    })
}

/// Singular fibers over the roots of a factor of Delta.
#[derive(Clone, Debug)]
pub struct FiniteFiber {
    /// Squarefree polynomial in the fibration variable whose roots carry this fiber.
    pub locus: MultiPoly,
    pub points: u32,
    pub ord_delta: i64,
    pub ord_j: Valuation,
    pub kodaira: KodairaType,
}

/// Splits a squarefree `f` by the exact multiplicity of `p` at its roots.
fn split_by_multiplicity(f: &MultiPoly, p: &MultiPoly, v: Symbol) -> Vec<(MultiPoly, Option<u32>)> {
    if p.is_zero() {
        return vec![(f.clone(), None)];
    }
    let mut out = Vec::new();
    let mut cur = f.clone();
    let mut rest = p.clone();
    let mut m = 0;
    loop {
        let g = primitive_part_in(&gcd(&cur, &rest), v);
        let g = if g.degree_in(v) == 0 { MultiPoly::one() } else { g };
        let here = cur.div_exact(&g).expect("gcd divides");
        if here.degree_in(v) > 0 {
            out.push((here, Some(m)));
        }
        if g.degree_in(v) == 0 {
            return out;
        }
        rest = rest.div_exact(&g).expect("squarefree factor divides");
        cur = g;
        m += 1;
    }
}

/// Yun decomposition of `p` in `v`: (factor, multiplicity) with squarefree factors.
fn squarefree_decomposition(p: &MultiPoly, v: Symbol) -> Vec<(MultiPoly, u32)> {
    let norm = |g: MultiPoly| if g.degree_in(v) == 0 { MultiPoly::one() } else { primitive_part_in(&g, v) };
    let mut out = Vec::new();
    let f = primitive_part_in(p, v);
    if f.degree_in(v) == 0 {
        return out;
    }
    let df = f.derivative(v);
    let a0 = norm(gcd(&f, &df));
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative(v);
    let mut i = 1;
    while b.degree_in(v) > 0 {
        let a = norm(gcd(&b, &d));
        if a.degree_in(v) > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        let c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative(v);
        i += 1;
    }
    out
}

/// All singular fibers over finite values of the fibration variable.
pub fn finite_fibers(w: &WeierstrassG1) -> Result<Vec<FiniteFiber>, KodairaError> {
    let w = normalize_g1(w)?;
    let v = w.var;
    let delta = discriminant_g1(&w)?;
    let mut out = Vec::new();
    for (f, k) in squarefree_decomposition(&delta, v) {
        for (part, ma) in split_by_multiplicity(&f, &w.a, v) {
            let od = k as i64;
            let oj = match ma {
                None => Valuation::Infinite,
                Some(m) => Valuation::Finite(3 * m as i64 - od),
            };
            out.push(FiniteFiber {
                points: part.degree_in(v),
                locus: part,
                ord_delta: od,
                ord_j: oj,
                kodaira: tate_classify(od, oj)?,
            });
        }
    }
    Ok(out)
}
