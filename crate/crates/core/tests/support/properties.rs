//! Randomized invariant checks shared by the integration suites.
//!
//! Each check runs a fixed number of proptest cases from a deterministic
//! generator and returns the first counterexample as an error string.

#![allow(dead_code)]

use painleve::algebra::{discriminant_poly, qf, Monomial, MultiPoly, RationalFunction, Symbol, Q};
use painleve::curves::{infinity_model_g1, infinity_model_g2, normalize_g1, normalize_g2, WeierstrassG1, WeierstrassG2};
use painleve::hamiltonian::{poisson_bracket, PhaseSpace};
use painleve::liu::igusa_invariants;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn sym(s: &str) -> Symbol {
    Symbol::new(s)
}

/// Polynomial with up to `terms` terms in `vars`, each exponent at most `deg`.
pub fn poly(vars: &'static [&'static str], deg: u32, terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0..=deg, vars.len()), -5i64..=5, 1i64..=3);
    prop::collection::vec(term, 1..=terms).prop_map(move |ts| {
        MultiPoly::from_terms(ts.into_iter().map(|(es, n, d)| {
            let m = Monomial::from_pairs(vars.iter().zip(es).map(|(v, e)| (sym(v), e)).collect());
            (m, qf(n, d))
        }))
    })
}

fn small_q() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| qf(n, d))
}

fn nonzero_q() -> impl Strategy<Value = Q> {
    small_q().prop_filter("nonzero", |v| *v != qf(0, 1))
}

/// Sextic with rational coefficients and a nonzero x^6 coefficient.
fn sextic() -> impl Strategy<Value = WeierstrassG2> {
    (nonzero_q(), prop::collection::vec(small_q(), 6)).prop_map(|(a0, rest)| {
        let mut a: [MultiPoly; 7] = std::array::from_fn(|_| MultiPoly::zero());
        a[0] = MultiPoly::constant(a0);
        for (i, c) in rest.into_iter().enumerate() {
            a[i + 1] = MultiPoly::constant(c);
        }
        WeierstrassG2::new(a, sym("h"))
    })
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())?;
    Ok(cases)
}

/// {F,{G,H}} + {G,{H,F}} + {H,{F,G}} = 0 for random polynomials in two degrees of freedom.
pub fn jacobi_identity(cases: u32) -> Result<u32, String> {
    const VARS: &[&str] = &["q1", "p1", "q2", "p2", "t"];
    let space = PhaseSpace::standard(2, &[]);
    let p = || poly(VARS, 2, 4).prop_map(RationalFunction::from_poly);
    run(cases, (p(), p(), p()), |(f, g, h)| {
        let b = |a: &RationalFunction, c: &RationalFunction| poisson_bracket(a, c, &space);
        let s = &(&b(&f, &b(&g, &h)) + &b(&g, &b(&h, &f))) + &b(&h, &b(&f, &g));
        if s.is_zero() {
            Ok(())
        } else {
            Err(fail(format!("Jacobi sum {:?}", s)))
        }
    })
}

fn js(w: &WeierstrassG2) -> Vec<MultiPoly> {
    let d = igusa_invariants(w).expect("sextic of degree six");
    (1..=5).map(|i| d.j(i).clone()).collect()
}

/// J_{2i}(mu f) = mu^{2i} J_{2i}(f).
pub fn igusa_homogeneity(cases: u32) -> Result<u32, String> {
    run(cases, (sextic(), nonzero_q()), |(w, mu)| {
        let scaled = WeierstrassG2::new(w.a.clone().map(|c| c.scale(&mu)), w.var);
        let (a, b) = (js(&w), js(&scaled));
        for i in 0..5 {
            let want = a[i].scale(&painleve::algebra::rational::pow_q(&mu, 2 * (i as u32 + 1)));
            if b[i] != want {
                return Err(fail(format!("J{} not homogeneous for {:?}", 2 * (i + 1), w.a)));
            }
        }
        Ok(())
    })
}

/// J_{2i}(f(x + c)) = J_{2i}(f(x)).
pub fn igusa_translation(cases: u32) -> Result<u32, String> {
    run(cases, (sextic(), small_q()), |(w, c)| {
        let x = sym("x");
        let shifted = w.sextic(x).shift(x, &c);
        let cs = shifted.coeffs_in(x);
        let moved = WeierstrassG2::new(std::array::from_fn(|i| cs.get(6 - i).cloned().unwrap_or_else(MultiPoly::zero)), w.var);
        if js(&w) == js(&moved) {
            Ok(())
        } else {
            Err(fail(format!("translation by {} changes J for {:?}", c, w.a)))
        }
    })
}

/// J_{2i} unchanged by a_k <-> a_{6-k}.
pub fn igusa_reversal(cases: u32) -> Result<u32, String> {
    run(cases, sextic().prop_filter("reversed sextic keeps degree", |w| !w.a[6].is_zero()), |w| {
        let mut a = w.a.clone();
        a.reverse();
        if js(&w) == js(&WeierstrassG2::new(a, w.var)) {
            Ok(())
        } else {
            Err(fail(format!("reversal changes J for {:?}", w.a)))
        }
    })
}

fn j10_vs_disc(w: &WeierstrassG2) -> Result<(), TestCaseError> {
    let x = sym("x");
    let j10 = igusa_invariants(w).expect("sextic of degree six").j10;
    let disc = discriminant_poly(&w.sextic(x), x).map_err(|e| fail(e.to_string()))?;
    if j10.is_zero() == disc.is_zero() {
        Ok(())
    } else {
        Err(fail(format!("J10 = {} but disc = {} for {:?}", j10, disc, w.a)))
    }
}

/// Sextic (x - r)^2 q(x) with a random quartic q.
fn repeated_root_sextic() -> impl Strategy<Value = WeierstrassG2> {
    (small_q(), nonzero_q(), prop::collection::vec(small_q(), 4)).prop_map(|(r, lead, rest)| {
        let x = sym("x");
        let mut cs = vec![MultiPoly::constant(lead)];
        cs.extend(rest.into_iter().map(MultiPoly::constant));
        cs.reverse();
        let q = MultiPoly::from_coeffs_in(x, &cs);
        let lin = &MultiPoly::var(x) - &MultiPoly::constant(r);
        let f = &lin.pow(2) * &q;
        let c = f.coeffs_in(x);
        WeierstrassG2::new(std::array::from_fn(|i| c[6 - i].clone()), sym("h"))
    })
}

/// J10 = 0 exactly when the discriminant vanishes, on random and
/// constructed repeated-root sextics. Returns (random, repeated) counts.
pub fn j10_discriminant(random: u32, repeated: u32) -> Result<(u32, u32), String> {
    run(random, sextic(), |w| j10_vs_disc(&w))?;
    run(repeated, repeated_root_sextic(), |w| {
        if !igusa_invariants(&w).expect("sextic of degree six").j10.is_zero() {
            return Err(fail(format!("J10 nonzero on a repeated root {:?}", w.a)));
        }
        j10_vs_disc(&w)
    })?;
    Ok((random, repeated))
}

const FIB: &[&str] = &["h", "t"];

/// Chart at infinity of random genus-one and genus-two families glues back
/// to the normalized source equation.
pub fn infinity_round_trip(cases: u32) -> Result<u32, String> {
    let (x, y) = (sym("x"), sym("y"));
    run(cases, (poly(FIB, 5, 3), poly(FIB, 7, 3)), |(a, b)| {
        let w = normalize_g1(&WeierstrassG1::new(a, b, sym("h"))).map_err(|e| fail(e.to_string()))?;
        let m = infinity_model_g1(&w).map_err(|e| fail(e.to_string()))?;
        if m.round_trip(x, y).map_err(|e| fail(e.to_string()))? != w.equation(x, y) {
            return Err(fail(format!("genus-one round trip fails for {:?}", w)));
        }
        Ok(())
    })?;
    let coeffs = (nonzero_q(), prop::collection::vec(poly(FIB, 4, 2), 6));
    run(cases, coeffs, |(a0, rest)| {
        let mut a: [MultiPoly; 7] = std::array::from_fn(|_| MultiPoly::zero());
        a[0] = MultiPoly::constant(a0);
        for (i, c) in rest.into_iter().enumerate() {
            a[i + 1] = c;
        }
        let w = normalize_g2(&WeierstrassG2::new(a, sym("h"))).map_err(|e| fail(e.to_string()))?;
        let m = infinity_model_g2(&w).map_err(|e| fail(e.to_string()))?;
        if m.round_trip(x, y).map_err(|e| fail(e.to_string()))? != w.equation(x, y) {
            return Err(fail(format!("genus-two round trip fails for {:?}", w)));
        }
        Ok(())
    })?;
    Ok(2 * cases)
}
