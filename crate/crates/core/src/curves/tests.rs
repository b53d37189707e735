use super::*;
use crate::algebra::{parse_expr, Macros, MultiPoly, Symbol};

fn p(s: &str) -> MultiPoly {
    parse_expr(s, &Macros::new()).unwrap().as_poly().unwrap().clone()
}

fn sym(s: &str) -> Symbol {
    Symbol::new(s)
}

fn g1(a: &str, b: &str, v: &str) -> WeierstrassG1 {
    WeierstrassG1::new(p(a), p(b), sym(v))
}

fn g2(a: [&str; 7], v: &str) -> WeierstrassG2 {
    WeierstrassG2::new(a.map(p), sym(v))
}

#[test]
fn normalize_genus_one() {
    assert_eq!(normalize_g1(&g1("h^4", "h^6", "h")).unwrap(), g1("1", "1", "h"));
    let w = g1("t*hbar^4", "hbar^5", "hbar");
    assert_eq!(normalize_g1(&w).unwrap(), w);
    assert_eq!(normalize_g1(&g1("0", "h^12", "h")).unwrap(), g1("0", "1", "h"));
    let w = g1("(h - t)^4*(h + 1)", "(h - t)^6*h^7", "h");
    assert_eq!(normalize_g1(&w).unwrap(), g1("h + 1", "h^7", "h"));
    assert_eq!(normalize_g1(&g1("0", "0", "h")), Err(CurveError::SingularFamily));
}

#[test]
fn chart_at_infinity_genus_one() {
    let w = g1("t", "h", "h");
    let m = infinity_model_g1(&w).unwrap();
    assert_eq!(m.n, 1);
    assert_eq!(m.model, g1("t*hbar^4", "hbar^5", "hbar"));
    let (x, y) = (sym("x"), sym("y"));
    assert_eq!(m.round_trip(x, y).unwrap(), w.equation(x, y));

    let c = g1("2", "-3", "h");
    let m = infinity_model_g1(&c).unwrap();
    assert_eq!((m.n, m.k), (1, 1));
    assert_eq!(m.model, g1("2", "-3", "hbar"));
    assert_eq!(m.round_trip(x, y).unwrap(), c.equation(x, y));

    let w = g1("h^5 + t", "h^7 - 1", "h");
    let m = infinity_model_g1(&w).unwrap();
    assert_eq!(m.n, 2);
    assert_eq!(m.round_trip(x, y).unwrap(), w.equation(x, y));
}

#[test]
fn normalize_genus_two() {
    let w = g2(["1", "h", "h^2", "h^3", "h^4", "h^5", "h^6"], "h");
    assert_eq!(normalize_g2(&w).unwrap(), g2(["1"; 7], "h"));
    let gar = g2(["0", "9", "0", "9*t1", "3*t2", "-h", "g"], "h");
    assert_eq!(normalize_g2(&gar).unwrap(), gar);
    let w = g2(["h^6", "2*h^7", "h^8", "h^9", "h^10", "h^11", "h^12"], "h");
    let n = normalize_g2(&w).unwrap();
    assert_eq!(n, g2(["h^6", "2*h^5", "h^4", "h^3", "h^2", "h", "1"], "h"));
    let w = g2(["0", "0", "1", "0", "0", "0", "h"], "h");
    assert_eq!(normalize_g2(&w), Err(CurveError::DegenerateSextic));
}

#[test]
fn chart_at_infinity_genus_two() {
    let gar = g2(["0", "9", "0", "9*t1", "3*t2", "-h", "g"], "h");
    let m = infinity_model_g2(&gar).unwrap();
    assert_eq!(m.n, 1);
    let weighted = g2(["0", "9*hbar", "0", "9*t1*hbar^3", "3*t2*hbar^4", "-hbar^4", "g*hbar^6"], "hbar");
    assert_eq!(m.model, weighted);
    let displayed = g2(["0", "9*hbar^6", "0", "9*t1*hbar^6", "3*t2*hbar^6", "-hbar^5", "g*hbar^6"], "hbar");
    assert_eq!(m.model.rescale_x(&p("hbar")), displayed);
    let (x, y) = (sym("x"), sym("y"));
    assert_eq!(m.round_trip(x, y).unwrap(), gar.equation(x, y));

    let gf = g2(["0", "9", "0", "9*t1", "3*t2", "-h", "g"], "g");
    let m = infinity_model_g2(&gf).unwrap();
    let expected = g2(["0", "9*gbar", "0", "9*t1*gbar^3", "3*t2*gbar^4", "-h*gbar^5", "gbar^5"], "gbar");
    assert_eq!(m.model, expected);
    assert_eq!(m.round_trip(x, y).unwrap(), gf.equation(x, y));

    let c = g2(["1", "2", "0", "0", "0", "0", "5"], "h");
    let m = infinity_model_g2(&c).unwrap();
    assert_eq!(m.model.a, g2(["1", "2", "0", "0", "0", "0", "5"], "hbar").a);
    assert_eq!(m.round_trip(x, y).unwrap(), c.equation(x, y));
}

fn curve(s: &str, fib: &str) -> SpectralCurve {
    SpectralCurve {
        poly: p(s),
        x: sym("x"),
        y: sym("y"),
        fibration: sym(fib),
    }
}

#[test]
fn weierstrass_input_unchanged() {
    let c = curve("y^2 - x^3 - t*x - h", "h");
    let r = reduce_to_weierstrass(&c).unwrap();
    assert_eq!(r.model, WeierstrassModel::G1(g1("t", "h", "h")));
    assert_eq!(r.certify(&c), Some(true));
    let c = curve("y^2 - 9*x^5 - 9*t1*x^3 - 3*t2*x^2 + h*x - g", "h");
    let r = reduce_to_weierstrass(&c).unwrap();
    assert_eq!(r.model, WeierstrassModel::G2(g2(["0", "9", "0", "9*t1", "3*t2", "-h", "g"], "h")));
}

#[test]
fn quadratic_curve_completes_square() {
    let c = curve("y^2 - (x^2 + t)*y - kappa1*x - h", "h");
    let r = reduce_to_weierstrass(&c).unwrap();
    assert_eq!(r.shape, Shape::Quadratic);
    assert!(r.jacobian);
    assert_eq!(r.model.genus(), Genus::One);
    // non-monic cubic keeps a coordinate certificate
    let c = curve("x*y^2 + y + x^2 - h", "h");
    let r = reduce_to_weierstrass(&c).unwrap();
    assert!(!r.jacobian);
    assert_eq!(r.certify(&c), Some(true));
}

#[test]
fn square_factors_are_stripped() {
    let c = curve("y^2 - x^2*(x^3 + h*x + 1)", "h");
    let r = reduce_to_weierstrass(&c).unwrap();
    assert_eq!(r.model, WeierstrassModel::G1(g1("h", "1", "h")));
    assert_eq!(r.certify(&c), Some(true));
}

#[test]
fn biquadratic_matrix_curve() {
    let quartic = "y^4 - (2*x^3 + 2*t*x + h)*y^2 + x^6 + 2*t*x^4 + h*x^3 + t^2*x^2 + (t*h - kappa2^2)*x + g";
    for fib in ["h", "g"] {
        let c = curve(quartic, fib);
        let r = reduce_to_weierstrass(&c).unwrap();
        assert_eq!(r.shape, Shape::Biquadratic);
        assert_eq!(r.radicand, Some(p("4*kappa2^2*x + h^2 - 4*g")));
        match &r.model {
            WeierstrassModel::G2(w) => {
                assert!(!w.a[0].is_zero());
                assert_eq!(w.sextic(sym("x")).degree_in(sym("x")), 6);
            }
            other => panic!("expected genus two, got {:?}", other),
        }
        assert_eq!(r.certify(&c), Some(true));
        let minus = reduce_with_branch(&c, Branch::Minus).unwrap();
        assert_eq!(minus.certify(&c), Some(true));
    }
}

#[test]
fn unsupported_shapes() {
    assert!(matches!(
        reduce_to_weierstrass(&curve("y^3 - x", "h")),
        Err(CurveError::UnsupportedShape(_))
    ));
    assert!(matches!(
        reduce_to_weierstrass(&curve("y^4 - x*y^2 + x^2*h", "h")),
        Err(CurveError::UnsupportedShape(_))
    ));
    assert_eq!(reduce_to_weierstrass(&curve("y^2 - x^2 - h", "h")).unwrap_err(), CurveError::GenusDrop);
}
