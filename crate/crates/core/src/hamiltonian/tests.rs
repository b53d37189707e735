use super::*;
use crate::algebra::{parse_expr, q, Macros, RationalFunction, Symbol, Witness};

fn e(s: &str) -> RationalFunction {
    parse_expr(s, &Macros::new()).unwrap()
}

fn m(rows: &[&[&str]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| e(s)).collect()).collect()).unwrap()
}

fn p2_system(h: &str) -> LaxSystem {
    let space = PhaseSpace::standard(1, &["kappa1"]).with_gauge(Symbol::new("u"), RationalFunction::zero());
    let s = "(-p + q^2 + t)";
    let a = m(&[
        &[&format!("{s} + 0"), "(x + q)/u"],
        &[&format!("u*({s}*x + -{s}*q + kappa1)"), "x^2 + p - q^2"],
    ]);
    let b = m(&[&["q", "1/u"], &[&format!("u*{s}"), "x"]]);
    LaxSystem::new(Symbol::new("x"), a, b, e(h), space).unwrap()
}

fn mat_space() -> PhaseSpace {
    PhaseSpace::standard(2, &["kappa2"]).with_gauge(Symbol::new("u"), e("-2*p2*u"))
}

const H_MAT: &str = "-2*p2*(p2*q2 - kappa2) + p1^2/2 - 2*q1*t - 2*q1*(q1^2 - q2) + 4*q1*q2";
const G_MAT: &str = "q2*(p1*p2 + 3*q1^2 - q2 + t)^2 - kappa2*p1*(p1*p2 + 3*q1^2 - q2 + t) - 2*kappa2^2*q1";

fn mat_system() -> LaxSystem {
    let z = Matrix::zero(2);
    let id = Matrix::identity(2);
    let qm = m(&[&["q1", "u"], &["-q2/u", "q1"]]);
    let pm = m(&[&["p1/2", "-p2*u"], &["(p2*q2 - kappa2)/u", "p1/2"]]);
    let t = e("t");
    let a0 = Matrix::blocks(&z, &id, &z, &z);
    let a1 = Matrix::blocks(&z, &qm, &id, &z);
    let neg = RationalFunction::constant(q(-1));
    let a2 = Matrix::blocks(
        &pm.scale(&neg),
        &qm.mul(&qm).add(&id.scale(&t)),
        &qm.scale(&neg),
        &pm,
    );
    let b1 = Matrix::blocks(&z, &qm.scale(&e("2")), &id, &z);
    let x = e("x");
    let a = a0.scale(&x.pow(2)).add(&a1.scale(&x)).add(&a2);
    let b = a0.scale(&x).add(&b1);
    LaxSystem::new(Symbol::new("x"), a, b, e(H_MAT), mat_space()).unwrap()
}

#[test]
fn canonical_pair() {
    let sp = PhaseSpace::standard(2, &[]);
    assert_eq!(poisson_bracket(&e("q1"), &e("p1"), &sp), e("1"));
    assert_eq!(poisson_bracket(&e("p2"), &e("q2"), &sp), e("-1"));
    assert!(poisson_bracket(&e("q1"), &e("p2"), &sp).is_zero());
    let h = e(H_MAT);
    assert!(poisson_bracket(&h, &h, &sp).is_zero());
}

#[test]
fn second_painleve_equations_of_motion() {
    let sp = PhaseSpace::standard(1, &["kappa1"]);
    let h = e("p^2 - (q^2 + t)*p + kappa1*q");
    assert_eq!(hamiltonian_derivative(&e("q"), &h, &sp), e("2*p - q^2 - t"));
    assert_eq!(hamiltonian_derivative(&e("p"), &h, &sp), e("2*p*q - kappa1"));
    assert!(hamiltonian_derivative(&e("7/3"), &h, &sp).is_zero());
    let hd = e("p^2 - (q^2 + t)*p + (kappa1 - delta)*q");
    let dp = flow_derivative(&e("p"), &hd, &sp, &Deformation::Symbolic);
    assert_eq!(dp, e("2*p*q + delta - kappa1"));
}

#[test]
fn second_painleve_lax_pair() {
    let sys = p2_system("p^2 - (q^2 + t)*p + (kappa1 - delta)*q");
    assert!(lax_residual(&sys, &Deformation::Autonomous).is_zero());
    assert!(lax_residual(&sys, &Deformation::Symbolic).is_zero());
    assert!(lax_residual(&sys, &Deformation::Value(q(1))).is_zero());
    // the flow must use H(delta), not H(0)
    let wrong = p2_system("p^2 - (q^2 + t)*p + kappa1*q");
    assert!(!lax_residual(&wrong, &Deformation::Symbolic).is_zero());
    let cp = sys.spectral_curve(Symbol::new("y"));
    let expected = e("y^2 - (x^2 + t)*y - kappa1*x - (p^2 - (q^2 + t)*p + kappa1*q)");
    assert_eq!(cp, expected);
    for k in 1..=2 {
        assert!(trace_power_conservation(&sys, k).is_zero());
    }
}

#[test]
fn first_painleve_lax_pair() {
    let sp = PhaseSpace::standard(1, &[]);
    let a = m(&[&["-p", "x^2 + q*x + q^2 + t"], &["x - q", "p"]]);
    let b = m(&[&["0", "x + 2*q"], &["1", "0"]]);
    let sys = LaxSystem::new(Symbol::new("x"), a, b, e("p^2 - q^3 - t*q"), sp).unwrap();
    assert!(lax_residual(&sys, &Deformation::Autonomous).is_zero());
    let cp = sys.spectral_curve(Symbol::new("y"));
    assert_eq!(cp, e("y^2 - x^3 - t*x - (p^2 - q^3 - t*q)"));
}

#[test]
fn matrix_first_painleve() {
    let sys = mat_system();
    assert!(lax_residual(&sys, &Deformation::Autonomous).is_zero());
    let cp = sys.spectral_curve(Symbol::new("y"));
    let h = format!("({})", H_MAT);
    let g = format!("({} + {}^2/4)", G_MAT, h);
    let quartic = format!(
        "y^4 - (2*x^3 + 2*t*x + {h})*y^2 + x^6 + 2*t*x^4 + {h}*x^3 + t^2*x^2 + (t*{h} - kappa2^2)*x + {g}"
    );
    assert_eq!(cp, e(&quartic));
    assert_eq!(trace_power_conservation(&sys, 1), RationalFunction::zero());
    assert!(trace_power_conservation(&sys, 2).is_zero());
    assert!(poisson_bracket(&e(G_MAT), &e(H_MAT), &sys.space).is_zero());
}

#[test]
fn matrix_first_painleve_gauge_rate_matters() {
    let mut sys = mat_system();
    sys.space = PhaseSpace::standard(2, &["kappa2"]).with_gauge(Symbol::new("u"), RationalFunction::zero());
    assert!(!lax_residual(&sys, &Deformation::Autonomous).is_zero());
}

#[test]
fn constant_diagonal_pair() {
    let sp = PhaseSpace::standard(1, &[]);
    let a = Matrix::diagonal(vec![e("2"), e("-1/3"), e("5")]);
    let b = Matrix::diagonal(vec![e("7"), e("0"), e("1")]);
    let sys = LaxSystem::new(Symbol::new("x"), a.clone(), b, RationalFunction::zero(), sp).unwrap();
    assert!(lax_residual(&sys, &Deformation::Autonomous).is_zero());
    assert!(trace_power_conservation(&sys, 3).is_zero());
    assert_eq!(char_poly(&a, Symbol::new("y")), e("(y - 2)*(y + 1/3)*(y - 5)"));
}

#[test]
fn integrability_report() {
    let sp = mat_space();
    let mut w = Witness::new(1);
    let r = verify_integrable("H_I^Mat", &[e(H_MAT), e(G_MAT)], &sp, &mut w, 5).unwrap();
    assert!(r.bracket_zero && r.pass);
    assert_eq!(r.jacobian_rank, 2);
    let mut w = Witness::new(1);
    let r = verify_integrable("dup", &[e(H_MAT), e(H_MAT)], &sp, &mut w, 5).unwrap();
    assert!(r.bracket_zero);
    assert_eq!(r.jacobian_rank, 1);
    assert!(!r.pass);
}

#[test]
fn rank_of_rational_matrices() {
    let r = |v: Vec<Vec<i64>>| rank_q(v.into_iter().map(|row| row.into_iter().map(q).collect()).collect());
    assert_eq!(r(vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(r(vec![vec![0, 1, 0], vec![1, 0, 0]]), 2);
    assert_eq!(r(vec![vec![0, 0]]), 0);
}
