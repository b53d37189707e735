use std::collections::HashMap;

use crate::algebra::{RationalFunction, Q};

use super::matrix::Matrix;
use super::space::PhaseSpace;

/// How the slow time enters the flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deformation {
    /// delta = 0: t is frozen.
    Autonomous,
    /// delta fixed to a rational value; dt/dt_flow = delta.
    Value(Q),
    /// delta kept as the space's delta symbol.
    Symbolic,
}

impl Deformation {
    fn rate(&self, space: &PhaseSpace) -> Option<RationalFunction> {
        match self {
            Deformation::Autonomous => None,
            Deformation::Value(v) if num_traits::Zero::is_zero(v) => None,
            Deformation::Value(v) => Some(RationalFunction::constant(v.clone())),
            Deformation::Symbolic => Some(RationalFunction::var(space.delta())),
        }
    }

    /// Specializes delta inside an expression according to the mode.
    pub fn specialize(&self, f: &RationalFunction, space: &PhaseSpace) -> RationalFunction {
        let v = match self {
            Deformation::Autonomous => Q::from_integer(0.into()),
            Deformation::Value(v) => v.clone(),
            Deformation::Symbolic => return f.clone(),
        };
        if !f.contains_var(space.delta()) {
            return f.clone();
        }
        let mut m = HashMap::new();
        m.insert(space.delta(), v);
        f.eval(&m).expect("delta specialization keeps the denominator nonzero")
    }
}

/// {F, G} = sum_i dF/dq_i dG/dp_i - dG/dq_i dF/dp_i.
pub fn poisson_bracket(f: &RationalFunction, g: &RationalFunction, space: &PhaseSpace) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for &(q, p) in space.pairs() {
        let fq = f.derivative(q);
        let gp = g.derivative(p);
        if !fq.is_zero() && !gp.is_zero() {
            acc = &acc + &(&fq * &gp);
        }
        let gq = g.derivative(q);
        let fp = f.derivative(p);
        if !gq.is_zero() && !fp.is_zero() {
            acc = &acc - &(&gq * &fp);
        }
    }
    acc
}

/// dF/dt along the autonomous flow of H, gauge symbols moving at their prescribed rates.
pub fn hamiltonian_derivative(f: &RationalFunction, h: &RationalFunction, space: &PhaseSpace) -> RationalFunction {
    flow_derivative(f, h, space, &Deformation::Autonomous)
}

/// dF/dt along the flow of H; t advances at rate delta.
pub fn flow_derivative(
    f: &RationalFunction,
    h: &RationalFunction,
    space: &PhaseSpace,
    deformation: &Deformation,
) -> RationalFunction {
    let mut acc = poisson_bracket(f, h, space);
    for (u, rate) in space.gauge() {
        let fu = f.derivative(*u);
        if !fu.is_zero() && !rate.is_zero() {
            acc = &acc + &(&fu * rate);
        }
    }
    if let Some(r) = deformation.rate(space) {
        let ft = f.derivative(space.time());
        if !ft.is_zero() {
            acc = &acc + &(&ft * &r);
        }
    }
    acc
}

/// Entrywise time derivative of a matrix.
pub fn matrix_derivative(m: &Matrix, h: &RationalFunction, space: &PhaseSpace, deformation: &Deformation) -> Matrix {
    m.map(|e| flow_derivative(e, h, space, deformation))
}
