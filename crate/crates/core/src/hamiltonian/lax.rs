use crate::algebra::{RationalFunction, Symbol};

use super::flow::{flow_derivative, matrix_derivative, Deformation};
use super::matrix::{char_poly, Matrix};
use super::space::PhaseSpace;
use super::HamiltonianError;

/// Deformed Lax pair: delta dY/dx = A Y, dY/dt = B Y, with flow Hamiltonian H(delta).
#[derive(Clone, Debug)]
pub struct LaxSystem {
    pub x: Symbol,
    pub a: Matrix,
    pub b: Matrix,
    pub hamiltonian: RationalFunction,
    pub space: PhaseSpace,
}

impl LaxSystem {
    pub fn new(
        x: Symbol,
        a: Matrix,
        b: Matrix,
        hamiltonian: RationalFunction,
        space: PhaseSpace,
    ) -> Result<LaxSystem, HamiltonianError> {
        if a.size() != b.size() {
            return Err(HamiltonianError::SizeMismatch(a.size(), b.size()));
        }
        Ok(LaxSystem {
            x,
            a,
            b,
            hamiltonian,
            space,
        })
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    /// H with delta specialized per the deformation mode.
    pub fn hamiltonian_at(&self, d: &Deformation) -> RationalFunction {
        d.specialize(&self.hamiltonian, &self.space)
    }

    /// The spectral curve det(y I - A(x)) at delta = 0.
    pub fn spectral_curve(&self, y: Symbol) -> RationalFunction {
        let a = self.a.map(|e| Deformation::Autonomous.specialize(e, &self.space));
        char_poly(&a, y)
    }
}

/// dA/dt - delta dB/dx + [A, B].
pub fn lax_residual(sys: &LaxSystem, deformation: &Deformation) -> Matrix {
    let sp = &sys.space;
    let a = sys.a.map(|e| deformation.specialize(e, sp));
    let b = sys.b.map(|e| deformation.specialize(e, sp));
    let h = sys.hamiltonian_at(deformation);
    let da = matrix_derivative(&a, &h, sp, deformation);
    let mut r = da.add(&a.commutator(&b));
    let delta = match deformation {
        Deformation::Autonomous => None,
        Deformation::Value(v) => Some(RationalFunction::constant(v.clone())),
        Deformation::Symbolic => Some(RationalFunction::var(sp.delta())),
    };
    if let Some(dl) = delta {
        if !dl.is_zero() {
            r = r.sub(&b.derivative(sys.x).scale(&dl));
        }
    }
    r
}

/// d/dt tr(A^k) along the autonomous flow.
pub fn trace_power_conservation(sys: &LaxSystem, k: u32) -> RationalFunction {
    let d = Deformation::Autonomous;
    let a = sys.a.map(|e| d.specialize(e, &sys.space));
    let tr = a.pow(k).trace();
    flow_derivative(&tr, &sys.hamiltonian_at(&d), &sys.space, &d)
}
