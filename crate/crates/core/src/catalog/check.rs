use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{RationalFunction, Symbol, Witness, Q};
use crate::hamiltonian::{
    lax_residual, trace_power_conservation, verify_integrable, Deformation, HamiltonianError, VerificationReport,
    DEFAULT_WITNESS_POINTS,
};

use super::CatalogEntry;

/// Integrability and Lax checks of one catalog entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryCheck {
    pub system: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integrability: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lax_residual_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_powers_conserved: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_curve_matches: Option<bool>,
    /// `None` when the entry carries nothing to check.
    pub pass: Option<bool>,
}

impl CatalogEntry {
    /// det(y - A) minus the stored spectral curve with its bindings
    /// substituted, at delta = 0.
    pub fn spectral_curve_defect(&self) -> Option<RationalFunction> {
        let (lax, sc) = (self.lax.as_ref()?, self.spectral_curve.as_ref()?);
        let zero: HashMap<Symbol, Q> = [(lax.space.delta(), Q::from_integer(0.into()))].into_iter().collect();
        let binds: HashMap<Symbol, RationalFunction> = sc
            .bindings
            .iter()
            .map(|(s, v)| (*s, v.eval(&zero).expect("delta = 0 is regular")))
            .collect();
        let stored = RationalFunction::from_poly(sc.equation.clone()).subs(&binds).ok()?;
        let det = lax.spectral_curve(sc.y);
        let det = if lax.x == sc.x {
            det
        } else {
            let m = [(lax.x, RationalFunction::var(sc.x))].into_iter().collect();
            det.subs(&m).ok()?
        };
        Some(&det - &stored)
    }
}

pub fn check_entry(e: &CatalogEntry, witness: &mut Witness) -> Result<EntryCheck, HamiltonianError> {
    let mut integrability = match (&e.space, e.verifiable()) {
        (Some(space), true) => Some(verify_integrable(
            &e.name,
            &e.conserved_quantities(),
            space,
            witness,
            DEFAULT_WITNESS_POINTS,
        )?),
        _ => None,
    };
    let (mut residual, mut traces) = (None, None);
    if let Some(lax) = &e.lax {
        residual = Some(lax_residual(lax, &Deformation::Autonomous).is_zero());
        traces = Some((1..=lax.size() as u32).all(|k| trace_power_conservation(lax, k).is_zero()));
        if let Some(r) = integrability.as_mut() {
            r.residual_zero = residual;
            r.pass &= residual == Some(true);
        }
    }
    let curve = e.spectral_curve_defect().map(|d| d.is_zero());
    let checks = [integrability.as_ref().map(|r| r.pass), residual, traces, curve];
    let pass = checks.iter().flatten().copied().reduce(|a, b| a && b);
    Ok(EntryCheck {
        system: e.name.clone(),
        integrability,
        lax_residual_zero: residual,
        trace_powers_conserved: traces,
        spectral_curve_matches: curve,
        pass,
    })
}
