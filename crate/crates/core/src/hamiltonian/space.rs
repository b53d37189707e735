use std::collections::HashSet;

use crate::algebra::{RationalFunction, Symbol};

use super::HamiltonianError;

/// Canonical coordinates, parameters and gauge symbols of a phase space.
#[derive(Clone, Debug)]
pub struct PhaseSpace {
    pairs: Vec<(Symbol, Symbol)>,
    parameters: Vec<Symbol>,
    gauge: Vec<(Symbol, RationalFunction)>,
    time: Symbol,
    delta: Symbol,
}

impl PhaseSpace {
    /// Builds a space; `time` is the slow time t and `delta` the deformation parameter.
    pub fn new(
        pairs: Vec<(Symbol, Symbol)>,
        parameters: Vec<Symbol>,
        gauge: Vec<(Symbol, RationalFunction)>,
        time: Symbol,
        delta: Symbol,
    ) -> Result<PhaseSpace, HamiltonianError> {
        let mut seen = HashSet::new();
        let all = pairs
            .iter()
            .flat_map(|(q, p)| [*q, *p])
            .chain(parameters.iter().copied())
            .chain(gauge.iter().map(|g| g.0))
            .chain([time, delta]);
        for s in all {
            if !seen.insert(s) {
                return Err(HamiltonianError::DuplicateSymbol(s.name().to_string()));
            }
        }
        Ok(PhaseSpace {
            pairs,
            parameters,
            gauge,
            time,
            delta,
        })
    }

    /// Space with pairs (q,p) for one degree of freedom or (q1,p1),(q2,p2) for two,
    /// time `t` and deformation `delta`.
    pub fn standard(degrees: usize, parameters: &[&str]) -> PhaseSpace {
        let pairs = if degrees == 1 {
            vec![(Symbol::new("q"), Symbol::new("p"))]
        } else {
            (1..=degrees)
                .map(|i| (Symbol::new(&format!("q{}", i)), Symbol::new(&format!("p{}", i))))
                .collect()
        };
        PhaseSpace::new(
            pairs,
            parameters.iter().map(|s| Symbol::new(s)).collect(),
            Vec::new(),
            Symbol::new("t"),
            Symbol::new("delta"),
        )
        .expect("standard symbols are distinct")
    }

    pub fn with_gauge(mut self, u: Symbol, rate: RationalFunction) -> PhaseSpace {
        self.gauge.push((u, rate));
        self
    }

    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.pairs
    }

    pub fn degrees(&self) -> usize {
        self.pairs.len()
    }

    pub fn parameters(&self) -> &[Symbol] {
        &self.parameters
    }

    pub fn gauge(&self) -> &[(Symbol, RationalFunction)] {
        &self.gauge
    }

    pub fn time(&self) -> Symbol {
        self.time
    }

    pub fn delta(&self) -> Symbol {
        self.delta
    }

    /// Phase coordinates in the order q1, p1, q2, p2, ...
    pub fn coordinates(&self) -> Vec<Symbol> {
        self.pairs.iter().flat_map(|(q, p)| [*q, *p]).collect()
    }
}
