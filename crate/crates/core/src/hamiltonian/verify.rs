use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{RationalFunction, Symbol, Witness, Q};

use super::flow::poisson_bracket;
use super::space::PhaseSpace;
use super::HamiltonianError;

pub const DEFAULT_WITNESS_POINTS: usize = 5;
const MAX_DRAWS_PER_POINT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub system: String,
    pub bracket_zero: bool,
    pub jacobian_rank: usize,
    pub residual_zero: Option<bool>,
    pub witness_seed: u64,
    pub witness_points: usize,
    pub pass: bool,
}

/// Checks pairwise Poisson commutation and generic functional independence of
/// the conserved quantities, all with delta = 0.
pub fn verify_integrable(
    name: &str,
    quantities: &[RationalFunction],
    space: &PhaseSpace,
    witness: &mut Witness,
    points: usize,
) -> Result<VerificationReport, HamiltonianError> {
    let delta = space.delta();
    let zero_delta: HashMap<Symbol, Q> = [(delta, Q::zero())].into_iter().collect();
    let fs: Vec<RationalFunction> = quantities
        .iter()
        .map(|f| if f.contains_var(delta) { f.eval(&zero_delta).expect("delta = 0 is regular") } else { f.clone() })
        .collect();
    let mut bracket_zero = true;
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if !poisson_bracket(&fs[i], &fs[j], space).is_zero() {
                bracket_zero = false;
            }
        }
    }
    let coords = space.coordinates();
    let jac: Vec<Vec<RationalFunction>> = fs.iter().map(|f| coords.iter().map(|c| f.derivative(*c)).collect()).collect();
    let mut symbols: Vec<Symbol> = fs.iter().flat_map(|f| f.variables()).collect();
    symbols.extend(coords.iter().copied());
    let mut min_rank = usize::MAX;
    for _ in 0..points.max(1) {
        let mut got = None;
        for _ in 0..MAX_DRAWS_PER_POINT {
            let pt = witness.point(symbols.iter().copied());
            let rows: Option<Vec<Vec<Q>>> = jac
                .iter()
                .map(|r| r.iter().map(|e| e.eval_q(&pt)).collect::<Option<Vec<Q>>>())
                .collect();
            if let Some(rows) = rows {
                got = Some(rank_q(rows));
                break;
            }
        }
        match got {
            Some(r) => min_rank = min_rank.min(r),
            None => return Err(HamiltonianError::WitnessDegeneracy),
        }
    }
    let n = space.degrees();
    Ok(VerificationReport {
        system: name.to_string(),
        bracket_zero,
        jacobian_rank: min_rank,
        residual_zero: None,
        witness_seed: witness.seed(),
        witness_points: points.max(1),
        pass: bracket_zero && min_rank == n && fs.len() == n,
    })
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank_q(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (e, v) in m[r].iter_mut().zip(&pivot).skip(c) {
                    *e -= v * &f;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
