//! Liouville integrability checks and singular-fiber classification for
//! autonomous Painleve-type Hamiltonian systems.

pub mod algebra;
pub mod hamiltonian;
pub mod curves;
pub mod kodaira;
pub mod liu;
pub mod catalog;
