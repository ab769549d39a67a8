//! Brute-force certifiers. Nothing here calls into the constructive
//! modules; only their data types are shared, so an oracle verdict is an
//! independent check of the builders.

mod active;
mod arith;
mod cycles;
mod minor;

pub use active::{full_active_enumeration, ActiveEnumeration};
pub use arith::{
    brute_force_degeneracy, corollary_check, corollary_sweep, degeneracy_ceiling, interval_of, pell_candidates,
    tightness_interval, CorollaryCheck,
};
pub use cycles::{enumerate_hamiltonian_cycles, hamiltonian_paths_from, max_chords_over_cycles};
pub use minor::{brute_force_grid_partition, cyclic_minor_exists, cyclic_minor_on_cycle};

use crate::error::OracleError;

/// Size guards. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Vertex bound for cycle and minor enumeration.
    pub max_vertices: usize,
    /// Vertex bound for the subset dynamic programs.
    pub max_subset_vertices: usize,
    /// Cycle-length bound for the unpruned rotation closure.
    pub max_cycle_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 14,
            max_subset_vertices: 12,
            max_cycle_len: 10,
        }
    }
}

impl Limits {
    /// Every vertex bound replaced by `n`.
    pub fn with_vertex_bound(n: usize) -> Self {
        Limits {
            max_vertices: n,
            max_subset_vertices: n,
            max_cycle_len: n,
        }
    }
}

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<(), OracleError> {
    if actual > limit {
        return Err(OracleError::GuardExceeded { what, actual, limit });
    }
    Ok(())
}
