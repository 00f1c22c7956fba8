//! Exhaustive maximum satisfiability over all classical assignments.
//!
//! Walks the `2^p` assignments `f : points → {±1}` in Gray-code order over the
//! domain, maintaining the vector of violated contexts `A·x + E` by XORing in
//! one incidence column per step. This enumerates the domain, not the image,
//! so it checks the coset search by an independent route.

use super::{build_system, ConfigError, NchvAssignment, QuantumConfiguration};
use crate::gf2::Gf2Vector;

/// Default point cap for the exhaustive sweep.
pub const DEFAULT_MAX_SAT_POINTS: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaxSatError {
    #[error("{points} points exceed the exhaustive-search cap of {cap}")]
    TooManyPoints { points: usize, cap: usize },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxSat {
    /// Largest number of contexts satisfied simultaneously.
    pub satisfied: usize,
    pub contexts: usize,
    pub assignment: NchvAssignment,
}

pub fn nchv_max_sat(config: &QuantumConfiguration) -> Result<MaxSat, MaxSatError> {
    nchv_max_sat_capped(config, DEFAULT_MAX_SAT_POINTS)
}

pub fn nchv_max_sat_capped(config: &QuantumConfiguration, cap: usize) -> Result<MaxSat, MaxSatError> {
    let p = config.num_points();
    if p > cap || p >= 64 {
        return Err(MaxSatError::TooManyPoints { points: p, cap });
    }
    let sys = build_system(config)?;
    let l = sys.num_contexts();
    let columns: Vec<Gf2Vector> = (0..p).map(|j| sys.a.column(j)).collect();

    let (violated, best_step) = if l <= 64 {
        let cols: Vec<u64> = columns
            .iter()
            .map(|c| c.words().first().copied().unwrap_or(0))
            .collect();
        sweep_single_word(&cols, sys.e.words().first().copied().unwrap_or(0), p)
    } else {
        sweep_wide(&columns, &sys.e, p)
    };
    let gray = best_step ^ (best_step >> 1);
    let bits = Gf2Vector::from_ones(p, (0..p).filter(|&j| (gray >> j) & 1 == 1));
    Ok(MaxSat {
        satisfied: l - violated,
        contexts: l,
        assignment: NchvAssignment::from_bits(bits),
    })
}

fn sweep_single_word(columns: &[u64], target: u64, p: usize) -> (usize, u64) {
    let mut cur = target;
    let mut best = cur.count_ones() as usize;
    let mut best_step = 0u64;
    for k in 1..(1u64 << p) {
        cur ^= columns[k.trailing_zeros() as usize];
        let w = cur.count_ones() as usize;
        if w < best {
            best = w;
            best_step = k;
        }
    }
    (best, best_step)
}

fn sweep_wide(columns: &[Gf2Vector], target: &Gf2Vector, p: usize) -> (usize, u64) {
    let mut cur = target.clone();
    let mut best = cur.weight();
    let mut best_step = 0u64;
    for k in 1..(1u64 << p) {
        cur.add_assign(&columns[k.trailing_zeros() as usize]);
        let w = cur.weight();
        if w < best {
            best = w;
            best_step = k;
        }
    }
    (best, best_step)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_is_enforced() {
        let space = crate::geometry::polar_space(3).unwrap();
        let geom = space
            .geometry(&crate::geometry::GeometryFamilyId::new(
                crate::geometry::GeometryFamily::Hyperbolic,
                None,
            ))
            .unwrap();
        let cfg = QuantumConfiguration::from_geometry(&space, &geom);
        assert_eq!(
            nchv_max_sat(&cfg).unwrap_err(),
            MaxSatError::TooManyPoints { points: 35, cap: 28 }
        );
    }
}
