//! Contextuality of quantum configurations.
//!
//! A configuration yields the system `A·x = E` over GF(2); it is contextual
//! iff the system has no solution, and its degree is the Hamming distance
//! from `E` to `Im(A)`, i.e. the number of contexts no classical assignment
//! can satisfy.

mod config;
mod maxsat;
mod system;

pub use config::{ConfigError, QuantumConfiguration};
pub use maxsat::{nchv_max_sat, nchv_max_sat_capped, MaxSat, MaxSatError, DEFAULT_MAX_SAT_POINTS};
pub use system::{
    build_system, check_contextual, degree, negative_context_count, DegreeReport, DegreeWitness, IncidenceSystem,
    NchvAssignment, Ratio, Verdict,
};
