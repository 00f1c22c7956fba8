//! Observable-based contextuality proofs from the binary symplectic polar
//! spaces `W_n`.
//!
//! * [`gf2`]: bit-packed linear algebra over GF(2) and the exhaustive
//!   coset search behind the contextuality degree.
//! * [`pauli`]: n-qubit Pauli observables, the symplectic encoding and exact
//!   phase tracking.
//! * [`geometry`]: points, lines, generators, quadrics and perpsets of `W_n`.
//! * [`contextuality`]: the `A·x = E` system of a configuration, verdicts,
//!   degrees and the classical bound.

pub mod contextuality;
pub mod fixtures;
pub mod geometry;
pub mod gf2;
pub mod pauli;

pub use contextuality::{
    build_system, check_contextual, degree, nchv_max_sat, negative_context_count, ConfigError, DegreeReport,
    IncidenceSystem, NchvAssignment, QuantumConfiguration, Verdict,
};
pub use geometry::{polar_space, Geometry, GeometryFamily, GeometryFamilyId, PolarSpace, Subspace};
pub use gf2::{Gf2Matrix, Gf2Vector, SearchBudget};
pub use pauli::{PauliObservable, Sign};
