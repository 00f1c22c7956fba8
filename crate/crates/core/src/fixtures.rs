//! Small reference configurations.

use crate::contextuality::QuantumConfiguration;
use crate::geometry::{polar_space, GeometryFamily, GeometryFamilyId};
use crate::pauli::PauliObservable;

/// Observables of the Mermin–Peres square, row by row.
pub const MERMIN_SQUARE_POINTS: [&str; 9] = ["XI", "IX", "XX", "IY", "YI", "YY", "XY", "YX", "ZZ"];

/// The six contexts: three rows, then three columns; the last is negative.
pub const MERMIN_SQUARE_CONTEXTS: [[usize; 3]; 6] = [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7], [2, 5, 8]];

pub fn mermin_square() -> QuantumConfiguration {
    let points = MERMIN_SQUARE_POINTS
        .iter()
        .map(|s| s.parse::<PauliObservable>().expect("valid label").coords().clone())
        .collect();
    let contexts = MERMIN_SQUARE_CONTEXTS.iter().map(|c| c.to_vec()).collect();
    QuantumConfiguration::new(2, points, contexts, "mermin-square").expect("the square is a valid configuration")
}

/// `W₂` with all 15 points and 15 lines.
pub fn doily() -> QuantumConfiguration {
    let space = polar_space(2).expect("rank 2 is supported");
    let geometry = space
        .geometry(&GeometryFamilyId::new(GeometryFamily::Lines, None))
        .expect("lines family is valid");
    QuantumConfiguration::from_geometry(&space, &geometry)
}
