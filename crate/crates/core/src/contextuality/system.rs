use std::fmt;

use super::{ConfigError, QuantumConfiguration};
use crate::gf2::{self, Gf2Matrix, Gf2Vector, ImageBasis, SearchBudget};
use crate::pauli::Sign;

/// The linear system `A·x = E` of a configuration: one row per context, one
/// column per point; `E_i = 1` marks a negative context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSystem {
    pub a: Gf2Matrix,
    pub e: Gf2Vector,
    /// Column `j` corresponds to configuration point `point_order[j]`.
    pub point_order: Vec<usize>,
    /// Row `i` corresponds to configuration context `context_order[i]`.
    pub context_order: Vec<usize>,
}

impl IncidenceSystem {
    pub fn num_points(&self) -> usize {
        self.a.cols()
    }

    pub fn num_contexts(&self) -> usize {
        self.a.rows()
    }
}

pub fn build_system(config: &QuantumConfiguration) -> Result<IncidenceSystem, ConfigError> {
    let signs = config.context_signs()?;
    let a = Gf2Matrix::from_row_supports(config.num_points(), config.contexts().iter().map(|c| c.iter().copied()));
    let e = Gf2Vector::from_ones(
        signs.len(),
        signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Minus)
            .map(|(i, _)| i),
    );
    Ok(IncidenceSystem {
        a,
        e,
        point_order: (0..config.num_points()).collect(),
        context_order: (0..config.num_contexts()).collect(),
    })
}

/// Hamming weight of `E`.
pub fn negative_context_count(sys: &IncidenceSystem) -> usize {
    sys.e.weight()
}

/// A non-contextual assignment `f(M_j) = (−1)^{x_j}`.
#[derive(Clone, PartialEq, Eq)]
pub struct NchvAssignment {
    bits: Gf2Vector,
}

impl NchvAssignment {
    pub fn from_bits(bits: Gf2Vector) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &Gf2Vector {
        &self.bits
    }

    /// `f(M_j)` as ±1.
    pub fn value(&self, j: usize) -> i8 {
        if self.bits.get(j) {
            -1
        } else {
            1
        }
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.bits.len()).map(|j| self.value(j)).collect()
    }

    /// Rows `i` where `Π_{M∈cᵢ} f(M) ≠ e(cᵢ)`.
    pub fn violated_contexts(&self, sys: &IncidenceSystem) -> Vec<usize> {
        let ax = sys.a.mul_vec(&self.bits).expect("assignment length matches system");
        ax.sum(&sys.e).ones().collect()
    }

    pub fn satisfies_all(&self, sys: &IncidenceSystem) -> bool {
        self.violated_contexts(sys).is_empty()
    }
}

impl fmt::Debug for NchvAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NchvAssignment({})", self.bits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub contextual: bool,
    /// An assignment satisfying every context, when one exists.
    pub witness: Option<NchvAssignment>,
}

/// Contextual iff `A·x = E` has no solution.
pub fn check_contextual(sys: &IncidenceSystem) -> Verdict {
    let solution = gf2::solve(&sys.a, &sys.e).expect("system dimensions agree");
    Verdict {
        contextual: solution.is_none(),
        witness: solution.map(NchvAssignment::from_bits),
    }
}

/// An exact fraction, used for the tolerated error `ε = 2d / l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub numerator: usize,
    pub denominator: usize,
}

impl Ratio {
    pub fn value(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Best classical assignment found and the contexts it violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeWitness {
    pub assignment: NchvAssignment,
    pub violated: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub contextual: bool,
    /// `d_H(E, Im(A))`; an upper bound when `proven` is false.
    pub degree: usize,
    pub proven: bool,
    pub contexts: usize,
    pub negative_context_count: usize,
    pub rank: usize,
    /// Set for configurations without any context.
    pub no_contexts: bool,
    pub witness: DegreeWitness,
}

impl DegreeReport {
    /// Classical bound `b = l − 2d`.
    pub fn bound_b(&self) -> i64 {
        self.contexts as i64 - 2 * self.degree as i64
    }

    /// Tolerated error per context `ε = 2d / l`; undefined without contexts.
    pub fn epsilon(&self) -> Option<Ratio> {
        (self.contexts > 0).then_some(Ratio {
            numerator: 2 * self.degree,
            denominator: self.contexts,
        })
    }

    /// Ratio `b / l`.
    pub fn bound_ratio(&self) -> Option<f64> {
        (self.contexts > 0).then(|| self.bound_b() as f64 / self.contexts as f64)
    }

    /// `s = l − d`, the most contexts a classical assignment satisfies.
    pub fn max_satisfied(&self) -> usize {
        self.contexts - self.degree
    }
}

/// Contextuality degree `d = d_H(E, Im(A))`.
pub fn degree(sys: &IncidenceSystem, budget: &SearchBudget) -> DegreeReport {
    let l = sys.num_contexts();
    let negatives = negative_context_count(sys);
    let basis = ImageBasis::new(&sys.a);
    let search = gf2::search_with_basis(&basis, &sys.e, budget);
    let assignment = NchvAssignment::from_bits(search.preimage);
    let violated: Vec<usize> = search.nearest.sum(&sys.e).ones().collect();
    debug_assert_eq!(violated.len(), search.distance);
    DegreeReport {
        contextual: search.distance > 0,
        degree: search.distance,
        proven: search.proven,
        contexts: l,
        negative_context_count: negatives,
        rank: search.rank,
        no_contexts: l == 0,
        witness: DegreeWitness { assignment, violated },
    }
}
