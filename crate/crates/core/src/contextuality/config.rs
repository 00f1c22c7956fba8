use std::collections::HashSet;

use crate::geometry::{Geometry, PolarSpace};
use crate::gf2::Gf2Vector;
use crate::pauli::{self, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("qubit count must be positive")]
    NoQubits,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    PointLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("point {0} is the zero vector (identity operator)")]
    ZeroPoint(usize),
    #[error("points {0} and {1} have the same coordinates")]
    DuplicatePoint(usize, usize),
    #[error("context {context} refers to missing point {point}")]
    PointOutOfRange { context: usize, point: usize },
    #[error("context {0} repeats a point")]
    RepeatedPoint(usize),
    #[error("context {0} has fewer than two points")]
    DegenerateContext(usize),
    #[error("context {context}: points {a} and {b} do not commute")]
    NonCommuting { context: usize, a: usize, b: usize },
    #[error("context {0}: coordinates do not sum to zero")]
    NonZeroSum(usize),
    #[error("context {0}: product of observables is not ±Id")]
    NotScalar(usize),
    #[error("{found} signs given for {expected} contexts")]
    SignCount { expected: usize, found: usize },
    #[error("context {context}: declared sign {declared} differs from computed sign {computed}")]
    SignMismatch {
        context: usize,
        declared: Sign,
        computed: Sign,
    },
}

/// Points, contexts and provenance of a candidate contextuality proof.
///
/// Points are symplectic coordinate vectors; their observables are the
/// canonical `ρ(point)`. Contexts list point indices. Unless signs were
/// supplied through [`QuantumConfiguration::with_trusted_signs`], every
/// context is pairwise commuting and sums to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumConfiguration {
    n: usize,
    points: Vec<Gf2Vector>,
    contexts: Vec<Vec<usize>>,
    trusted_signs: Option<Vec<Sign>>,
    source: String,
}

impl QuantumConfiguration {
    pub fn new(
        n: usize,
        points: Vec<Gf2Vector>,
        contexts: Vec<Vec<usize>>,
        source: impl Into<String>,
    ) -> Result<Self, ConfigError> {
        let config = Self {
            n,
            points,
            contexts,
            trusted_signs: None,
            source: source.into(),
        };
        config.check_structure()?;
        config.check_contexts()?;
        Ok(config)
    }

    /// A configuration whose context signs are taken as given. Commutation and
    /// zero-sum checks are skipped; structural checks still apply.
    pub fn with_trusted_signs(
        n: usize,
        points: Vec<Gf2Vector>,
        contexts: Vec<Vec<usize>>,
        signs: Vec<Sign>,
        source: impl Into<String>,
    ) -> Result<Self, ConfigError> {
        if signs.len() != contexts.len() {
            return Err(ConfigError::SignCount {
                expected: contexts.len(),
                found: signs.len(),
            });
        }
        if let Some(i) = signs.iter().position(|&s| s == Sign::NonReal) {
            return Err(ConfigError::NotScalar(i));
        }
        let config = Self {
            n,
            points,
            contexts,
            trusted_signs: Some(signs),
            source: source.into(),
        };
        config.check_structure()?;
        Ok(config)
    }

    /// The configuration of one generated geometry, with points renumbered
    /// `0..points.len()` in ascending ambient order.
    pub fn from_geometry(space: &PolarSpace, geometry: &Geometry) -> Self {
        let mut local = vec![usize::MAX; space.num_points()];
        for (i, &p) in geometry.points.iter().enumerate() {
            local[p] = i;
        }
        let points = geometry.points.iter().map(|&p| space.point(p)).collect();
        let contexts = geometry
            .contexts
            .iter()
            .map(|c| c.points().iter().map(|&p| local[p]).collect())
            .collect();
        Self {
            n: space.n(),
            points,
            contexts,
            trusted_signs: None,
            source: geometry.id.label(space),
        }
    }

    fn check_structure(&self) -> Result<(), ConfigError> {
        if self.n == 0 {
            return Err(ConfigError::NoQubits);
        }
        let mut seen = std::collections::HashMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != 2 * self.n {
                return Err(ConfigError::PointLength {
                    index: i,
                    expected: 2 * self.n,
                    found: p.len(),
                });
            }
            if p.is_zero() {
                return Err(ConfigError::ZeroPoint(i));
            }
            if let Some(j) = seen.insert(p.clone(), i) {
                return Err(ConfigError::DuplicatePoint(j, i));
            }
        }
        for (ci, ctx) in self.contexts.iter().enumerate() {
            if ctx.len() < 2 {
                return Err(ConfigError::DegenerateContext(ci));
            }
            let mut members = HashSet::with_capacity(ctx.len());
            for &p in ctx {
                if p >= self.points.len() {
                    return Err(ConfigError::PointOutOfRange { context: ci, point: p });
                }
                if !members.insert(p) {
                    return Err(ConfigError::RepeatedPoint(ci));
                }
            }
        }
        Ok(())
    }

    fn check_contexts(&self) -> Result<(), ConfigError> {
        for (ci, ctx) in self.contexts.iter().enumerate() {
            let mut sum = Gf2Vector::zeros(2 * self.n);
            for (k, &a) in ctx.iter().enumerate() {
                sum.add_assign(&self.points[a]);
                for &b in &ctx[k + 1..] {
                    if pauli::symplectic_form(&self.points[a], &self.points[b]).expect("equal lengths") {
                        return Err(ConfigError::NonCommuting { context: ci, a, b });
                    }
                }
            }
            if !sum.is_zero() {
                return Err(ConfigError::NonZeroSum(ci));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Gf2Vector] {
        &self.points
    }

    pub fn contexts(&self) -> &[Vec<usize>] {
        &self.contexts
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn trusted_signs(&self) -> Option<&[Sign]> {
        self.trusted_signs.as_deref()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_contexts(&self) -> usize {
        self.contexts.len()
    }

    /// Label of point `i` as its canonical Pauli string.
    pub fn label(&self, i: usize) -> String {
        pauli::rho(&self.points[i]).expect("points are nonzero").to_string()
    }

    /// The sign of every context: the trusted signs if present, otherwise the
    /// sign of the product of the canonical observables.
    pub fn context_signs(&self) -> Result<Vec<Sign>, ConfigError> {
        if let Some(signs) = &self.trusted_signs {
            return Ok(signs.clone());
        }
        self.contexts
            .iter()
            .enumerate()
            .map(|(ci, ctx)| {
                let factors: Vec<_> = ctx
                    .iter()
                    .map(|&p| pauli::rho(&self.points[p]).expect("points are nonzero"))
                    .collect();
                let product = pauli::product_sign(&factors).expect("contexts are non-empty and uniform");
                if product.is_scalar_identity() {
                    Ok(product.sign)
                } else {
                    Err(ConfigError::NotScalar(ci))
                }
            })
            .collect()
    }

    /// Checks declared signs against the computed ones.
    pub fn verify_signs(&self, declared: &[Sign]) -> Result<(), ConfigError> {
        let computed = self.context_signs()?;
        if computed.len() != declared.len() {
            return Err(ConfigError::SignCount {
                expected: computed.len(),
                found: declared.len(),
            });
        }
        for (ci, (&d, &c)) in declared.iter().zip(&computed).enumerate() {
            if d != c {
                return Err(ConfigError::SignMismatch {
                    context: ci,
                    declared: d,
                    computed: c,
                });
            }
        }
        Ok(())
    }

    /// The same configuration with points and contexts renumbered: point `i`
    /// moves to `point_perm[i]`, context `j` to `context_perm[j]`.
    pub fn relabeled(&self, point_perm: &[usize], context_perm: &[usize]) -> Self {
        let mut points = vec![Gf2Vector::zeros(0); self.points.len()];
        for (i, p) in self.points.iter().enumerate() {
            points[point_perm[i]] = p.clone();
        }
        let mut contexts = vec![Vec::new(); self.contexts.len()];
        let mut signs = self.trusted_signs.clone();
        for (j, ctx) in self.contexts.iter().enumerate() {
            contexts[context_perm[j]] = ctx.iter().map(|&p| point_perm[p]).collect();
            if let (Some(out), Some(orig)) = (signs.as_mut(), self.trusted_signs.as_ref()) {
                out[context_perm[j]] = orig[j];
            }
        }
        Self {
            n: self.n,
            points,
            contexts,
            trusted_signs: signs,
            source: self.source.clone(),
        }
    }
}
