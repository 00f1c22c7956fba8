//! The symplectic polar space `W_n = W(2n−1, 2)` and its distinguished
//! subgeometries: lines, generators, quadrics and perpsets.
//!
//! Points are the `4ⁿ − 1` nonzero vectors of `F₂^{2n}`. Internally a point
//! is a `u32` mask whose most significant used bit is `a₁`, so numeric order
//! of masks equals lexicographic order of the bit strings `(a₁,b₁,…,aₙ,bₙ)`.
//! Point index `i` is mask `i + 1`.

mod family;
mod hyperplane;
mod subspace;

use std::sync::OnceLock;

use crate::gf2::Gf2Vector;
use crate::pauli::PauliObservable;

pub use family::{Geometry, GeometryFamily, GeometryFamilyId};
pub use hyperplane::{Perpset, Quadric, QuadricKind};
pub use subspace::Subspace;

/// Largest supported rank.
pub const MAX_RANK: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("rank {0} is outside the supported range 1..={MAX_RANK}")]
    UnsupportedRank(usize),
    #[error("subspace dimension {k} must be below the rank {n}")]
    DimensionTooLarge { k: usize, n: usize },
    #[error("point index {0} is out of range")]
    PointOutOfRange(usize),
    #[error("{family} requires {requirement}")]
    InvalidBasePoint {
        family: GeometryFamily,
        requirement: &'static str,
    },
}

/// `⟨x, y⟩` on masks: pairs `(aᵢ, bᵢ)` occupy adjacent bits.
#[inline]
pub(crate) fn form(x: u32, y: u32) -> bool {
    const EVEN: u32 = 0x5555_5555;
    let swapped = ((y & EVEN) << 1) | ((y >> 1) & EVEN);
    (x & swapped).count_ones() & 1 == 1
}

/// `Q₀(x) = Σ aᵢbᵢ` on masks.
#[inline]
pub(crate) fn q0(x: u32) -> bool {
    const EVEN: u32 = 0x5555_5555;
    (x & (x >> 1) & EVEN).count_ones() & 1 == 1
}

/// `W_n` for a fixed rank, with its lines computed on first use.
#[derive(Debug)]
pub struct PolarSpace {
    n: usize,
    lines: OnceLock<Vec<Subspace>>,
}

impl Clone for PolarSpace {
    fn clone(&self) -> Self {
        let lines = OnceLock::new();
        if let Some(l) = self.lines.get() {
            let _ = lines.set(l.clone());
        }
        Self { n: self.n, lines }
    }
}

/// Builds `W_n`.
pub fn polar_space(n: usize) -> Result<PolarSpace, GeometryError> {
    PolarSpace::new(n)
}

impl PolarSpace {
    pub fn new(n: usize) -> Result<Self, GeometryError> {
        if n == 0 || n > MAX_RANK {
            return Err(GeometryError::UnsupportedRank(n));
        }
        Ok(Self {
            n,
            lines: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_points(&self) -> usize {
        (1usize << (2 * self.n)) - 1
    }

    #[inline]
    pub(crate) fn mask(&self, index: usize) -> u32 {
        debug_assert!(index < self.num_points());
        (index + 1) as u32
    }

    #[inline]
    pub(crate) fn index(&self, mask: u32) -> usize {
        debug_assert!(mask != 0);
        mask as usize - 1
    }

    fn check(&self, index: usize) -> Result<(), GeometryError> {
        if index < self.num_points() {
            Ok(())
        } else {
            Err(GeometryError::PointOutOfRange(index))
        }
    }

    /// Coordinates `(a₁, b₁, …, aₙ, bₙ)` of point `index`.
    pub fn point(&self, index: usize) -> Gf2Vector {
        let len = 2 * self.n;
        let mask = self.mask(index);
        Gf2Vector::from_ones(len, (0..len).filter(|k| (mask >> (len - 1 - k)) & 1 == 1))
    }

    /// All points in canonical order.
    pub fn points(&self) -> Vec<Gf2Vector> {
        (0..self.num_points()).map(|i| self.point(i)).collect()
    }

    /// Index of a coordinate vector, if it is a point of this space.
    pub fn point_index(&self, v: &Gf2Vector) -> Option<usize> {
        let len = 2 * self.n;
        if v.len() != len || v.is_zero() {
            return None;
        }
        let mask = v.ones().fold(0u32, |m, k| m | (1 << (len - 1 - k)));
        Some(self.index(mask))
    }

    /// The canonical observable `ρ(point)`.
    pub fn observable(&self, index: usize) -> PauliObservable {
        PauliObservable::new(0, self.point(index)).expect("even-length coordinates")
    }

    /// Index of the point labelled by a Pauli string such as `"XYZ"`.
    pub fn point_by_label(&self, label: &str) -> Option<usize> {
        let o: PauliObservable = label.parse().ok()?;
        if o.phase_exp() != 0 {
            return None;
        }
        self.point_index(o.coords())
    }

    pub fn label(&self, index: usize) -> String {
        self.observable(index).to_string()
    }

    /// `⟨p, q⟩` for two point indices.
    pub fn symplectic(&self, p: usize, q: usize) -> bool {
        form(self.mask(p), self.mask(q))
    }

    /// Index of `p + q`, or `None` when `p = q`.
    pub fn sum(&self, p: usize, q: usize) -> Option<usize> {
        let m = self.mask(p) ^ self.mask(q);
        (m != 0).then(|| self.index(m))
    }

    /// `Q_p(x) = Q₀(x) + ⟨x, p⟩`, with `base = None` meaning `Q₀`.
    pub fn quadratic_form_value(&self, base: Option<usize>, x: usize) -> Result<bool, GeometryError> {
        self.check(x)?;
        if let Some(p) = base {
            self.check(p)?;
        }
        let pm = base.map_or(0, |p| self.mask(p));
        let xm = self.mask(x);
        Ok(q0(xm) ^ form(xm, pm))
    }

    /// All lines of the space, sorted, each a sorted triple `{p, q, p+q}`.
    pub fn lines(&self) -> &[Subspace] {
        self.lines.get_or_init(|| subspace::all_lines(self))
    }

    /// Totally isotropic subspaces of projective dimension `n − 1`.
    pub fn generators(&self) -> Vec<Subspace> {
        subspace::generators(self)
    }

    /// Totally isotropic subspaces of projective dimension `k`.
    pub fn subspaces(&self, k: usize) -> Result<Vec<Subspace>, GeometryError> {
        if k >= self.n {
            return Err(GeometryError::DimensionTooLarge { k, n: self.n });
        }
        Ok(subspace::subspaces(self, k))
    }

    pub fn quadric(&self, base: Option<usize>) -> Result<Quadric, GeometryError> {
        hyperplane::quadric(self, base)
    }

    pub fn perpset(&self, center: usize) -> Result<Perpset, GeometryError> {
        hyperplane::perpset(self, center)
    }

    /// True iff every line of the space meets `points` in one or three points.
    pub fn is_hyperplane(&self, points: &[usize]) -> bool {
        hyperplane::is_hyperplane(self, points)
    }

    /// Members of a family, in canonical order.
    pub fn family_members(&self, family: GeometryFamily) -> Vec<GeometryFamilyId> {
        family::members(self, family)
    }

    /// One geometry (points and contexts) of a family.
    pub fn geometry(&self, id: &GeometryFamilyId) -> Result<Geometry, GeometryError> {
        family::geometry(self, id)
    }

    /// Every member geometry of a family.
    pub fn enumerate_family(&self, family: GeometryFamily) -> Vec<Geometry> {
        let generators = (family == GeometryFamily::Generators).then(|| self.generators());
        self.family_members(family)
            .into_iter()
            .map(|id| match &generators {
                Some(g) => family::generators_geometry(self, id, g.clone()),
                None => self.geometry(&id).expect("family members are valid"),
            })
            .collect()
    }
}
