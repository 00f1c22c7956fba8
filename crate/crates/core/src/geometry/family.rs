use std::fmt;
use std::str::FromStr;

use super::{q0, GeometryError, PolarSpace, Subspace};

/// The five families of candidate geometries in `W_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeometryFamily {
    /// All points and all lines.
    Lines,
    /// All points and all generators.
    Generators,
    /// Points and lines of one hyperbolic quadric.
    Hyperbolic,
    /// Points and lines of one elliptic quadric.
    Elliptic,
    /// Points and lines of one perpset.
    Perpset,
}

impl GeometryFamily {
    pub const ALL: [GeometryFamily; 5] = [
        GeometryFamily::Lines,
        GeometryFamily::Generators,
        GeometryFamily::Hyperbolic,
        GeometryFamily::Elliptic,
        GeometryFamily::Perpset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeometryFamily::Lines => "lines",
            GeometryFamily::Generators => "generators",
            GeometryFamily::Hyperbolic => "hyperbolic",
            GeometryFamily::Elliptic => "elliptic",
            GeometryFamily::Perpset => "perpset",
        }
    }

    /// Whether members are indexed by a base point.
    pub fn has_base_point(self) -> bool {
        matches!(
            self,
            GeometryFamily::Hyperbolic | GeometryFamily::Elliptic | GeometryFamily::Perpset
        )
    }
}

impl fmt::Display for GeometryFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeometryFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lines" | "line" => Ok(GeometryFamily::Lines),
            "generators" | "generator" => Ok(GeometryFamily::Generators),
            "hyperbolic" | "hyperbolics" => Ok(GeometryFamily::Hyperbolic),
            "elliptic" | "elliptics" => Ok(GeometryFamily::Elliptic),
            "perpset" | "perpsets" => Ok(GeometryFamily::Perpset),
            other => Err(format!("unknown geometry family {other:?}")),
        }
    }
}

/// Identifies one member of a family.
///
/// For quadrics the base point `p` selects the form `Q_p`; `None` stands for
/// `p = 0`, i.e. the hyperbolic form `Q₀` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeometryFamilyId {
    pub family: GeometryFamily,
    pub base_point: Option<usize>,
}

impl GeometryFamilyId {
    pub fn new(family: GeometryFamily, base_point: Option<usize>) -> Self {
        Self { family, base_point }
    }

    /// Checks the base-point constraints of the family against `space`.
    pub fn validate(&self, space: &PolarSpace) -> Result<(), GeometryError> {
        let invalid = |requirement| GeometryError::InvalidBasePoint {
            family: self.family,
            requirement,
        };
        if let Some(p) = self.base_point {
            space.check(p)?;
        }
        match (self.family, self.base_point) {
            (GeometryFamily::Lines | GeometryFamily::Generators, Some(_)) => Err(invalid("no base point")),
            (GeometryFamily::Generators, None) if space.n() < 2 => Err(invalid("rank at least 2")),
            (GeometryFamily::Hyperbolic, Some(p)) if q0(space.mask(p)) => Err(invalid("a base point with Q0(p) = 0")),
            (GeometryFamily::Elliptic, None) => Err(invalid("a base point")),
            (GeometryFamily::Elliptic, Some(p)) if !q0(space.mask(p)) => Err(invalid("a base point with Q0(p) = 1")),
            (GeometryFamily::Perpset, None) => Err(invalid("a center point")),
            _ => Ok(()),
        }
    }

    /// Short label: the family name, followed by the base observable if any.
    pub fn label(&self, space: &PolarSpace) -> String {
        match (self.family, self.base_point) {
            (GeometryFamily::Hyperbolic, None) => format!("{}-Q0", self.family),
            (_, None) => self.family.to_string(),
            (_, Some(p)) => format!("{}-{}", self.family, space.label(p)),
        }
    }
}

/// A point set together with its contexts, both as point indices of the
/// ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    pub id: GeometryFamilyId,
    pub points: Vec<usize>,
    pub contexts: Vec<Subspace>,
}

pub(super) fn members(space: &PolarSpace, family: GeometryFamily) -> Vec<GeometryFamilyId> {
    let all = 0..space.num_points();
    match family {
        GeometryFamily::Lines => vec![GeometryFamilyId::new(family, None)],
        GeometryFamily::Generators if space.n() < 2 => Vec::new(),
        GeometryFamily::Generators => vec![GeometryFamilyId::new(family, None)],
        GeometryFamily::Hyperbolic => std::iter::once(None)
            .chain(all.filter(|&p| !q0(space.mask(p))).map(Some))
            .map(|b| GeometryFamilyId::new(family, b))
            .collect(),
        GeometryFamily::Elliptic => all
            .filter(|&p| q0(space.mask(p)))
            .map(|p| GeometryFamilyId::new(family, Some(p)))
            .collect(),
        GeometryFamily::Perpset => all.map(|p| GeometryFamilyId::new(family, Some(p))).collect(),
    }
}

pub(super) fn generators_geometry(space: &PolarSpace, id: GeometryFamilyId, generators: Vec<Subspace>) -> Geometry {
    Geometry {
        id,
        points: (0..space.num_points()).collect(),
        contexts: generators,
    }
}

pub(super) fn geometry(space: &PolarSpace, id: &GeometryFamilyId) -> Result<Geometry, GeometryError> {
    id.validate(space)?;
    let all_points = || (0..space.num_points()).collect();
    Ok(match id.family {
        GeometryFamily::Lines => Geometry {
            id: *id,
            points: all_points(),
            contexts: space.lines().to_vec(),
        },
        GeometryFamily::Generators => generators_geometry(space, *id, space.generators()),
        GeometryFamily::Hyperbolic | GeometryFamily::Elliptic => {
            let q = space.quadric(id.base_point)?;
            Geometry {
                id: *id,
                points: q.points,
                contexts: q.lines,
            }
        }
        GeometryFamily::Perpset => {
            let p = space.perpset(id.base_point.expect("validated"))?;
            Geometry {
                id: *id,
                points: p.points,
                contexts: p.lines,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::polar_space;
    use super::*;

    #[test]
    fn member_counts() {
        let s2 = polar_space(2).unwrap();
        assert_eq!(s2.family_members(GeometryFamily::Hyperbolic).len(), 10);
        assert_eq!(s2.family_members(GeometryFamily::Elliptic).len(), 6);
        assert_eq!(s2.family_members(GeometryFamily::Perpset).len(), 15);
        let s3 = polar_space(3).unwrap();
        assert_eq!(s3.family_members(GeometryFamily::Elliptic).len(), 28);
        assert_eq!(s3.family_members(GeometryFamily::Hyperbolic).len(), 36);
    }

    #[test]
    fn invalid_ids_are_rejected() {
        let s = polar_space(2).unwrap();
        let iy = s.point_by_label("IY").unwrap();
        let yy = s.point_by_label("YY").unwrap();
        assert!(GeometryFamilyId::new(GeometryFamily::Hyperbolic, Some(iy))
            .validate(&s)
            .is_err());
        assert!(GeometryFamilyId::new(GeometryFamily::Elliptic, Some(yy))
            .validate(&s)
            .is_err());
        assert!(GeometryFamilyId::new(GeometryFamily::Elliptic, None)
            .validate(&s)
            .is_err());
        assert!(GeometryFamilyId::new(GeometryFamily::Lines, Some(yy))
            .validate(&s)
            .is_err());
        assert!(GeometryFamilyId::new(GeometryFamily::Perpset, None)
            .validate(&s)
            .is_err());
        assert!(GeometryFamilyId::new(GeometryFamily::Hyperbolic, None)
            .validate(&s)
            .is_ok());
        assert!(s
            .geometry(&GeometryFamilyId::new(GeometryFamily::Perpset, Some(40)))
            .is_err());
    }

    #[test]
    fn labels_and_parsing() {
        let s = polar_space(2).unwrap();
        let yy = s.point_by_label("YY").unwrap();
        assert_eq!(
            GeometryFamilyId::new(GeometryFamily::Hyperbolic, Some(yy)).label(&s),
            "hyperbolic-YY"
        );
        assert_eq!(
            GeometryFamilyId::new(GeometryFamily::Hyperbolic, None).label(&s),
            "hyperbolic-Q0"
        );
        assert_eq!("Perpsets".parse::<GeometryFamily>(), Ok(GeometryFamily::Perpset));
        assert!("planes".parse::<GeometryFamily>().is_err());
    }
}
