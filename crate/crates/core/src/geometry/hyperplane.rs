use std::fmt;

use super::{form, q0, GeometryError, PolarSpace, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricKind {
    Hyperbolic,
    Elliptic,
}

impl fmt::Display for QuadricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricKind::Hyperbolic => "hyperbolic",
            QuadricKind::Elliptic => "elliptic",
        })
    }
}

/// Zero locus of `Q_p` and the lines of the space it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadric {
    /// `None` is the form `Q₀` itself (`p = 0`).
    pub base: Option<usize>,
    pub kind: QuadricKind,
    pub points: Vec<usize>,
    pub lines: Vec<Subspace>,
}

/// Points orthogonal to a center, with the lines through the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perpset {
    pub center: usize,
    pub points: Vec<usize>,
    pub lines: Vec<Subspace>,
}

fn lines_within(space: &PolarSpace, member: &[bool]) -> Vec<Subspace> {
    space
        .lines()
        .iter()
        .filter(|l| l.points().iter().all(|&p| member[p]))
        .cloned()
        .collect()
}

pub(super) fn quadric(space: &PolarSpace, base: Option<usize>) -> Result<Quadric, GeometryError> {
    let pm = match base {
        Some(p) => {
            space.check(p)?;
            space.mask(p)
        }
        None => 0,
    };
    let kind = if q0(pm) {
        QuadricKind::Elliptic
    } else {
        QuadricKind::Hyperbolic
    };
    let member: Vec<bool> = (0..space.num_points())
        .map(|i| {
            let x = space.mask(i);
            !(q0(x) ^ form(x, pm))
        })
        .collect();
    let points = (0..space.num_points()).filter(|&i| member[i]).collect();
    Ok(Quadric {
        base,
        kind,
        points,
        lines: lines_within(space, &member),
    })
}

pub(super) fn perpset(space: &PolarSpace, center: usize) -> Result<Perpset, GeometryError> {
    space.check(center)?;
    let cm = space.mask(center);
    let points = (0..space.num_points()).filter(|&i| !form(space.mask(i), cm)).collect();
    let lines = space.lines().iter().filter(|l| l.contains(center)).cloned().collect();
    Ok(Perpset { center, points, lines })
}

pub(super) fn is_hyperplane(space: &PolarSpace, points: &[usize]) -> bool {
    let mut member = vec![false; space.num_points()];
    for &p in points {
        if p >= member.len() {
            return false;
        }
        member[p] = true;
    }
    space.lines().iter().all(|l| {
        let hits = l.points().iter().filter(|&&p| member[p]).count();
        hits == 1 || hits == 3
    })
}
