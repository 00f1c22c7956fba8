use std::collections::HashSet;

use super::{form, PolarSpace};

/// A totally isotropic subspace, stored as its sorted point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    dim: usize,
    points: Vec<usize>,
}

impl Subspace {
    pub(crate) fn from_sorted(dim: usize, points: Vec<usize>) -> Self {
        debug_assert_eq!(points.len(), (1 << (dim + 1)) - 1);
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        Self { dim, points }
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.points.binary_search(&p).is_ok()
    }
}

/// Nonzero span of a set of masks, sorted.
fn span(generators: &[u32]) -> Vec<u32> {
    let mut span = vec![0u32];
    for &g in generators {
        if span.contains(&g) {
            continue;
        }
        let shifted: Vec<u32> = span.iter().map(|&s| s ^ g).collect();
        span.extend(shifted);
    }
    span.retain(|&m| m != 0);
    span.sort_unstable();
    span
}

fn to_subspace(space: &PolarSpace, masks: &[u32]) -> Subspace {
    let dim = (masks.len() + 1).trailing_zeros() as usize - 1;
    Subspace::from_sorted(dim, masks.iter().map(|&m| space.index(m)).collect())
}

pub(super) fn all_lines(space: &PolarSpace) -> Vec<Subspace> {
    let top = space.num_points() as u32;
    let mut lines = Vec::new();
    // Each line {p < q < r} is emitted once, from its two smallest points.
    for p in 1..=top {
        for q in (p + 1)..=top {
            let r = p ^ q;
            if r > q && !form(p, q) {
                lines.push(Subspace::from_sorted(
                    1,
                    vec![space.index(p), space.index(q), space.index(r)],
                ));
            }
        }
    }
    lines.sort_unstable();
    lines
}

/// Maximal totally isotropic subspaces, grown dimension by dimension: each
/// subspace `S` is extended by points of `S^⊥ \ S`, taking only the smallest
/// element of each coset `q + S`, and the spans are deduplicated.
pub(super) fn generators(space: &PolarSpace) -> Vec<Subspace> {
    let top = space.num_points() as u32;
    let mut level: Vec<Vec<u32>> = (1..=top).map(|m| vec![m]).collect();
    for _ in 1..space.n() {
        let mut next: HashSet<Vec<u32>> = HashSet::new();
        for s in &level {
            for q in 1..=top {
                if s.binary_search(&q).is_ok() || s.iter().any(|&x| form(x, q)) {
                    continue;
                }
                if s.iter().any(|&x| x ^ q < q) {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(q);
                next.insert(span(&gens));
            }
        }
        level = next.into_iter().collect();
    }
    let mut out: Vec<Subspace> = level.iter().map(|m| to_subspace(space, m)).collect();
    out.sort_unstable();
    out
}

/// Subspaces of dimension `k`: every independent `(k+1)`-subset of every
/// generator, closed under addition, deduplicated.
pub(super) fn subspaces(space: &PolarSpace, k: usize) -> Vec<Subspace> {
    if k == 0 {
        return (0..space.num_points())
            .map(|i| Subspace::from_sorted(0, vec![i]))
            .collect();
    }
    let blocks = generators(space);
    let mut found: HashSet<Vec<u32>> = HashSet::new();
    let mut chosen = Vec::with_capacity(k + 1);
    for block in &blocks {
        let masks: Vec<u32> = block.points().iter().map(|&i| space.mask(i)).collect();
        for_each_combination(masks.len(), k + 1, |idx| {
            chosen.clear();
            chosen.extend(idx.iter().map(|&i| masks[i]));
            let closure = span(&chosen);
            if closure.len() == (1 << (k + 1)) - 1 {
                found.insert(closure);
            }
        });
    }
    let mut out: Vec<Subspace> = found.iter().map(|m| to_subspace(space, m)).collect();
    out.sort_unstable();
    out
}

/// Calls `f` with every sorted `size`-subset of `0..n`.
fn for_each_combination(n: usize, size: usize, mut f: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(&idx);
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return;
        };
        idx[i] += 1;
        for j in (i + 1)..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
