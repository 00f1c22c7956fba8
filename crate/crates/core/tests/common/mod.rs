//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_complex::Complex64;
use qcontext::gf2::{Gf2Matrix, Gf2Vector};
use qcontext::pauli::{Letter, PauliObservable};
use std::collections::HashSet;

// ---------------------------------------------------------------------------
// Dense complex matrices

#[derive(Clone, Debug, PartialEq)]
pub struct Dense {
    pub dim: usize,
    pub data: Vec<Complex64>,
}

impl Dense {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, data }
    }

    fn from_2x2(m: [[Complex64; 2]; 2]) -> Self {
        Self {
            dim: 2,
            data: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    pub fn mul(&self, rhs: &Dense) -> Dense {
        let d = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..d {
                    data[i * d + j] += a * rhs.data[k * d + j];
                }
            }
        }
        Dense { dim: d, data }
    }

    pub fn kron(&self, rhs: &Dense) -> Dense {
        let (a, b) = (self.dim, rhs.dim);
        let d = a * b;
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..a {
            for j in 0..a {
                let x = self.data[i * a + j];
                for k in 0..b {
                    for l in 0..b {
                        data[(i * b + k) * d + (j * b + l)] = x * rhs.data[k * b + l];
                    }
                }
            }
        }
        Dense { dim: d, data }
    }

    pub fn scale(&self, s: Complex64) -> Dense {
        Dense {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn approx_eq(&self, other: &Dense) -> bool {
        self.dim == other.dim && self.data.iter().zip(&other.data).all(|(a, b)| (a - b).norm() < 1e-9)
    }

    /// `c` with `self = c·Id`, if any.
    pub fn scalar(&self) -> Option<Complex64> {
        let c = self.data[0];
        self.approx_eq(&Dense::identity(self.dim).scale(c)).then_some(c)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn letter_matrix(l: Letter) -> Dense {
    let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
    match l {
        Letter::I => Dense::from_2x2([[o, z], [z, o]]),
        Letter::X => Dense::from_2x2([[z, o], [o, z]]),
        Letter::Y => Dense::from_2x2([[z, c(0.0, -1.0)], [c(0.0, 1.0), z]]),
        Letter::Z => Dense::from_2x2([[o, z], [z, c(-1.0, 0.0)]]),
    }
}

/// Full matrix of `i^phase · O₁ ⊗ … ⊗ Oₙ`, built from the textbook Pauli matrices.
pub fn observable_matrix(o: &PauliObservable) -> Dense {
    let mut m = Dense::identity(1);
    for l in o.letters() {
        m = m.kron(&letter_matrix(l));
    }
    let phase = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][o.phase_exp() as usize];
    m.scale(phase)
}

// ---------------------------------------------------------------------------
// GF(2) oracles

/// Rank as `log₂` of the number of distinct sums over all row subsets.
pub fn rank_by_row_subsets(m: &Gf2Matrix) -> usize {
    let rows = m.rows();
    assert!(rows <= 20);
    let mut sums = HashSet::new();
    for mask in 0u32..(1 << rows) {
        let mut s = Gf2Vector::zeros(m.cols());
        for i in 0..rows {
            if (mask >> i) & 1 == 1 {
                s.add_assign(m.row(i));
            }
        }
        sums.insert(s);
    }
    sums.len().trailing_zeros() as usize
}

/// `min_x d_H(A·x, e)` over every domain vector `x`.
pub fn brute_force_distance(a: &Gf2Matrix, e: &Gf2Vector) -> usize {
    let p = a.cols();
    assert!(p <= 20);
    (0u32..(1 << p))
        .map(|mask| {
            let x = Gf2Vector::from_ones(p, (0..p).filter(|j| (mask >> j) & 1 == 1));
            a.mul_vec(&x).unwrap().hamming_distance(e)
        })
        .min()
        .unwrap()
}

/// Some `x` with `A·x = e` found by trying all `2^p` assignments.
pub fn brute_force_solution(a: &Gf2Matrix, e: &Gf2Vector) -> Option<Gf2Vector> {
    let p = a.cols();
    (0u32..(1 << p))
        .map(|mask| Gf2Vector::from_ones(p, (0..p).filter(|j| (mask >> j) & 1 == 1)))
        .find(|x| &a.mul_vec(x).unwrap() == e)
}

// ---------------------------------------------------------------------------
// Closed-form cardinalities

pub struct Cardinalities {
    pub points: usize,
    pub lines: usize,
    pub generators: usize,
    pub hyperbolic_members: usize,
    pub hyperbolic_points: usize,
    pub hyperbolic_lines: usize,
    pub elliptic_members: usize,
    pub elliptic_points: usize,
    pub elliptic_lines: usize,
    pub perpset_members: usize,
    pub perpset_points: usize,
    pub perpset_lines: usize,
}

pub fn cardinalities(n: u32) -> Cardinalities {
    let four = |k: u32| 4usize.pow(k);
    let two = |k: u32| 2usize.pow(k);
    let hyp_pts = |k: u32| (four(k) + two(k)) / 2 - 1;
    let ell_pts = |k: u32| (four(k) - two(k)) / 2 - 1;
    Cardinalities {
        points: four(n) - 1,
        lines: (four(n) - 1) * (four(n - 1) - 1) / 3,
        generators: (1..=n).map(|i| two(i) + 1).product(),
        hyperbolic_members: (four(n) + two(n)) / 2,
        hyperbolic_points: hyp_pts(n),
        hyperbolic_lines: hyp_pts(n) * hyp_pts(n - 1) / 3,
        elliptic_members: (four(n) - two(n)) / 2,
        elliptic_points: ell_pts(n),
        elliptic_lines: ell_pts(n) * ell_pts(n - 1) / 3,
        perpset_members: four(n) - 1,
        perpset_points: four(n) / 2 - 1,
        perpset_lines: four(n - 1) - 1,
    }
}
