//! Minimum Hamming distance from a vector to the column space of a matrix.
//!
//! The column space is spanned by a fully reduced basis and walked in
//! reflected Gray-code order, so consecutive image vectors differ by exactly
//! one basis vector: each step costs one XOR per word plus a popcount. The
//! sweep is exhaustive, `2^rank` steps, and may be split across threads by
//! fixing the top basis coefficients of each chunk.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::{Gf2Error, Gf2Matrix, Gf2Vector};

/// Steps between two deadline checks in the inner loop.
const CHECK_INTERVAL_MASK: u64 = (1 << 16) - 1;

/// The longest Gray-code sweep a single chunk can run.
const MAX_SWEEP_BITS: usize = 63;

/// Wall-clock and parallelism limits for [`coset_min_weight`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_duration: Option<Duration>,
    pub threads: usize,
}

impl SearchBudget {
    /// No time limit, one worker per available core.
    pub fn unlimited() -> Self {
        Self {
            max_duration: None,
            threads: default_threads(),
        }
    }

    pub fn with_max_duration(mut self, limit: Duration) -> Self {
        self.max_duration = Some(limit);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::unlimited()
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Outcome of a coset search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSearch {
    /// Smallest `d_H(e, c)` found over image vectors `c`. Exact when `proven`,
    /// otherwise an upper bound.
    pub distance: usize,
    /// An image vector achieving `distance`.
    pub nearest: Gf2Vector,
    /// A domain vector `x` with `A·x = nearest`.
    pub preimage: Gf2Vector,
    pub proven: bool,
    pub rank: usize,
    /// Number of image vectors examined.
    pub visited: u64,
}

/// A fully reduced basis of `Im(A)` together with preimages of each basis vector.
#[derive(Debug, Clone)]
pub struct ImageBasis {
    vectors: Vec<Gf2Vector>,
    preimages: Vec<Gf2Vector>,
    pivots: Vec<usize>,
    image_len: usize,
    domain_len: usize,
}

impl ImageBasis {
    pub fn new(a: &Gf2Matrix) -> Self {
        let image_len = a.rows();
        let mut vectors: Vec<Gf2Vector> = Vec::new();
        let mut preimages: Vec<Gf2Vector> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let columns = a.transpose();
        for (j, col) in columns.row_vectors().iter().enumerate() {
            let mut v = col.clone();
            let mut pre = Gf2Vector::unit(a.cols(), j);
            for (k, &p) in pivots.iter().enumerate() {
                if v.get(p) {
                    v.add_assign(&vectors[k]);
                    pre.add_assign(&preimages[k]);
                }
            }
            let Some(p) = v.first_one() else { continue };
            // Keep the basis fully reduced: clear the new pivot elsewhere.
            for k in 0..vectors.len() {
                if vectors[k].get(p) {
                    vectors[k].add_assign(&v);
                    preimages[k].add_assign(&pre);
                }
            }
            vectors.push(v);
            preimages.push(pre);
            pivots.push(p);
        }
        Self {
            vectors,
            preimages,
            pivots,
            image_len,
            domain_len: a.cols(),
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Gf2Vector] {
        &self.vectors
    }

    pub fn preimages(&self) -> &[Gf2Vector] {
        &self.preimages
    }

    /// Reduces `e` against the basis; the result is zero iff `e ∈ Im(A)`.
    pub fn reduce(&self, e: &Gf2Vector) -> (Gf2Vector, Vec<usize>) {
        let mut r = e.clone();
        let mut used = Vec::new();
        for (k, &p) in self.pivots.iter().enumerate() {
            if r.get(p) {
                r.add_assign(&self.vectors[k]);
                used.push(k);
            }
        }
        (r, used)
    }

    /// Linear combination of basis vectors (and their preimages) selected by
    /// the set bits of `coefficients`.
    pub fn combine(&self, coefficients: impl IntoIterator<Item = usize>) -> (Gf2Vector, Gf2Vector) {
        let mut image = Gf2Vector::zeros(self.image_len);
        let mut pre = Gf2Vector::zeros(self.domain_len);
        for k in coefficients {
            image.add_assign(&self.vectors[k]);
            pre.add_assign(&self.preimages[k]);
        }
        (image, pre)
    }

    /// Every image vector, in the Gray-code order the search uses. Only
    /// meaningful for small ranks.
    pub fn gray_images(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        assert!(self.rank() <= MAX_SWEEP_BITS, "rank too large to enumerate");
        let total = 1u64 << self.rank();
        let mut cur = Gf2Vector::zeros(self.image_len);
        (0..total).map(move |k| {
            if k > 0 {
                cur.add_assign(&self.vectors[k.trailing_zeros() as usize]);
            }
            cur.clone()
        })
    }
}

/// Computes `d_H(e, Im(A))` by exhaustive Gray-code enumeration of the image.
///
/// When `budget.max_duration` expires the best value so far is returned with
/// `proven = false`. With one thread the reported `nearest` is the first
/// minimiser in enumeration order.
pub fn coset_min_weight(a: &Gf2Matrix, e: &Gf2Vector, budget: &SearchBudget) -> Result<CosetSearch, Gf2Error> {
    if e.len() != a.rows() {
        return Err(Gf2Error::DimensionMismatch {
            expected: a.rows(),
            found: e.len(),
        });
    }
    let basis = ImageBasis::new(a);
    Ok(search_with_basis(&basis, e, budget))
}

pub(crate) fn search_with_basis(basis: &ImageBasis, e: &Gf2Vector, budget: &SearchBudget) -> CosetSearch {
    let rank = basis.rank();
    let (residual, used) = basis.reduce(e);
    if residual.is_zero() {
        let (nearest, preimage) = basis.combine(used);
        return CosetSearch {
            distance: 0,
            nearest,
            preimage,
            proven: true,
            rank,
            visited: 1,
        };
    }

    let threads = budget.threads.max(1);
    let sweep_bits = rank.min(MAX_SWEEP_BITS);
    let chunk_bits = if threads == 1 {
        0
    } else {
        let wanted = (threads * 8).next_power_of_two().trailing_zeros() as usize;
        wanted.min(rank)
    }
    .max(rank.saturating_sub(MAX_SWEEP_BITS));
    let low_bits = (rank - chunk_bits).min(sweep_bits);
    let exhaustive = rank - chunk_bits <= MAX_SWEEP_BITS && chunk_bits < 64;

    let control = Control {
        deadline: budget.max_duration.map(|d| Instant::now() + d),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        lower_bound: 1,
        next_chunk: AtomicUsize::new(0),
    };
    let words = e.words().len();
    let num_chunks: u64 = if chunk_bits >= 63 { u64::MAX } else { 1u64 << chunk_bits };

    let outcome = match words {
        0 | 1 => run::<1>(basis, e, chunk_bits, low_bits, num_chunks, threads, &control),
        2 => run::<2>(basis, e, chunk_bits, low_bits, num_chunks, threads, &control),
        3 | 4 => run::<4>(basis, e, chunk_bits, low_bits, num_chunks, threads, &control),
        5..=8 => run::<8>(basis, e, chunk_bits, low_bits, num_chunks, threads, &control),
        _ => run_dynamic(basis, e, chunk_bits, low_bits, num_chunks, threads, &control),
    };

    let coefficients = outcome.coefficients(chunk_bits, low_bits, rank);
    let (nearest, preimage) = basis.combine(coefficients);
    let completed = !control.timed_out.load(Ordering::Relaxed) && exhaustive;
    CosetSearch {
        distance: outcome.weight,
        nearest,
        preimage,
        proven: completed || outcome.weight <= control.lower_bound,
        rank,
        visited: outcome.visited,
    }
}

struct Control {
    deadline: Option<Instant>,
    stop: AtomicBool,
    timed_out: AtomicBool,
    lower_bound: usize,
    next_chunk: AtomicUsize,
}

impl Control {
    #[inline]
    fn should_stop(&self) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.timed_out.store(true, Ordering::Relaxed);
                self.stop.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Best {
    weight: usize,
    chunk: u64,
    step: u64,
}

struct Outcome {
    weight: usize,
    chunk: u64,
    step: u64,
    visited: u64,
}

impl Outcome {
    fn coefficients(&self, chunk_bits: usize, low_bits: usize, rank: usize) -> Vec<usize> {
        let gray = self.step ^ (self.step >> 1);
        let mut out: Vec<usize> = (0..low_bits).filter(|&i| (gray >> i) & 1 == 1).collect();
        let top_start = rank - chunk_bits;
        out.extend(
            (0..chunk_bits.min(64))
                .filter(|&j| (self.chunk >> j) & 1 == 1)
                .map(|j| top_start + j),
        );
        out
    }
}

fn pack<const W: usize>(v: &Gf2Vector) -> [u64; W] {
    let mut out = [0u64; W];
    out[..v.words().len()].copy_from_slice(v.words());
    out
}

#[inline(always)]
fn weight<const W: usize>(v: &[u64; W]) -> usize {
    v.iter().map(|w| w.count_ones() as usize).sum()
}

/// Gray-code sweep over `2^low_bits` image vectors offset by `start`.
/// Returns `(best weight, step achieving it, steps visited)`.
fn sweep<const W: usize>(basis: &[[u64; W]], start: [u64; W], low_bits: usize, control: &Control) -> (usize, u64, u64) {
    let mut cur = start;
    let mut best = weight(&cur);
    let mut best_step = 0u64;
    if best <= control.lower_bound {
        return (best, 0, 1);
    }
    let total: u64 = 1u64 << low_bits;
    let mut k: u64 = 1;
    while k < total {
        let b = &basis[k.trailing_zeros() as usize];
        for w in 0..W {
            cur[w] ^= b[w];
        }
        let wt = weight(&cur);
        if wt < best {
            best = wt;
            best_step = k;
            if best <= control.lower_bound {
                control.stop.store(true, Ordering::Relaxed);
                return (best, best_step, k + 1);
            }
        }
        if k & CHECK_INTERVAL_MASK == 0 && control.should_stop() {
            return (best, best_step, k + 1);
        }
        k += 1;
    }
    (best, best_step, total)
}

fn run<const W: usize>(
    basis: &ImageBasis,
    e: &Gf2Vector,
    chunk_bits: usize,
    low_bits: usize,
    num_chunks: u64,
    threads: usize,
    control: &Control,
) -> Outcome {
    let packed: Vec<[u64; W]> = basis.vectors().iter().map(pack::<W>).collect();
    let target = pack::<W>(e);
    let top_start = basis.rank() - chunk_bits;
    let chunk_start = |chunk: u64| {
        let mut start = target;
        for j in 0..chunk_bits.min(64) {
            if (chunk >> j) & 1 == 1 {
                for w in 0..W {
                    start[w] ^= packed[top_start + j][w];
                }
            }
        }
        start
    };
    drive(num_chunks, threads, control, |chunk| {
        sweep::<W>(&packed, chunk_start(chunk), low_bits, control)
    })
}

fn run_dynamic(
    basis: &ImageBasis,
    e: &Gf2Vector,
    chunk_bits: usize,
    low_bits: usize,
    num_chunks: u64,
    threads: usize,
    control: &Control,
) -> Outcome {
    let top_start = basis.rank() - chunk_bits;
    drive(num_chunks, threads, control, |chunk| {
        let mut cur = e.clone();
        for j in 0..chunk_bits.min(64) {
            if (chunk >> j) & 1 == 1 {
                cur.add_assign(&basis.vectors()[top_start + j]);
            }
        }
        let mut best = cur.weight();
        let mut best_step = 0;
        if best <= control.lower_bound {
            return (best, 0, 1);
        }
        let total: u64 = 1u64 << low_bits;
        let mut k: u64 = 1;
        while k < total {
            cur.add_assign(&basis.vectors()[k.trailing_zeros() as usize]);
            let wt = cur.weight();
            if wt < best {
                best = wt;
                best_step = k;
                if best <= control.lower_bound {
                    control.stop.store(true, Ordering::Relaxed);
                    return (best, best_step, k + 1);
                }
            }
            if k & 0xFF == 0 && control.should_stop() {
                return (best, best_step, k + 1);
            }
            k += 1;
        }
        (best, best_step, total)
    })
}

/// Hands chunks to workers and min-combines their results by
/// `(weight, chunk, step)`, which keeps the reported minimiser independent of
/// scheduling.
fn drive<F>(num_chunks: u64, threads: usize, control: &Control, work: F) -> Outcome
where
    F: Fn(u64) -> (usize, u64, u64) + Sync,
{
    let best: Mutex<Option<Best>> = Mutex::new(None);
    let visited = AtomicUsize::new(0);
    let worker = || loop {
        if control.stop.load(Ordering::Relaxed) {
            break;
        }
        let chunk = control.next_chunk.fetch_add(1, Ordering::Relaxed) as u64;
        if chunk >= num_chunks {
            break;
        }
        let (weight, step, seen) = work(chunk);
        visited.fetch_add(seen as usize, Ordering::Relaxed);
        let candidate = Best { weight, chunk, step };
        let mut guard = best.lock().expect("search state poisoned");
        if guard.is_none_or(|b| candidate < b) {
            *guard = Some(candidate);
        }
    };
    let workers = threads.min(num_chunks.min(usize::MAX as u64) as usize).max(1);
    if workers == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(worker);
            }
        });
    }
    let best = best
        .into_inner()
        .expect("search state poisoned")
        .expect("at least one chunk is always searched");
    Outcome {
        weight: best.weight,
        chunk: best.chunk,
        step: best.step,
        visited: visited.load(Ordering::Relaxed) as u64,
    }
}
