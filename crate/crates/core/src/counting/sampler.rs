//! Uniform random set partitions by the urn method: draw an urn count `U`
//! with `P(U = u) = u^n / (e u! B_n)`, drop each element into a uniform urn,
//! and keep the non-empty urns.

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::CountingError;

pub const MAX_SAMPLER_N: usize = 2000;

/// Urn counts whose weight falls below `2^-TAIL_BITS` of the largest weight
/// are dropped. The weights are log-concave in `u`, so the kept ones form an
/// interval and the dropped mass is below `2^-(TAIL_BITS - 12)` relative for
/// every `n <= 2000`.
const TAIL_BITS: f64 = 112.0;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SetPartition {
    n: usize,
    /// Sorted blocks, ordered by least element.
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from blocks, checking they are non-empty, disjoint
    /// and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return None;
            }
            for &x in b {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return None;
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Some(SetPartition { n, blocks })
    }

    fn from_labels(n: usize, labels: &[usize], urns: usize) -> Self {
        let mut by_urn: Vec<Vec<usize>> = vec![Vec::new(); urns];
        for (x, &u) in labels.iter().enumerate() {
            by_urn[u].push(x);
        }
        let mut blocks: Vec<Vec<usize>> = by_urn.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Restricted growth string: `rgs[x]` is the index of the block of `x`.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x] = i;
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub blocks: usize,
    pub nonsingleton_blocks: usize,
    /// Threshold used for `heavy_vertices`.
    pub threshold: usize,
    /// Elements lying in blocks of size greater than `threshold`.
    pub heavy_vertices: usize,
}

/// Block statistics. The threshold defaults to `floor((ln n)^3)`.
pub fn partition_stats(p: &SetPartition, threshold: Option<usize>) -> PartitionStats {
    let t = threshold.unwrap_or_else(|| {
        if p.n <= 1 {
            0
        } else {
            (p.n as f64).ln().powi(3).floor() as usize
        }
    });
    PartitionStats {
        blocks: p.blocks.len(),
        nonsingleton_blocks: p.blocks.iter().filter(|b| b.len() > 1).count(),
        threshold: t,
        heavy_vertices: p.blocks.iter().filter(|b| b.len() > t).map(Vec::len).sum(),
    }
}

/// Seeded sampler for uniform partitions of `0..n`.
#[derive(Debug, Clone)]
pub struct PartitionSampler {
    n: usize,
    /// Smallest urn count kept.
    first: usize,
    /// `cumulative[j]` is the total weight of urn counts `first..=first + j`.
    cumulative: Vec<BigUint>,
    rng: ChaCha8Rng,
}

impl PartitionSampler {
    pub fn new(n: usize, seed: u64) -> Result<Self, CountingError> {
        if n == 0 {
            return Err(CountingError::NTooSmall { n, min: 1 });
        }
        if n > MAX_SAMPLER_N {
            return Err(CountingError::NTooLarge { n, max: MAX_SAMPLER_N });
        }
        let (first, last) = urn_window(n);
        // Weight of u is u^n * last! / u!, an integer proportional to u^n / u!.
        let mut weights = vec![BigUint::zero(); last - first + 1];
        let mut tail = BigUint::one();
        for u in (first..=last).rev() {
            weights[u - first] = BigUint::from(u).pow(n as u32) * &tail;
            tail *= u;
        }
        let mut acc = BigUint::zero();
        let cumulative = weights
            .into_iter()
            .map(|w| {
                acc += w;
                acc.clone()
            })
            .collect();
        Ok(PartitionSampler {
            n,
            first,
            cumulative,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Range of urn counts the sampler draws from.
    pub fn urn_range(&self) -> (usize, usize) {
        (self.first, self.first + self.cumulative.len() - 1)
    }

    pub fn sample(&mut self) -> SetPartition {
        let total = self.cumulative.last().expect("non-empty window");
        let r = self.rng.gen_biguint_below(total);
        let j = self.cumulative.partition_point(|c| *c <= r);
        let urns = self.first + j;
        let labels: Vec<usize> = (0..self.n).map(|_| self.rng.gen_range(0..urns)).collect();
        SetPartition::from_labels(self.n, &labels, urns)
    }
}

/// Interval of urn counts whose weight `u^n / u!` is within `2^-TAIL_BITS`
/// of the largest.
fn urn_window(n: usize) -> (usize, usize) {
    let log_w = |u: usize, ln_fact: f64| n as f64 * (u as f64).ln() - ln_fact;
    let mut ln_fact = 0.0;
    let mut logs = Vec::new();
    let mut best = f64::NEG_INFINITY;
    let cut = TAIL_BITS * std::f64::consts::LN_2;
    for u in 1.. {
        ln_fact += (u as f64).ln();
        let w = log_w(u, ln_fact);
        best = best.max(w);
        logs.push(w);
        if w < best - cut && u > n.min(2) {
            break;
        }
    }
    let first = logs.iter().position(|&w| w >= best - cut).expect("maximum kept") + 1;
    let last = logs.iter().rposition(|&w| w >= best - cut).expect("maximum kept") + 1;
    (first, last)
}
