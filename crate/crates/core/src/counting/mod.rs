//! Exact counts: Bell numbers, the labeled families `F*_1, F*_2, F*_3`,
//! labeled cographs, and the lower bound for `C_{2l}`-free graphs.

mod sampler;

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

pub use sampler::{partition_stats, PartitionSampler, PartitionStats, SetPartition, MAX_SAMPLER_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("family index must be 1, 2 or 3, got {0}")]
    BadFamilyIndex(usize),
    #[error("the C_2l lower bound needs l > 3, got l = {0}")]
    BadL(usize),
    #[error("n must be at least {min}, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("n must be at most {max}, got {n}")]
    NTooLarge { n: usize, max: usize },
}

struct BellTable {
    /// `bells[n] = B_n`.
    bells: Vec<BigUint>,
    /// Last computed row of the Bell triangle.
    row: Vec<BigUint>,
}

fn bell_table() -> &'static Mutex<BellTable> {
    static TABLE: OnceLock<Mutex<BellTable>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Mutex::new(BellTable {
            bells: vec![BigUint::one()],
            row: vec![BigUint::one()],
        })
    })
}

/// The Bell number `B_n`, from the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    let mut t = bell_table().lock().expect("bell table");
    while t.bells.len() <= n {
        // Row r starts with the last entry of row r - 1; each next entry adds
        // the entry above-left.
        let prev = std::mem::take(&mut t.row);
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(prev.last().expect("non-empty row").clone());
        for x in &prev {
            let next = row.last().expect("non-empty") + x;
            row.push(next);
        }
        t.bells.push(row[0].clone());
        t.row = row;
    }
    t.bells[n].clone()
}

/// `C(n, k)` exactly.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Labeled connected complement components allowed in `F*_i` on `s`
/// vertices.
pub fn component_count(i: usize, s: usize) -> Result<BigUint, CountingError> {
    let c = match (i, s) {
        (1..=3, 0) => BigUint::zero(),
        (1..=3, 1 | 2) => BigUint::one(),
        (1 | 2, 3) => BigUint::from(4u8),
        (1, s) => BigUint::from(s),
        (2, s) => BigUint::from(s + 1),
        (3, s) => (BigUint::one() << s) - BigUint::from(s + 1),
        (i, _) => return Err(CountingError::BadFamilyIndex(i)),
    };
    Ok(c)
}

/// Exponential convolution over the component containing the first vertex:
/// `a(m) = sum_s C(m-1, s-1) c(s) a(m-s)`, `a(0) = 1`.
fn component_convolution(n: usize, c: impl Fn(usize) -> BigUint) -> Vec<BigUint> {
    let cs: Vec<BigUint> = (0..=n).map(&c).collect();
    let mut a = vec![BigUint::one()];
    for m in 1..=n {
        let mut total = BigUint::zero();
        for s in 1..=m {
            total += binomial(m - 1, s - 1) * &cs[s] * &a[m - s];
        }
        a.push(total);
    }
    a
}

/// `f*_i(0), …, f*_i(n)`.
pub fn f_star_table(i: usize, n: usize) -> Result<Vec<BigUint>, CountingError> {
    component_count(i, 1)?;
    Ok(component_convolution(n, |s| {
        component_count(i, s).expect("validated index")
    }))
}

/// Number of labeled graphs on `n` vertices in `F*_i`.
pub fn f_star(i: usize, n: usize) -> Result<BigUint, CountingError> {
    Ok(f_star_table(i, n)?.pop().expect("n + 1 entries"))
}

/// Labeled `P_4`-free graphs on `0..=n` vertices. A cograph on at least two
/// vertices is disconnected or has a disconnected complement, never both,
/// so the connected ones are exactly half.
pub fn labeled_cograph_table(n: usize) -> Vec<BigUint> {
    let mut total = vec![BigUint::one()];
    let mut connected = vec![BigUint::zero()];
    for m in 1..=n {
        if m == 1 {
            total.push(BigUint::one());
            connected.push(BigUint::one());
            continue;
        }
        let mut disconnected = BigUint::zero();
        for s in 1..m {
            disconnected += binomial(m - 1, s - 1) * &connected[s] * &total[m - s];
        }
        let t = disconnected * 2u8;
        connected.push(&t >> 1);
        total.push(t);
    }
    total
}

pub fn labeled_cograph_count(n: usize) -> BigUint {
    labeled_cograph_table(n).pop().expect("n + 1 entries")
}

/// `2^(p/q) * B`, kept exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub n: usize,
    pub l: usize,
    /// Reduced exponent of two, `numerator / denominator`.
    pub exponent_numerator: BigUint,
    pub exponent_denominator: BigUint,
    /// Index and value of the Bell factor.
    pub bell_index: usize,
    pub bell_factor: BigUint,
}

impl LowerBound {
    pub fn exponent_is_integer(&self) -> bool {
        self.exponent_denominator.is_one()
    }

    /// The exact value when the exponent is an integer.
    pub fn exact_value(&self) -> Option<BigUint> {
        let p: usize = self.exponent_numerator.clone().try_into().ok()?;
        self.exponent_is_integer()
            .then(|| &self.bell_factor << p)
    }

    /// `count >= 2^(p/q) B`, decided as `count^q >= 2^p B^q`.
    pub fn is_at_most(&self, count: &BigUint) -> bool {
        let q: u32 = (&self.exponent_denominator).try_into().expect("small denominator");
        let p: usize = (&self.exponent_numerator).try_into().expect("small numerator");
        count.pow(q) >= (self.bell_factor.pow(q) << p)
    }

    /// `floor(2^(p/q) B)`.
    pub fn floor_value(&self) -> BigUint {
        if let Some(v) = self.exact_value() {
            return v;
        }
        let q: u32 = (&self.exponent_denominator).try_into().expect("small denominator");
        let p: usize = (&self.exponent_numerator).try_into().expect("small numerator");
        let target = self.bell_factor.pow(q) << p;
        // Largest x with x^q <= target.
        let mut lo = &self.bell_factor << (p / q as usize);
        let mut hi = &self.bell_factor << (p / q as usize + 1);
        while &lo + 1u8 < hi {
            let mid: BigUint = (&lo + &hi) >> 1;
            if mid.pow(q) <= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Base-two logarithm, for display only.
    pub fn log2_approx(&self) -> f64 {
        let p = self.exponent_numerator.to_string().parse::<f64>().unwrap_or(f64::NAN);
        let q = self.exponent_denominator.to_string().parse::<f64>().unwrap_or(f64::NAN);
        p / q + log2_big(&self.bell_factor)
    }
}

/// `log2` of a big integer, for display only.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return (x.to_string().parse::<f64>().unwrap_or(0.0)).log2();
    }
    let shift = bits - 52;
    let top: u64 = (x >> shift).try_into().expect("52 bits");
    (top as f64).log2() + shift as f64
}

/// `2^((1 - 1/(l-1)) C(n,2)) * B_{ceil(n/(l-1))}`.
pub fn c2l_lower_bound(n: usize, l: usize) -> Result<LowerBound, CountingError> {
    if l <= 3 {
        return Err(CountingError::BadL(l));
    }
    if n == 0 {
        return Err(CountingError::NTooSmall { n, min: 1 });
    }
    let pairs = binomial(n, 2);
    let num = pairs * BigUint::from(l - 2);
    let den = BigUint::from(l - 1);
    let g = num.gcd(&den);
    let bell_index = n.div_ceil(l - 1);
    Ok(LowerBound {
        n,
        l,
        exponent_numerator: num / &g,
        exponent_denominator: den / g,
        bell_index,
        bell_factor: bell(bell_index),
    })
}

/// A rational lower bound `a / b` on `log2 n`, with `b = 4096` and
/// `a = floor(b log2 n)` computed exactly as the bit length of `n^b` minus one.
pub fn log2_lower_bound(n: usize) -> (BigUint, BigUint) {
    const B: u32 = 4096;
    let a = BigUint::from(n).pow(B).bits() - 1;
    (BigUint::from(a), BigUint::from(B))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_values() {
        let expect = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), BigUint::from(b));
        }
    }

    #[test]
    fn bell_binomial_recurrence() {
        for n in 0..=30 {
            let sum: BigUint = (0..=n).map(|k| binomial(n, k) * bell(k)).sum();
            assert_eq!(bell(n + 1), sum, "n = {n}");
        }
    }

    #[test]
    fn family_counts() {
        assert_eq!(f_star(1, 4).unwrap(), BigUint::from(30u8));
        assert_eq!(f_star(3, 4).unwrap(), BigUint::from(37u8));
        assert_eq!(labeled_cograph_count(3), BigUint::from(8u8));
        assert_eq!(labeled_cograph_count(4), BigUint::from(52u8));
        assert_eq!(f_star(4, 3), Err(CountingError::BadFamilyIndex(4)));
    }

    #[test]
    fn lower_bound_small() {
        let b = c2l_lower_bound(3, 4).unwrap();
        assert_eq!(b.exact_value(), Some(BigUint::from(4u8)));
        let b = c2l_lower_bound(8, 4).unwrap();
        assert_eq!(b.exponent_numerator, BigUint::from(56u8));
        assert_eq!(b.exponent_denominator, BigUint::from(3u8));
        assert_eq!(b.bell_factor, BigUint::from(5u8));
        let floor = b.floor_value();
        assert!(b.is_at_most(&(&floor + 1u8)));
        assert!(!b.is_at_most(&floor));
        assert!(c2l_lower_bound(6, 4).unwrap().is_at_most(&(BigUint::one() << 15)));
        assert_eq!(c2l_lower_bound(5, 3), Err(CountingError::BadL(3)));
    }

    #[test]
    fn log2_bound_is_below() {
        for n in [2usize, 3, 8, 100, 200] {
            let (a, b) = log2_lower_bound(n);
            let a: f64 = a.to_string().parse().unwrap();
            let b: f64 = b.to_string().parse().unwrap();
            assert!(a / b <= (n as f64).log2());
            assert!((n as f64).log2() - a / b < 1e-3);
        }
    }
}
