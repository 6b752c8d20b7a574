//! Exhaustive censuses over all graphs on `n` vertices: counts of `H`-free
//! graphs, of those certified by a partition theorem, and girth-5 statistics.
//!
//! Work is split into shards. Labeled shards fix the high edge bits; unlabeled
//! shards take the parents whose index falls in one residue class. Shard
//! counts add, so any merge order gives the same report, and a manifest of
//! finished shards lets an interrupted run resume.

mod girth;
mod labeled;
mod unlabeled;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::canon::is_isomorphic;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::subgraph::{contains_induced, Pattern};
use crate::witnessing::{find_certificate, Theorem, WitnessError};

pub use girth::{girth5_census, Girth5Report};
pub use labeled::{enumerate_labeled, enumerate_labeled_shard, MAX_LABELED_N};
pub use unlabeled::{canonical_children, enumerate_unlabeled, orbit_size, unlabeled_classes, MAX_UNLABELED_N};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest supported number of shard bits.
pub const MAX_SHARD_BITS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("n = {n} exceeds the supported maximum {max}; {hint}")]
    TooLarge { n: usize, max: usize, hint: String },
    #[error("{bits} shard bits is too many for {edges} edge slots")]
    BadShards { bits: u32, edges: u32 },
    #[error("theorem {theorem} is about {expected}, not the forbidden graph {found}")]
    InconsistentTheorem {
        theorem: String,
        expected: String,
        found: String,
    },
    #[error("manifest belongs to configuration {found}, this run is {expected}")]
    ConfigMismatch { expected: String, found: String },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Witness(#[from] WitnessError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusMode {
    Labeled,
    Unlabeled,
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusMode::Labeled => "labeled",
            CensusMode::Unlabeled => "unlabeled",
        })
    }
}

impl FromStr for CensusMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "labeled" => Ok(CensusMode::Labeled),
            "unlabeled" => Ok(CensusMode::Unlabeled),
            _ => Err(format!("unknown mode `{s}`, expected labeled or unlabeled")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusConfig {
    pub n: usize,
    pub forbidden: Graph,
    pub theorem: Theorem,
    pub mode: CensusMode,
    /// The run is split into `2^shard_bits` shards.
    pub shard_bits: u32,
}

impl CensusConfig {
    pub fn new(n: usize, forbidden: Graph, theorem: Theorem, mode: CensusMode) -> Self {
        CensusConfig {
            n,
            forbidden,
            theorem,
            mode,
            shard_bits: 0,
        }
    }

    pub fn with_shard_bits(mut self, bits: u32) -> Self {
        self.shard_bits = bits;
        self
    }

    fn validate(&self) -> Result<(), CensusError> {
        match self.mode {
            CensusMode::Labeled => labeled::check_labeled_n(self.n)?,
            CensusMode::Unlabeled => unlabeled::check_unlabeled_n(self.n)?,
        }
        let edges = (self.n * self.n.saturating_sub(1) / 2) as u32;
        let cap = match self.mode {
            CensusMode::Labeled => edges.min(MAX_SHARD_BITS),
            CensusMode::Unlabeled => MAX_SHARD_BITS,
        };
        if self.shard_bits > cap {
            return Err(CensusError::BadShards {
                bits: self.shard_bits,
                edges,
            });
        }
        self.theorem.sequence()?;
        let expected = self.theorem.forbidden();
        if !is_isomorphic(&expected, &self.forbidden) {
            return Err(CensusError::InconsistentTheorem {
                theorem: self.theorem.id(),
                expected: emit_graph6(&expected),
                found: emit_graph6(&self.forbidden),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "command": "census",
            "n": self.n,
            "forbidden": emit_graph6(&self.forbidden),
            "theorem": self.theorem.id(),
            "mode": self.mode,
            "shard_bits": self.shard_bits,
        })
    }

    pub fn config_hash(&self) -> String {
        config_hash(&self.to_json())
    }

    fn shard_count(&self) -> u64 {
        1 << self.shard_bits
    }
}

/// SHA-256 of the compact JSON rendering with object keys sorted.
pub fn config_hash(config: &serde_json::Value) -> String {
    // serde_json's default map is ordered by key, so this rendering does not
    // depend on field order.
    let canonical = serde_json::to_string(config).expect("json value renders");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

/// Additive shard tallies. Labeled runs leave the class fields at zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub total: u64,
    pub hfree: u64,
    pub certifiable: u64,
    pub classes: u64,
    pub hfree_classes: u64,
    pub certifiable_classes: u64,
    pub soundness_checked: u64,
    pub soundness_failures: u64,
}

impl CensusCounts {
    pub fn merge(mut self, o: &CensusCounts) -> Self {
        self.total += o.total;
        self.hfree += o.hfree;
        self.certifiable += o.certifiable;
        self.classes += o.classes;
        self.hfree_classes += o.hfree_classes;
        self.certifiable_classes += o.certifiable_classes;
        self.soundness_checked += o.soundness_checked;
        self.soundness_failures += o.soundness_failures;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardRecord {
    pub prefix: u64,
    pub done: bool,
    pub counts: CensusCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub config_hash: String,
    pub config: serde_json::Value,
    pub shards: Vec<ShardRecord>,
}

impl Manifest {
    fn fresh(config: &CensusConfig) -> Self {
        Manifest {
            config_hash: config.config_hash(),
            config: config.to_json(),
            shards: (0..config.shard_count())
                .map(|prefix| ShardRecord {
                    prefix,
                    done: false,
                    counts: CensusCounts::default(),
                })
                .collect(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CensusError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CensusError::Manifest(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CensusError::Manifest(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<(), CensusError> {
        let text = serde_json::to_string_pretty(self).expect("manifest renders");
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, text + "\n")
            .and_then(|()| std::fs::rename(&tmp, path))
            .map_err(|e| CensusError::Manifest(format!("{}: {e}", path.display())))
    }

    pub fn is_complete(&self) -> bool {
        self.shards.iter().all(|s| s.done)
    }

    /// Sum over finished shards, in any order.
    pub fn merged(&self) -> CensusCounts {
        self.shards
            .iter()
            .filter(|s| s.done)
            .fold(CensusCounts::default(), |acc, s| acc.merge(&s.counts))
    }
}

/// An exact fraction with a 15-significant-digit rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub numerator: u64,
    pub denominator: u64,
    pub exact: String,
    pub decimal: String,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (p, q) = (num / g, den / g);
        Some(Fraction {
            numerator: p,
            denominator: q,
            exact: format!("{p}/{q}"),
            decimal: decimal_digits(&BigUint::from(p), &BigUint::from(q), 15),
        })
    }
}

/// `num / den` rounded half-up to `sig` significant digits, in positional
/// notation.
pub fn decimal_digits(num: &BigUint, den: &BigUint, sig: usize) -> String {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return "0".into();
    }
    let ten = BigUint::from(10u8);
    // Decimal exponent of the leading digit.
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    let at_least = |e: i64| {
        if e >= 0 {
            *num >= den * ten.pow(e as u32)
        } else {
            num * ten.pow((-e) as u32) >= *den
        }
    };
    while !at_least(e) {
        e -= 1;
    }
    while at_least(e + 1) {
        e += 1;
    }
    let round = |e: i64| {
        let k = sig as i64 - 1 - e;
        let (a, b) = if k >= 0 {
            (num * ten.pow(k as u32), den.clone())
        } else {
            (num.clone(), den * ten.pow((-k) as u32))
        };
        ((a * 2u8 + &b) / (b * 2u8), k)
    };
    let (mut digits, mut k) = round(e);
    if digits.to_string().len() > sig {
        (digits, k) = round(e + 1);
    }
    let s = digits.to_string();
    if k <= 0 {
        return s + &"0".repeat((-k) as usize);
    }
    let k = k as usize;
    if s.len() > k {
        format!("{}.{}", &s[..s.len() - k], &s[s.len() - k..])
    } else {
        format!("0.{}{}", "0".repeat(k - s.len()), s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub total: u64,
    pub hfree: u64,
    pub certifiable: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Soundness {
    /// Certified graphs re-checked for an induced copy of the forbidden graph
    /// and for a valid certificate.
    pub checked: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub version: String,
    pub config_hash: String,
    pub n: usize,
    pub forbidden: String,
    pub theorem: String,
    pub mode: CensusMode,
    pub shard_bits: u32,
    /// Labeled counts in both modes.
    pub total: u64,
    pub hfree: u64,
    pub certifiable: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classes: Option<ClassCounts>,
    /// `certifiable / hfree`.
    pub certifiable_fraction: Option<Fraction>,
    pub soundness: Soundness,
}

impl CensusReport {
    fn new(config: &CensusConfig, c: &CensusCounts) -> Self {
        CensusReport {
            version: VERSION.into(),
            config_hash: config.config_hash(),
            n: config.n,
            forbidden: emit_graph6(&config.forbidden),
            theorem: config.theorem.id(),
            mode: config.mode,
            shard_bits: config.shard_bits,
            total: c.total,
            hfree: c.hfree,
            certifiable: c.certifiable,
            classes: (config.mode == CensusMode::Unlabeled).then_some(ClassCounts {
                total: c.classes,
                hfree: c.hfree_classes,
                certifiable: c.certifiable_classes,
            }),
            certifiable_fraction: Fraction::new(c.certifiable, c.hfree),
            soundness: Soundness {
                checked: c.soundness_checked,
                failures: c.soundness_failures,
            },
        }
    }

    /// Renders the report as pretty JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report renders") + "\n"
    }
}

/// Soundness re-checks: every certified graph for `n <= 7`, one in 1024 by
/// edge mask above that.
fn recheck(n: usize, mask: u64) -> bool {
    n <= 7 || mask & 1023 == 0
}

fn run_labeled_shard(config: &CensusConfig, prefix: u64) -> Result<CensusCounts, CensusError> {
    let seq = config.theorem.sequence()?;
    let h = &config.forbidden;
    let pattern = Pattern::new(h);
    let mut c = CensusCounts::default();
    labeled::enumerate_with_hits(config.n, config.shard_bits, prefix, h, |g, mask, free| {
        c.total += 1;
        if !free {
            return;
        }
        c.hfree += 1;
        if let Some(cert) = find_certificate(g, &seq) {
            c.certifiable += 1;
            if recheck(config.n, mask) {
                c.soundness_checked += 1;
                if pattern.occurs_in(g) || !cert.verify(g) {
                    c.soundness_failures += 1;
                }
            }
        }
    })?;
    Ok(c)
}

fn run_unlabeled_shard(config: &CensusConfig, shard: u64) -> Result<CensusCounts, CensusError> {
    let seq = config.theorem.sequence()?;
    let pattern = Pattern::new(&config.forbidden);
    let mut c = CensusCounts::default();
    let classes = unlabeled::unlabeled_shard(config.n, config.shard_count() as usize, shard as usize)?;
    for g in &classes {
        let w = orbit_size(g);
        c.total += w;
        c.classes += 1;
        if pattern.occurs_in(g) {
            continue;
        }
        c.hfree += w;
        c.hfree_classes += 1;
        if let Some(cert) = find_certificate(g, &seq) {
            c.certifiable += w;
            c.certifiable_classes += 1;
            c.soundness_checked += 1;
            if contains_induced(g, &config.forbidden) || !cert.verify(g) {
                c.soundness_failures += 1;
            }
        }
    }
    Ok(c)
}

fn run_shard(config: &CensusConfig, prefix: u64) -> Result<CensusCounts, CensusError> {
    match config.mode {
        CensusMode::Labeled => run_labeled_shard(config, prefix),
        CensusMode::Unlabeled => run_unlabeled_shard(config, prefix),
    }
}

/// Options for a resumable run.
#[derive(Debug, Clone, Default)]
pub struct RunOptions<'a> {
    /// Manifest file, written after every finished shard.
    pub manifest: Option<&'a Path>,
    /// Continue from an existing manifest instead of starting over.
    pub resume: bool,
    /// Stop after finishing this many more shards.
    pub stop_after: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusOutcome {
    Complete(CensusReport),
    /// Stopped early; the manifest holds the finished shards.
    Interrupted { done: usize, pending: usize },
}

/// Runs (or resumes) a census, shards in parallel on the current rayon pool.
pub fn run_census(config: &CensusConfig, opts: &RunOptions) -> Result<CensusOutcome, CensusError> {
    config.validate()?;
    let mut manifest = match (opts.resume, opts.manifest) {
        (true, Some(path)) if path.exists() => {
            let m = Manifest::load(path)?;
            let expected = config.config_hash();
            if m.config_hash != expected {
                return Err(CensusError::ConfigMismatch {
                    expected,
                    found: m.config_hash,
                });
            }
            if m.shards.len() as u64 != config.shard_count() {
                return Err(CensusError::Manifest("shard list does not match the configuration".into()));
            }
            m
        }
        _ => Manifest::fresh(config),
    };
    let mut pending: Vec<usize> = (0..manifest.shards.len()).filter(|&i| !manifest.shards[i].done).collect();
    if let Some(k) = opts.stop_after {
        pending.truncate(k);
    }
    let shared = Mutex::new(&mut manifest);
    pending.par_iter().try_for_each(|&i| {
        let prefix = i as u64;
        let counts = run_shard(config, prefix)?;
        let mut m = shared.lock().expect("manifest lock");
        m.shards[i] = ShardRecord {
            prefix,
            done: true,
            counts,
        };
        if let Some(path) = opts.manifest {
            m.save(path)?;
        }
        Ok::<(), CensusError>(())
    })?;
    if let Some(path) = opts.manifest {
        manifest.save(path)?;
    }
    if !manifest.is_complete() {
        let done = manifest.shards.iter().filter(|s| s.done).count();
        return Ok(CensusOutcome::Interrupted {
            done,
            pending: manifest.shards.len() - done,
        });
    }
    Ok(CensusOutcome::Complete(CensusReport::new(config, &manifest.merged())))
}

/// A complete census without a manifest.
pub fn census(config: &CensusConfig) -> Result<CensusReport, CensusError> {
    match run_census(config, &RunOptions::default())? {
        CensusOutcome::Complete(r) => Ok(r),
        CensusOutcome::Interrupted { .. } => unreachable!("no stop requested"),
    }
}

/// Distribution helper shared by the girth-5 census.
pub(crate) fn bump(map: &mut BTreeMap<usize, u64>, key: usize, by: u64) {
    *map.entry(key).or_insert(0) += by;
}
