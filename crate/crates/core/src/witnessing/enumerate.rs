//! Minimal really canonical witnessing sequences of a small graph `h`.
//!
//! A canonical sequence forbids, in slot `i`, a set `J_i` of induced subgraphs
//! of `h`. A partition `X_1, …, X_k` of `V(h)` escapes the sequence iff no
//! `J_i` has a member inside `h[X_i]`, so the witnessing sequences are exactly
//! the transversals of the hypergraph whose edges are
//! `{(i, c) : c ≤ class(h[X_i])}`, one edge per partition. Really canonical
//! sequences may not forbid cliques (or stable sets) in a slot, which removes
//! those elements from every edge. Minimal witnessing sequences are then the
//! minimal transversals, listed with the MMCS algorithm of Murakami and Uno.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::subgraph::contains_induced;

use super::{clique_stable_partition_exists, wpn, WitnessError, WitnessSequence};

/// Largest `h` accepted; classes are computed for all `2^n` vertex subsets.
pub const MAX_ENUMERATION_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
pub struct EnumerationStats {
    /// Isomorphism classes of induced subgraphs of `h`.
    pub classes: usize,
    /// Set partitions of `V(h)` into at most `k` blocks.
    pub partitions: u64,
    /// Distinct multisets of block classes.
    pub class_multisets: usize,
    /// `(cliques, stables)` slot-type splits whose base families witness `h`.
    pub base_splits: Vec<(usize, usize)>,
    /// Minimal hyperedges, summed over base splits.
    pub hyperedges: usize,
    /// Search nodes of the transversal enumeration.
    pub nodes: u64,
    /// Minimal transversals before identifying slot permutations.
    pub ordered_sequences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub sequences: Vec<WitnessSequence>,
    pub stats: EnumerationStats,
}

struct Classes {
    reps: Vec<Graph>,
    /// `below[d]` has bit `c` set iff class `c` is an induced subgraph of `d`.
    below: Vec<Vec<u64>>,
    is_clique: Vec<bool>,
    is_stable: Vec<bool>,
    of_mask: Vec<u16>,
}

fn classes_of(h: &Graph) -> Classes {
    let n = h.n();
    let mut ids: HashMap<Graph, usize> = HashMap::new();
    let mut raw: Vec<usize> = Vec::with_capacity(1 << n);
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..1 << n {
        let f = canonical_form(&h.induced(VertexSet(mask)));
        let next = ids.len();
        let id = *ids.entry(f.clone()).or_insert_with(|| {
            reps.push(f);
            next
        });
        raw.push(id);
    }
    // Renumber by (order, size, form) so ids do not depend on discovery order.
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| {
        let (x, y) = (&reps[a], &reps[b]);
        (x.n(), x.edge_count(), x).cmp(&(y.n(), y.edge_count(), y))
    });
    let mut renumber = vec![0u16; reps.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new as u16;
    }
    let reps: Vec<Graph> = order.iter().map(|&i| reps[i].clone()).collect();
    let m = reps.len();
    let words = m.div_ceil(64);
    let below = (0..m)
        .map(|d| {
            let mut bits = vec![0u64; words];
            for c in 0..m {
                if reps[c].n() <= reps[d].n() && contains_induced(&reps[d], &reps[c]) {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    Classes {
        is_clique: reps.iter().map(Graph::is_clique).collect(),
        is_stable: reps.iter().map(Graph::is_stable).collect(),
        reps,
        below,
        of_mask: raw.into_iter().map(|id| renumber[id]).collect(),
    }
}

struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    fn spend(&self, amount: u64) -> Result<(), WitnessError> {
        let used = self.used.fetch_add(amount, Ordering::Relaxed) + amount;
        if used > self.limit {
            Err(WitnessError::BudgetExhausted { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Sorted class multisets (padded with the empty class to length `k`) over
/// all partitions of `V(h)` into at most `k` blocks.
fn class_multisets(
    h: &Graph,
    k: usize,
    classes: &Classes,
    budget: &Budget,
    partitions: &mut u64,
) -> Result<HashSet<Vec<u16>>, WitnessError> {
    fn rec(
        v: usize,
        n: usize,
        k: usize,
        blocks: &mut Vec<u64>,
        classes: &Classes,
        out: &mut HashSet<Vec<u16>>,
        count: &mut u64,
        budget: &Budget,
    ) -> Result<(), WitnessError> {
        if v == n {
            *count += 1;
            if (*count).is_multiple_of(4096) {
                budget.spend(4096)?;
            }
            let mut t: Vec<u16> = blocks.iter().map(|&b| classes.of_mask[b as usize]).collect();
            t.resize(k, classes.of_mask[0]);
            t.sort_unstable();
            out.insert(t);
            return Ok(());
        }
        for b in 0..blocks.len() {
            blocks[b] |= 1 << v;
            rec(v + 1, n, k, blocks, classes, out, count, budget)?;
            blocks[b] &= !(1 << v);
        }
        if blocks.len() < k {
            blocks.push(1 << v);
            rec(v + 1, n, k, blocks, classes, out, count, budget)?;
            blocks.pop();
        }
        Ok(())
    }
    let mut out = HashSet::new();
    let mut blocks = Vec::with_capacity(k);
    rec(0, h.n(), k, &mut blocks, classes, &mut out, partitions, budget)?;
    budget.spend(*partitions % 4096)?;
    Ok(out)
}

fn next_permutation(v: &mut [u16]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Growable bitset over `u64` words.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }
    fn ones(len: usize) -> Self {
        let mut b = Self::zeros(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }
    fn count_and(&self, o: &Bits) -> u32 {
        self.0.iter().zip(&o.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            VertexSet(word).iter().map(move |b| w * 64 + b)
        })
    }
}

/// Hypergraph of one clique/stable slot-type split.
struct Split {
    /// `(slot, class)` per element.
    elements: Vec<(usize, u16)>,
    edges: Vec<Bits>,
    /// Edges containing each element.
    incident: Vec<Bits>,
}

fn build_split(k: usize, cliques: usize, classes: &Classes, multisets: &[Vec<u16>]) -> Split {
    let base = |slot: usize, c: usize| {
        if slot < cliques {
            classes.is_clique[c]
        } else {
            classes.is_stable[c]
        }
    };
    let m = classes.reps.len();
    let mut tuples: HashSet<Vec<Option<u16>>> = HashSet::new();
    for ms in multisets {
        let mut perm = ms.clone();
        loop {
            let t: Vec<Option<u16>> = perm
                .iter()
                .enumerate()
                .map(|(i, &c)| (!base(i, c as usize)).then_some(c))
                .collect();
            debug_assert!(t.iter().any(Option::is_some), "base split escapes");
            tuples.insert(t);
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    let size = |t: &Vec<Option<u16>>| -> usize {
        t.iter()
            .map(|c| c.map_or(0, |c| classes.reps[c as usize].n()))
            .sum()
    };
    let mut sorted: Vec<Vec<Option<u16>>> = tuples.into_iter().collect();
    sorted.sort_by_key(|t| (size(t), t.clone()));
    let le = |c: u16, d: u16| classes.below[d as usize][c as usize / 64] >> (c % 64) & 1 == 1;
    let dominated = |small: &Vec<Option<u16>>, big: &Vec<Option<u16>>| {
        small.iter().zip(big).all(|(s, b)| match (s, b) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(s), Some(b)) => le(*s, *b),
        })
    };
    let mut minimal: Vec<Vec<Option<u16>>> = Vec::new();
    for t in sorted {
        if !minimal.iter().any(|m| dominated(m, &t)) {
            minimal.push(t);
        }
    }

    let mut elements = Vec::new();
    let mut element_of = vec![vec![usize::MAX; m]; k];
    for (slot, row) in element_of.iter_mut().enumerate() {
        for (c, id) in row.iter_mut().enumerate() {
            if !base(slot, c) {
                *id = elements.len();
                elements.push((slot, c as u16));
            }
        }
    }
    let edges: Vec<Bits> = minimal
        .iter()
        .map(|t| {
            let mut e = Bits::zeros(elements.len());
            for (slot, top) in t.iter().enumerate() {
                if let Some(top) = top {
                    for c in 0..m {
                        if element_of[slot][c] != usize::MAX && le(c as u16, *top) {
                            e.set(element_of[slot][c]);
                        }
                    }
                }
            }
            e
        })
        .collect();
    let mut incident = vec![Bits::zeros(edges.len()); elements.len()];
    for (f, e) in edges.iter().enumerate() {
        for x in e.iter() {
            incident[x].set(f);
        }
    }
    Split {
        elements,
        edges,
        incident,
    }
}

struct Mmcs<'a> {
    split: &'a Split,
    budget: &'a Budget,
    nodes: u64,
    out: Vec<Vec<usize>>,
}

impl Mmcs<'_> {
    fn run(&mut self) -> Result<(), WitnessError> {
        let s = self.split;
        let cand = Bits::ones(s.elements.len());
        let uncov = Bits::ones(s.edges.len());
        self.rec(&mut Vec::new(), cand, &mut Vec::new(), uncov)?;
        self.budget.spend(self.nodes % 1024)
    }

    fn rec(
        &mut self,
        chosen: &mut Vec<usize>,
        mut cand: Bits,
        crit: &mut Vec<Bits>,
        uncov: Bits,
    ) -> Result<(), WitnessError> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            self.budget.spend(1024)?;
        }
        if uncov.is_empty() {
            self.out.push(chosen.clone());
            return Ok(());
        }
        let s = self.split;
        let f = uncov
            .iter()
            .min_by_key(|&f| s.edges[f].count_and(&cand))
            .expect("uncovered edge");
        let branch = s.edges[f].and(&cand);
        cand = cand.and_not(&branch);
        for e in branch.iter() {
            let hit = &s.incident[e];
            let mut next_crit: Vec<Bits> = crit.iter().map(|c| c.and_not(hit)).collect();
            if next_crit.iter().all(|c| !c.is_empty()) {
                next_crit.push(uncov.and(hit));
                chosen.push(e);
                self.rec(chosen, cand.clone(), &mut next_crit, uncov.and_not(hit))?;
                chosen.pop();
            }
            cand.set(e);
        }
        Ok(())
    }
}

/// Lists, up to the order of the slots, every really canonical witnessing
/// `k`-sequence whose forbidden sets are induced subgraphs of `h` and from
/// which no forbidden graph can be dropped. `k` must equal `wpn(h)`.
/// `budget` bounds the partitions plus search nodes examined.
pub fn enumerate_really_canonical_sequences(
    h: &Graph,
    k: usize,
    budget: u64,
) -> Result<Enumeration, WitnessError> {
    let n = h.n();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(WitnessError::Unsupported(format!(
            "sequence enumeration supports at most {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    let w = wpn(h);
    if k != w || k == 0 {
        return Err(WitnessError::ArityMismatch {
            expected: w,
            found: k,
        });
    }
    let budget = Budget {
        limit: budget,
        used: AtomicU64::new(0),
    };
    let classes = classes_of(h);
    let mut stats = EnumerationStats {
        classes: classes.reps.len(),
        ..Default::default()
    };
    let multisets = class_multisets(h, k, &classes, &budget, &mut stats.partitions)?;
    stats.class_multisets = multisets.len();
    let mut multisets: Vec<Vec<u16>> = multisets.into_iter().collect();
    multisets.sort();

    stats.base_splits = (0..=k)
        .rev()
        .map(|c| (c, k - c))
        .filter(|&(c, s)| !clique_stable_partition_exists(h, c, s))
        .collect();

    let results: Vec<Result<(usize, u64, Vec<Vec<Vec<u16>>>), WitnessError>> = stats
        .base_splits
        .par_iter()
        .map(|&(cliques, _)| {
            let split = build_split(k, cliques, &classes, &multisets);
            let mut mmcs = Mmcs {
                split: &split,
                budget: &budget,
                nodes: 0,
                out: Vec::new(),
            };
            mmcs.run()?;
            let seqs = mmcs
                .out
                .iter()
                .map(|set| {
                    let mut slots = vec![Vec::new(); k];
                    for &x in set {
                        let (slot, c) = split.elements[x];
                        slots[slot].push(c);
                    }
                    slots.iter_mut().for_each(|s| s.sort_unstable());
                    slots
                })
                .collect();
            Ok((split.edges.len(), mmcs.nodes, seqs))
        })
        .collect();

    let mut unique: BTreeSet<Vec<Vec<u16>>> = BTreeSet::new();
    for r in results {
        let (edges, nodes, seqs) = r?;
        stats.hyperedges += edges;
        stats.nodes += nodes;
        stats.ordered_sequences += seqs.len();
        for mut slots in seqs {
            slots.sort();
            unique.insert(slots);
        }
    }
    let sequences = unique
        .into_iter()
        .map(|slots| {
            WitnessSequence::new(
                slots
                    .into_iter()
                    .map(|j| FamilySpec::forbidden(j.into_iter().map(|c| classes.reps[c as usize].clone())))
                    .collect(),
            )
            .expect("k >= 1")
        })
        .collect();
    Ok(Enumeration { sequences, stats })
}
