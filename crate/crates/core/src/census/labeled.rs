//! Labeled enumeration: every edge subset of `K_n`, in Gray-code order within
//! shards fixed by the high edge bits.

use std::collections::HashSet;

use crate::graph::Graph;

use super::CensusError;

pub const MAX_LABELED_N: usize = 8;

/// Pairs `(i, j)`, `i < j`, in graph6 order: by `j`, then `i`.
pub(crate) fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub(crate) fn check_labeled_n(n: usize) -> Result<(), CensusError> {
    if n > MAX_LABELED_N {
        return Err(CensusError::TooLarge {
            n,
            max: MAX_LABELED_N,
            hint: "use the unlabeled mode, which supports n <= 10".into(),
        });
    }
    Ok(())
}

/// Visits the graphs whose top `shard_bits` edge bits equal `prefix`. The low
/// bits run through a reflected Gray code, so consecutive graphs differ in
/// one edge. The visitor sees the graph and its edge mask.
pub fn enumerate_labeled_shard(
    n: usize,
    shard_bits: u32,
    prefix: u64,
    mut visit: impl FnMut(&Graph, u64),
) -> Result<(), CensusError> {
    check_labeled_n(n)?;
    let pairs = edge_pairs(n);
    let m = pairs.len() as u32;
    if shard_bits > m {
        return Err(CensusError::BadShards { bits: shard_bits, edges: m });
    }
    let low = m - shard_bits;
    let mut mask = prefix << low;
    let mut g = Graph::from_edge_mask(n, mask);
    visit(&g, mask);
    for step in 1u64..1 << low {
        let e = step.trailing_zeros();
        let (i, j) = pairs[e as usize];
        g.toggle_edge(i, j);
        mask ^= 1 << e;
        visit(&g, mask);
    }
    Ok(())
}

/// Visits all `2^C(n,2)` labeled graphs on `n <= 8` vertices.
pub fn enumerate_labeled(n: usize, visit: impl FnMut(&Graph, u64)) -> Result<(), CensusError> {
    enumerate_labeled_shard(n, 0, 0, visit)
}

/// Number of induced copies of a pattern among the `k`-subsets of `0..n`,
/// kept current under single-edge toggles.
pub(crate) struct HitTracker {
    /// Edge-pattern code of each `k`-subset, over its local pairs.
    codes: Vec<u32>,
    /// For each global pair, the subsets containing it and the local bit.
    touching: Vec<Vec<(u32, u32)>>,
    table: Table,
    hits: usize,
}

enum Table {
    Dense(Vec<bool>),
    Sparse(HashSet<u32>),
}

impl Table {
    fn get(&self, code: u32) -> bool {
        match self {
            Table::Dense(t) => t[code as usize],
            Table::Sparse(s) => s.contains(&code),
        }
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

impl HitTracker {
    /// Tracker for induced copies of `h` in graphs on `n` vertices, starting
    /// from `g`.
    pub(crate) fn new(h: &Graph, g: &Graph) -> Self {
        let n = g.n();
        let k = h.n();
        let local_pairs = edge_pairs(k);
        let codes_of_h: HashSet<u32> = permutations(k)
            .iter()
            .map(|p| h.relabel(p).edge_mask() as u32)
            .collect();
        let table = if local_pairs.len() <= 21 {
            let mut t = vec![false; 1 << local_pairs.len()];
            for &c in &codes_of_h {
                t[c as usize] = true;
            }
            Table::Dense(t)
        } else {
            Table::Sparse(codes_of_h)
        };
        let global = edge_pairs(n);
        let index_of = |i: usize, j: usize| j * (j - 1) / 2 + i;
        let mut touching = vec![Vec::new(); global.len()];
        let mut codes = Vec::new();
        if k <= n && k >= 2 {
            for set in (0u64..1 << n).filter(|s| s.count_ones() as usize == k) {
                let verts: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
                let s = codes.len() as u32;
                let mut code = 0u32;
                for (b, &(a, c)) in local_pairs.iter().enumerate() {
                    let (i, j) = (verts[a], verts[c]);
                    touching[index_of(i, j)].push((s, 1 << b));
                    if g.has_edge(i, j) {
                        code |= 1 << b;
                    }
                }
                codes.push(code);
            }
        }
        let hits = if k > n {
            0
        } else if k < 2 {
            // Every graph with at least k vertices contains E_0 or K_1.
            1
        } else {
            codes.iter().filter(|&&c| table.get(c)).count()
        };
        HitTracker {
            codes,
            touching,
            table,
            hits,
        }
    }

    pub(crate) fn toggle(&mut self, pair: usize) {
        for &(s, bit) in &self.touching[pair] {
            let code = &mut self.codes[s as usize];
            let was = self.table.get(*code);
            *code ^= bit;
            let now = self.table.get(*code);
            if was != now {
                if now {
                    self.hits += 1;
                } else {
                    self.hits -= 1;
                }
            }
        }
    }

    pub(crate) fn hits(&self) -> usize {
        self.hits
    }
}

/// Like [`enumerate_labeled_shard`], also reporting whether the visited graph
/// is `h`-free.
pub(crate) fn enumerate_with_hits(
    n: usize,
    shard_bits: u32,
    prefix: u64,
    h: &Graph,
    mut visit: impl FnMut(&Graph, u64, bool),
) -> Result<(), CensusError> {
    check_labeled_n(n)?;
    let pairs = edge_pairs(n);
    let m = pairs.len() as u32;
    if shard_bits > m {
        return Err(CensusError::BadShards { bits: shard_bits, edges: m });
    }
    let low = m - shard_bits;
    let mut mask = prefix << low;
    let mut g = Graph::from_edge_mask(n, mask);
    let mut tracker = HitTracker::new(h, &g);
    visit(&g, mask, tracker.hits() == 0);
    for step in 1u64..1 << low {
        let e = step.trailing_zeros();
        let (i, j) = pairs[e as usize];
        g.toggle_edge(i, j);
        tracker.toggle(e as usize);
        mask ^= 1 << e;
        visit(&g, mask, tracker.hits() == 0);
    }
    Ok(())
}
