//! Canonical labeling, automorphism group order and vertex orbits.
//!
//! The search is the classic individualization/refinement tree: the unit
//! partition is refined to an equitable ordered partition, the first
//! non-singleton cell is split by individualizing each of its vertices in turn,
//! and every discrete leaf yields a relabeling. The canonical form is the
//! lexicographically greatest relabeled adjacency among all leaves.
//!
//! Automorphisms are discovered when a leaf reproduces the first leaf's (or the
//! current best leaf's) adjacency. They prune siblings that lie in an orbit
//! already explored, and the orbit of each first-path vertex under the
//! pointwise stabilizer of its predecessors gives `|Aut(G)|` as a product.

use num_bigint::BigUint;

use crate::graph::{Graph, VertexSet};

/// Result of canonically labeling a graph.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// Canonical representative of the isomorphism class.
    pub form: Graph,
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// `orbits[v]` is the smallest vertex in the `Aut(G)`-orbit of `v`.
    pub orbits: Vec<usize>,
    orbit_lengths: Vec<usize>,
}

impl Canonical {
    /// `|Aut(G)|`.
    pub fn group_order(&self) -> BigUint {
        self.orbit_lengths
            .iter()
            .fold(BigUint::from(1u8), |acc, &l| acc * BigUint::from(l))
    }

    /// `|Aut(G)|` when it fits in 128 bits.
    pub fn group_order_u128(&self) -> Option<u128> {
        self.orbit_lengths
            .iter()
            .try_fold(1u128, |acc, &l| acc.checked_mul(l as u128))
    }

    /// Position of original vertex `v` in the canonical order.
    pub fn position(&self, v: usize) -> usize {
        self.labeling
            .iter()
            .position(|&u| u == v)
            .expect("vertex in range")
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.n();
    if n == 0 {
        return Canonical {
            form: Graph::new(0),
            labeling: Vec::new(),
            orbits: Vec::new(),
            orbit_lengths: Vec::new(),
        };
    }
    let mut cells = vec![g.vertices().bits()];
    refine(g, &mut cells, vec![g.vertices().bits()]);
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        first_path: Vec::new(),
        generators: Vec::new(),
        orbit_lengths: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    search.visit(cells, &mut path, true);

    let best = search.best.expect("at least one leaf");
    let form = Graph::from_rows(&best.rows).expect("same vertex count");
    let orbits = orbit_representatives(n, &search.generators, &[]);
    Canonical {
        form,
        labeling: best.lab,
        orbits,
        orbit_lengths: search.orbit_lengths,
    }
}

/// Isomorphism-invariant representative: equal for two graphs iff they are
/// isomorphic.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

#[derive(Clone)]
struct Leaf {
    lab: Vec<usize>,
    rows: Vec<u64>,
}

enum Outcome {
    Continue,
    /// Unwind to the first-path node at this level.
    Jump(usize),
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
    orbit_lengths: Vec<usize>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>, on_first_path: bool) -> Outcome {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let level = path.len();
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition");
        let cell = cells[target];
        let mut tried = 0u64;
        for w in VertexSet(cell) {
            if tried != 0 {
                let orbit = orbit_of(self.n, &self.generators, path, w);
                if orbit & tried != 0 {
                    continue;
                }
            }
            let is_first_child = tried == 0;
            tried |= 1 << w;
            let mut child = cells.clone();
            child[target] = 1 << w;
            child.insert(target + 1, cell & !(1 << w));
            refine(self.g, &mut child, vec![1 << w]);
            path.push(w);
            let out = self.visit(child, path, on_first_path && is_first_child);
            path.pop();
            if let Outcome::Jump(d) = out {
                if d < level {
                    return Outcome::Jump(d);
                }
            }
        }
        if on_first_path {
            let v = cell.trailing_zeros() as usize;
            let len = orbit_of(self.n, &self.generators, path, v).count_ones() as usize;
            if self.orbit_lengths.len() <= level {
                self.orbit_lengths.resize(level + 1, 1);
            }
            self.orbit_lengths[level] = len;
        }
        Outcome::Continue
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Outcome {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = lab
            .iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1 << pos[u])
            })
            .collect();
        let leaf = Leaf { lab, rows };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            self.first_path = path.to_vec();
            return Outcome::Continue;
        };
        if leaf.rows == first.rows {
            let gen = mapping(&first.lab, &leaf.lab);
            self.generators.push(gen);
            let d = path
                .iter()
                .zip(&self.first_path)
                .position(|(a, b)| a != b)
                .unwrap_or(path.len());
            return Outcome::Jump(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                let gen = mapping(&best.lab, &leaf.lab);
                self.generators.push(gen);
            }
            std::cmp::Ordering::Less => {}
        }
        Outcome::Continue
    }
}

/// Permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut perm = vec![0usize; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        perm[a] = b;
    }
    perm
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union_generators(n: usize, generators: &[Vec<usize>], fixed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for gen in generators {
        if fixed.iter().any(|&p| gen[p] != p) {
            continue;
        }
        for (v, &img) in gen.iter().enumerate() {
            let a = find(&mut parent, v);
            let b = find(&mut parent, img);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    parent
}

/// Orbit of `v` (as a mask) under the generators fixing `fixed` pointwise.
fn orbit_of(n: usize, generators: &[Vec<usize>], fixed: &[usize], v: usize) -> u64 {
    let mut parent = union_generators(n, generators, fixed);
    let root = find(&mut parent, v);
    (0..n)
        .filter(|&u| find(&mut parent, u) == root)
        .fold(0u64, |acc, u| acc | 1 << u)
}

fn orbit_representatives(n: usize, generators: &[Vec<usize>], fixed: &[usize]) -> Vec<usize> {
    let mut parent = union_generators(n, generators, fixed);
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition to the coarsest equitable refinement reachable
/// from the given splitters. Split cells are replaced in place by their pieces
/// ordered by increasing neighbour count.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: Vec<u64>) {
    let n = g.n();
    let mut head = 0;
    let mut counts = [0u32; 64];
    while head < queue.len() && cells.len() < n {
        let splitter = queue[head];
        head += 1;
        let mut c = 0;
        while c < cells.len() {
            let cell = cells[c];
            if cell & (cell - 1) == 0 {
                c += 1;
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for v in VertexSet(cell) {
                let k = (g.row(v) & splitter).count_ones();
                counts[v] = k;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                c += 1;
                continue;
            }
            let mut values: Vec<u32> = VertexSet(cell).iter().map(|v| counts[v]).collect();
            values.sort_unstable();
            values.dedup();
            let pieces: Vec<u64> = values
                .iter()
                .map(|&k| {
                    VertexSet(cell)
                        .iter()
                        .filter(|&v| counts[v] == k)
                        .fold(0u64, |acc, v| acc | 1 << v)
                })
                .collect();
            let k = pieces.len();
            cells.splice(c..=c, pieces.iter().copied());
            queue.extend(pieces);
            c += k;
        }
    }
}
