use std::collections::HashMap;

use crate::canon::canonical_form;
use crate::families::{member, FamilySpec, NamedFamily};
use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;

use super::{PartitionCertificate, WitnessSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    Clique,
    Stable,
    General,
}

fn kind(f: &FamilySpec) -> Kind {
    match f {
        FamilySpec::Named(NamedFamily::Clique) => Kind::Clique,
        FamilySpec::Named(NamedFamily::Stable) => Kind::Stable,
        FamilySpec::Forbidden(set) => match set.patterns() {
            [p] if *p == canonical_form(&Graph::empty(2)) => Kind::Clique,
            [p] if *p == canonical_form(&Graph::clique(2)) => Kind::Stable,
            _ => Kind::General,
        },
        FamilySpec::Named(_) => Kind::General,
    }
}

/// Membership cache for one general slot, keyed by vertex mask.
enum Memo {
    Dense(Vec<u8>),
    Sparse(HashMap<u64, bool>),
}

impl Memo {
    fn new(n: usize) -> Self {
        if n <= 16 {
            Memo::Dense(vec![0; 1 << n])
        } else {
            Memo::Sparse(HashMap::new())
        }
    }

    fn get_or(&mut self, mask: u64, compute: impl FnOnce() -> bool) -> bool {
        match self {
            Memo::Dense(v) => match v[mask as usize] {
                1 => true,
                2 => false,
                _ => {
                    let r = compute();
                    v[mask as usize] = if r { 1 } else { 2 };
                    r
                }
            },
            Memo::Sparse(m) => *m.entry(mask).or_insert_with(compute),
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    families: &'a [FamilySpec],
    /// Slot indices in the order they are tried: cliques, stables, the rest.
    order: Vec<usize>,
    kinds: Vec<Kind>,
    /// Previous slot in `order` with an identical family, if any.
    twin: Vec<Option<usize>>,
    memo: Vec<Option<Memo>>,
    /// Whether the family admits the 0-vertex graph.
    empty_ok: Vec<bool>,
    parts: Vec<u64>,
    assignment: Vec<usize>,
}

impl Search<'_> {
    fn fits(&mut self, slot: usize, v: usize) -> bool {
        let part = self.parts[slot];
        match self.kinds[slot] {
            Kind::Clique => part & !self.g.row(v) == 0,
            Kind::Stable => part & self.g.row(v) == 0,
            Kind::General => {
                let mask = part | 1 << v;
                let g = self.g;
                let f = &self.families[slot];
                self.memo[slot]
                    .as_mut()
                    .expect("general slot memo")
                    .get_or(mask, || member(f, &g.induced(VertexSet(mask))))
            }
        }
    }

    fn place(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return (0..self.parts.len()).all(|i| self.parts[i] != 0 || self.empty_ok[i]);
        }
        for idx in 0..self.order.len() {
            let slot = self.order[idx];
            if self.parts[slot] == 0 {
                if let Some(t) = self.twin[slot] {
                    if self.parts[t] == 0 {
                        continue;
                    }
                }
            }
            if !self.fits(slot, v) {
                continue;
            }
            self.parts[slot] |= 1 << v;
            self.assignment[v] = slot;
            if self.place(v + 1) {
                return true;
            }
            self.parts[slot] &= !(1 << v);
        }
        false
    }
}

/// Searches for a partition of `V(g)` whose `i`-th part induces a member of
/// the `i`-th family, placing vertices one by one and never extending a part
/// that already left its family.
pub fn find_certificate(g: &Graph, seq: &WitnessSequence) -> Option<PartitionCertificate> {
    let families = seq.parts();
    let k = families.len();
    let kinds: Vec<Kind> = families.iter().map(kind).collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (kinds[i], i));
    let mut twin = vec![None; k];
    for (pos, &slot) in order.iter().enumerate() {
        twin[slot] = order[..pos]
            .iter()
            .rev()
            .find(|&&prev| families[prev] == families[slot])
            .copied();
    }
    let memo = kinds
        .iter()
        .map(|&kd| (kd == Kind::General).then(|| Memo::new(g.n())))
        .collect();
    let mut search = Search {
        g,
        families,
        order,
        kinds,
        twin,
        memo,
        empty_ok: families.iter().map(|f| member(f, &Graph::new(0))).collect(),
        parts: vec![0; k],
        assignment: vec![0; g.n()],
    };
    if !search.place(0) {
        return None;
    }
    let partition = Partition::new(k, search.assignment).expect("slots below arity");
    let cert = PartitionCertificate {
        partition,
        sequence: seq.clone(),
    };
    Some(cert)
}
