//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `n` vertices is generated from its parent, the graph left after
//! deleting the vertex in the last canonical position. Children of a parent
//! `P` add a vertex `v` joined to a subset of `V(P)`; a child is kept when `v`
//! lies in the automorphism orbit of the last canonical vertex. Distinct
//! parents then never share a child, and isomorphic children of one parent
//! are merged by their canonical form.

use std::collections::HashSet;

use crate::canon::{canonical_labeling, refine};
use crate::graph::Graph;

use super::CensusError;

pub const MAX_UNLABELED_N: usize = 10;

pub(crate) fn check_unlabeled_n(n: usize) -> Result<(), CensusError> {
    if n > MAX_UNLABELED_N {
        return Err(CensusError::TooLarge {
            n,
            max: MAX_UNLABELED_N,
            hint: "larger censuses are out of scope".into(),
        });
    }
    Ok(())
}

/// The canonical children of `parent`, which must be in canonical form.
pub fn canonical_children(parent: &Graph) -> Vec<Graph> {
    let m = parent.n();
    let n = m + 1;
    let v = m;
    let max_parent_degree = parent.max_degree();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..1 << m {
        let deg = s.count_ones() as usize;
        // The last canonical vertex has maximum degree.
        if deg < max_parent_degree {
            continue;
        }
        let mut rows: Vec<u64> = parent.rows().to_vec();
        for (u, row) in rows.iter_mut().enumerate() {
            if s >> u & 1 == 1 {
                *row |= 1 << v;
            }
        }
        rows.push(s);
        let child = Graph::from_rows(&rows).expect("at most 64 vertices");
        if (0..m).any(|u| child.degree(u) > deg) {
            continue;
        }
        let mut cells = vec![child.vertices().bits()];
        refine(&child, &mut cells, vec![child.vertices().bits()]);
        if cells.last().is_some_and(|c| c >> v & 1 == 0) {
            continue;
        }
        let canon = canonical_labeling(&child);
        if !canon.same_orbit(v, canon.labeling[n - 1]) {
            continue;
        }
        if seen.insert(canon.form.clone()) {
            out.push(canon.form);
        }
    }
    out
}

/// One canonical representative per isomorphism class on `n` vertices, in a
/// fixed order.
pub fn unlabeled_classes(n: usize) -> Result<Vec<Graph>, CensusError> {
    check_unlabeled_n(n)?;
    let mut level = vec![Graph::new(0)];
    for _ in 0..n {
        level = level.iter().flat_map(canonical_children).collect();
    }
    Ok(level)
}

/// Classes on `n` vertices whose parent index is `shard` modulo `shards`.
pub(crate) fn unlabeled_shard(n: usize, shards: usize, shard: usize) -> Result<Vec<Graph>, CensusError> {
    check_unlabeled_n(n)?;
    if n == 0 {
        return Ok(if shard == 0 { vec![Graph::new(0)] } else { Vec::new() });
    }
    let parents = unlabeled_classes(n - 1)?;
    Ok(parents
        .iter()
        .skip(shard)
        .step_by(shards)
        .flat_map(canonical_children)
        .collect())
}

/// `n! / |Aut(g)|`.
pub fn orbit_size(g: &Graph) -> u64 {
    let aut = canonical_labeling(g).group_order_u128().expect("n <= 10");
    let fact: u128 = (1..=g.n() as u128).product();
    (fact / aut) as u64
}

/// Visits one representative per class with its number of labeled copies.
pub fn enumerate_unlabeled(n: usize, mut visit: impl FnMut(&Graph, u64)) -> Result<(), CensusError> {
    for g in unlabeled_classes(n)? {
        visit(&g, orbit_size(&g));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let expect = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &c) in expect.iter().enumerate() {
            let classes = unlabeled_classes(n).unwrap();
            assert_eq!(classes.len(), c, "n = {n}");
            let total: u64 = classes.iter().map(orbit_size).sum();
            assert_eq!(total, 1 << (n * n.saturating_sub(1) / 2));
        }
    }

    #[test]
    fn complete_graph_has_one_copy() {
        assert_eq!(orbit_size(&Graph::clique(6)), 1);
        assert_eq!(orbit_size(&Graph::cycle(6).unwrap()), 60);
    }

    #[test]
    fn shards_partition_classes() {
        let all = unlabeled_classes(6).unwrap();
        let mut union: Vec<Graph> = (0..3).flat_map(|s| unlabeled_shard(6, 3, s).unwrap()).collect();
        assert_eq!(union.len(), all.len());
        let set: HashSet<Graph> = union.drain(..).collect();
        assert_eq!(set.len(), all.len());
    }
}
