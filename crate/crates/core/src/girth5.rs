//! Girth and the statistics used for graphs of girth at least five.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`s_statistic`].
pub const S_STATISTIC_MAX_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("s_statistic supports at most {S_STATISTIC_MAX_N} vertices, got {0}")]
pub struct TooLarge(pub usize);

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Maximum `|S|` over stable sets `S` such that no vertex has two neighbours
/// in `S`, i.e. a maximum stable set of the square of `g`.
pub fn s_statistic(g: &Graph) -> Result<usize, TooLarge> {
    let n = g.n();
    if n > S_STATISTIC_MAX_N {
        return Err(TooLarge(n));
    }
    let conflict: Vec<u64> = (0..n)
        .map(|v| {
            let mut c = g.row(v);
            for u in g.neighbors(v) {
                c |= g.row(u);
            }
            c & !(1 << v)
        })
        .collect();
    let mut best = 0;
    mis(&conflict, g.vertices().bits(), 0, &mut best);
    Ok(best)
}

fn mis(conflict: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // Branch on a vertex of maximum conflict degree inside the candidates.
    let v = VertexSet(cand)
        .iter()
        .max_by_key(|&v| (conflict[v] & cand).count_ones())
        .expect("non-empty");
    if conflict[v] & cand == 0 {
        // Every candidate is isolated in the conflict graph.
        *best = (*best).max(size + cand.count_ones() as usize);
        return;
    }
    mis(conflict, cand & !conflict[v] & !(1 << v), size + 1, best);
    mis(conflict, cand & !(1 << v), size, best);
}

/// At most `sqrt(n)` vertices have degree above `3 sqrt(n) / 2`, and those
/// vertices have total degree at most `3n / 2`. Evaluated in integers.
pub fn heavy_degree_check(g: &Graph) -> bool {
    let n = g.n();
    let heavy: Vec<usize> = (0..n)
        .map(|v| g.degree(v))
        .filter(|&d| 4 * d * d > 9 * n)
        .collect();
    let count = heavy.len();
    let sum: usize = heavy.iter().sum();
    count * count <= n && 2 * sum <= 3 * n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_s(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&s| {
                let set = VertexSet(s);
                g.is_stable_set(set) && (0..n).all(|v| (g.row(v) & s).count_ones() <= 1)
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(5).unwrap()), Some(5));
        assert_eq!(girth(&Graph::path(4)), None);
        assert_eq!(girth(&Graph::clique(4)), Some(3));
        assert_eq!(girth(&Graph::cycle(9).unwrap()), Some(9));
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(girth(&petersen), Some(5));
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_statistic(&Graph::empty(4)).unwrap(), 4);
        assert_eq!(s_statistic(&Graph::cycle(5).unwrap()), Ok(1));
        assert_eq!(s_statistic(&Graph::new(0)), Ok(0));
        assert_eq!(s_statistic(&Graph::new(25)), Err(TooLarge(25)));
    }

    #[test]
    fn s_matches_subset_oracle() {
        for mask in (0..1u64 << 15).step_by(97) {
            let g = Graph::from_edge_mask(6, mask);
            assert_eq!(s_statistic(&g).unwrap(), brute_s(&g), "{g}");
        }
    }

    #[test]
    fn heavy_check_examples() {
        assert!(heavy_degree_check(&Graph::cycle(8).unwrap()));
        // Star on 16 vertices: a single heavy vertex, degree 15 <= 3n/2 = 24.
        assert!(heavy_degree_check(&Graph::star(15)));
        assert!(!heavy_degree_check(&Graph::clique(9)));
    }
}
