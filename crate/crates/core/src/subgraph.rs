//! Induced-subgraph containment by backtracking over injective maps.

use crate::graph::{Graph, VertexSet};

/// A pattern prepared for repeated containment queries.
#[derive(Debug, Clone)]
pub struct Pattern {
    graph: Graph,
    /// Pattern vertices by decreasing degree, ties by index.
    order: Vec<usize>,
    /// For position `i`, the positions `j < i` whose vertices are adjacent.
    earlier_adjacent: Vec<u64>,
    degree: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        let earlier_adjacent = (0..n)
            .map(|i| {
                (0..i)
                    .filter(|&j| graph.has_edge(order[i], order[j]))
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        let degree = order.iter().map(|&v| graph.degree(v)).collect();
        Pattern {
            graph: graph.clone(),
            order,
            earlier_adjacent,
            degree,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Whether `g` has an induced subgraph isomorphic to the pattern.
    pub fn occurs_in(&self, g: &Graph) -> bool {
        self.occurs_within(g, g.vertices())
    }

    /// Containment restricted to the subgraph of `g` induced by `within`.
    pub fn occurs_within(&self, g: &Graph, within: VertexSet) -> bool {
        let m = self.graph.n();
        let n = within.len();
        if m > n {
            return false;
        }
        if m == 0 {
            return true;
        }
        let w = within.bits();
        let mut deg = [0usize; 64];
        for v in within {
            deg[v] = (g.row(v) & w).count_ones() as usize;
        }
        let mut image = vec![0usize; m];
        self.extend(g, w, n, &deg, &mut image, 0, 0)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        g: &Graph,
        within: u64,
        n: usize,
        deg: &[usize; 64],
        image: &mut [usize],
        depth: usize,
        used: u64,
    ) -> bool {
        let m = self.order.len();
        if depth == m {
            return true;
        }
        let mut cand = within & !used;
        let adj_mask = self.earlier_adjacent[depth];
        for (j, &u) in image.iter().enumerate().take(depth) {
            if adj_mask >> j & 1 == 1 {
                cand &= g.row(u);
            } else {
                cand &= !g.row(u);
            }
        }
        let need_deg = self.degree[depth];
        let need_codeg = m - 1 - need_deg;
        for v in VertexSet(cand) {
            if deg[v] < need_deg || n - 1 - deg[v] < need_codeg {
                continue;
            }
            image[depth] = v;
            if self.extend(g, within, n, deg, image, depth + 1, used | 1 << v) {
                return true;
            }
        }
        false
    }
}

/// Whether `g` contains an induced copy of `h`. The 0-vertex pattern is
/// contained in every graph.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    Pattern::new(h).occurs_in(g)
}
