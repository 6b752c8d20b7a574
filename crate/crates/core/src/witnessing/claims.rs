//! Finite partition facts about even cycles: `C_{2l}` splits into a prescribed
//! multiset of small induced graphs plus `a` edges and `b` non-edges.

use serde::{Deserialize, Serialize};

use crate::families::{small, NamedFamily};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::subgraph::contains_induced;

use super::{find_certificate, WitnessSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Found,
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimParameters {
    pub l: usize,
    /// Named shapes of the non-edge, non-K2 parts.
    pub shapes: Vec<String>,
    /// The same shapes in graph6.
    pub graphs: Vec<String>,
    pub edges: usize,
    pub non_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimItem {
    pub claim: String,
    pub parameters: ClaimParameters,
    pub status: ClaimStatus,
    pub expected: ClaimStatus,
    /// Part index of every cycle vertex, parts listed in the order of
    /// `shapes`, then the edges, then the non-edges.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub l: usize,
    pub cycle: String,
    /// Whether the partition claim is asserted for this `l` (it is for `l > 5`).
    pub claim_applies: bool,
    pub items: Vec<ClaimItem>,
    pub passed: bool,
}

/// Exhaustive search for a partition of `g` whose parts induce exactly the
/// given targets, in order. Target sizes must sum to `|V(g)|`.
pub fn partition_into(g: &Graph, targets: &[Graph]) -> Option<Vec<usize>> {
    if targets.iter().map(Graph::n).sum::<usize>() != g.n() {
        return None;
    }
    let n = g.n();
    let mut kinds: Vec<Graph> = Vec::new();
    let kind: Vec<usize> = targets
        .iter()
        .map(|t| {
            let f = crate::canon::canonical_form(t);
            kinds.iter().position(|k| *k == f).unwrap_or_else(|| {
                kinds.push(f);
                kinds.len() - 1
            })
        })
        .collect();
    let twin: Vec<Option<usize>> = (0..targets.len())
        .map(|i| (0..i).rev().find(|&j| kind[j] == kind[i]))
        .collect();
    let mut memo = vec![vec![0u8; 1 << n]; kinds.len()];
    let mut parts = vec![0u64; targets.len()];
    let mut assignment = vec![0usize; n];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        g: &Graph,
        targets: &[Graph],
        kind: &[usize],
        twin: &[Option<usize>],
        memo: &mut [Vec<u8>],
        parts: &mut [u64],
        assignment: &mut [usize],
    ) -> bool {
        if v == g.n() {
            return true;
        }
        for i in 0..targets.len() {
            if parts[i] == 0 && twin[i].is_some_and(|t| parts[t] == 0) {
                continue;
            }
            if parts[i].count_ones() as usize == targets[i].n() {
                continue;
            }
            let mask = parts[i] | 1 << v;
            let cell = &mut memo[kind[i]][mask as usize];
            if *cell == 0 {
                let ok = contains_induced(&targets[i], &g.induced(VertexSet(mask)));
                *cell = if ok { 1 } else { 2 };
            }
            if *cell == 2 {
                continue;
            }
            parts[i] = mask;
            assignment[v] = i;
            if rec(v + 1, g, targets, kind, twin, memo, parts, assignment) {
                return true;
            }
            parts[i] &= !(1 << v);
        }
        false
    }
    rec(0, g, targets, &kind, &twin, &mut memo, &mut parts, &mut assignment).then_some(assignment)
}

fn shape_item(claim: &str, l: usize, shapes: &[(&str, Graph)], a: usize, b: usize) -> ClaimItem {
    let cycle = Graph::cycle(2 * l).expect("l >= 2");
    let mut targets: Vec<Graph> = shapes.iter().map(|(_, g)| g.clone()).collect();
    targets.extend(std::iter::repeat_n(small::k(2), a));
    targets.extend(std::iter::repeat_n(small::e(2), b));
    let witness = partition_into(&cycle, &targets);
    ClaimItem {
        claim: claim.to_string(),
        parameters: ClaimParameters {
            l,
            shapes: shapes.iter().map(|(s, _)| s.to_string()).collect(),
            graphs: shapes.iter().map(|(_, g)| emit_graph6(g)).collect(),
            edges: a,
            non_edges: b,
        },
        status: if witness.is_some() {
            ClaimStatus::Found
        } else {
            ClaimStatus::NotFound
        },
        expected: ClaimStatus::Found,
        witness,
    }
}

/// Checks, for `C_{2l}`:
/// (a) an `L`, an `M` with `L, M ∈ {P3, co-P3, E3}`, `a` edges and `b`
///     non-edges for every `a + b = l - 3`;
/// (b) a `P4`, `a` edges and `b` non-edges for every `a + b = l - 2`;
/// (c) any 4-vertex graph with at most two edges, `a` edges and `b`
///     non-edges for every `a + b = l - 2`;
/// plus a control that must fail: `C_{2l}` into `l - 1` cliques.
///
/// The claim is asserted for `l > 5`; smaller `l >= 3` are reported as data.
pub fn verify_cycle_partition_claims(l: usize) -> ClaimReport {
    assert!(l >= 3, "C_2l needs l >= 3");
    let mut items = Vec::new();
    let three: [(&str, Graph); 3] = [
        ("P3", small::p3()),
        ("co-P3", small::co_p3()),
        ("E3", small::e(3)),
    ];
    for i in 0..3 {
        for j in i..3 {
            for a in 0..=l - 3 {
                items.push(shape_item(
                    "partition-a",
                    l,
                    &[three[i].clone(), three[j].clone()],
                    a,
                    l - 3 - a,
                ));
            }
        }
    }
    for a in 0..=l - 2 {
        items.push(shape_item("partition-b", l, &[("P4", small::p4())], a, l - 2 - a));
    }
    let four: [(&str, Graph); 4] = [
        ("E4", small::e(4)),
        ("K2+E2", small::k2_e2()),
        ("2K2", small::two_k2()),
        ("P3+K1", small::p3_k1()),
    ];
    for shape in &four {
        for a in 0..=l - 2 {
            items.push(shape_item("partition-c", l, std::slice::from_ref(shape), a, l - 2 - a));
        }
    }

    let cycle = Graph::cycle(2 * l).expect("l >= 3");
    let cliques = WitnessSequence::named(std::iter::repeat_n(NamedFamily::Clique, l - 1))
        .expect("l - 1 >= 1");
    let control = find_certificate(&cycle, &cliques);
    items.push(ClaimItem {
        claim: "control-cliques".into(),
        parameters: ClaimParameters {
            l,
            shapes: vec![format!("{} cliques", l - 1)],
            graphs: vec![emit_graph6(&small::k(2))],
            edges: 0,
            non_edges: 0,
        },
        status: if control.is_some() {
            ClaimStatus::Found
        } else {
            ClaimStatus::NotFound
        },
        expected: ClaimStatus::NotFound,
        witness: control.map(|c| c.partition.assignment().to_vec()),
    });

    let passed = items.iter().all(|i| i.status == i.expected);
    ClaimReport {
        l,
        cycle: emit_graph6(&cycle),
        claim_applies: l > 5,
        items,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_cycle_examples() {
        let report = verify_cycle_partition_claims(6);
        let e3e3 = report
            .items
            .iter()
            .find(|i| {
                i.claim == "partition-a"
                    && i.parameters.shapes == ["E3", "E3"]
                    && i.parameters.edges == 3
            })
            .unwrap();
        assert_eq!(e3e3.status, ClaimStatus::Found);
        let p4 = report
            .items
            .iter()
            .find(|i| i.claim == "partition-b" && i.parameters.non_edges == 4)
            .unwrap();
        assert_eq!(p4.status, ClaimStatus::Found);
        let control = report.items.last().unwrap();
        assert_eq!(control.status, ClaimStatus::NotFound);
        assert!(report.passed);
    }

    #[test]
    fn witnesses_realize_their_shapes() {
        let report = verify_cycle_partition_claims(6);
        let cycle = Graph::cycle(12).unwrap();
        for item in report.items.iter().filter(|i| i.claim != "control-cliques") {
            let w = item.witness.as_ref().unwrap();
            let shapes = item.parameters.graphs.len();
            let arity = shapes + item.parameters.edges + item.parameters.non_edges;
            for part in 0..arity {
                let set: VertexSet = (0..12).filter(|&v| w[v] == part).collect();
                let induced = cycle.induced(set);
                let expect = if part < shapes {
                    crate::graph6::parse_graph6(&item.parameters.graphs[part]).unwrap()
                } else if part < shapes + item.parameters.edges {
                    small::k(2)
                } else {
                    small::e(2)
                };
                assert!(crate::canon::is_isomorphic(&induced, &expect));
            }
        }
    }

    #[test]
    fn size_mismatch_is_not_found() {
        assert_eq!(partition_into(&Graph::cycle(6).unwrap(), &[small::k(2)]), None);
    }
}
