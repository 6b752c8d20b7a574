use serde::Serialize;

use crate::families::{family_subset, small, FamilySpec, NamedFamily};
use crate::graph::Graph;

use super::{is_really_canonical, is_witnessing_sequence, wpn, WitnessError, WitnessSequence};

/// Cycles with a classification of their really canonical sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SupportedCycle {
    C6,
    C8,
    C10,
    /// `C_{2l}` with `l > 5`.
    C2l(usize),
}

impl SupportedCycle {
    /// Recognizes `h` as one of the supported cycles.
    pub fn of(h: &Graph) -> Result<Self, WitnessError> {
        let n = h.n();
        let is_cycle = n >= 3 && (0..n).all(|v| h.degree(v) == 2) && h.is_connected();
        match (is_cycle, n) {
            (true, 6) => Ok(SupportedCycle::C6),
            (true, 8) => Ok(SupportedCycle::C8),
            (true, 10) => Ok(SupportedCycle::C10),
            (true, n) if n % 2 == 0 && n > 10 => Ok(SupportedCycle::C2l(n / 2)),
            _ => Err(WitnessError::Unsupported(
                "classification is available for C6, C8, C10 and C_2l with l > 5".into(),
            )),
        }
    }
}

/// Outcome of matching a sequence against the cases of its cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Classification {
    Case {
        /// 1-based case number within the cycle's list.
        case: usize,
        label: String,
        /// `slot_to_role[i]` is the case family that contains slot `i`.
        slot_to_role: Vec<usize>,
    },
    NoMatch,
}

fn clique_or_co_star() -> FamilySpec {
    // Cliques together with complements of stars, K_m + K_1.
    FamilySpec::forbidden([small::e(3), small::p3(), small::two_k2()])
}

fn clique_or_stable() -> FamilySpec {
    FamilySpec::forbidden([small::p3(), small::co_p3()])
}

/// The case list for a cycle: each case names one family per slot, up to
/// the order of the slots.
pub fn case_families(cycle: SupportedCycle) -> Vec<(String, Vec<FamilySpec>)> {
    use NamedFamily::*;
    let named = |f: NamedFamily| FamilySpec::Named(f);
    match cycle {
        SupportedCycle::C6 => vec![
            (
                "co-girth-5 and stable".into(),
                vec![named(CoGirth5), named(Stable)],
            ),
            (
                "cograph and cliques-or-E2".into(),
                vec![named(Cograph), named(CliqueOrE2)],
            ),
            (
                "complete multipartite and clique-or-co-star".into(),
                vec![named(CompleteMultipartite), clique_or_co_star()],
            ),
            (
                "co-matching and clique-union-stable".into(),
                vec![named(CoMatching), named(CliqueUnionStable)],
            ),
        ],
        SupportedCycle::C8 => vec![
            (
                "split-join-components-co and two cliques-or-E2".into(),
                vec![
                    named(SplitJoinComponentsCo),
                    named(CliqueOrE2),
                    named(CliqueOrE2),
                ],
            ),
            (
                "clique-or-stable, cliques-or-E2 and co-matching".into(),
                vec![clique_or_stable(), named(CliqueOrE2), named(CoMatching)],
            ),
        ],
        SupportedCycle::C10 => vec![(
            "stars-cliques-co and three cliques-or-E2".into(),
            std::iter::once(named(StarsCliquesCo))
                .chain(std::iter::repeat_n(named(CliqueOrE2), 3))
                .collect(),
        )],
        SupportedCycle::C2l(l) => vec![(
            format!("stars-triangles-co and {} cliques-or-E2", l - 2),
            std::iter::once(named(StarsTrianglesCo))
                .chain(std::iter::repeat_n(named(CliqueOrE2), l - 2))
                .collect(),
        )],
    }
}

/// Finds an assignment of slots to roles with `subset[slot][role]` true.
fn match_roles(subset: &[Vec<bool>]) -> Option<Vec<usize>> {
    fn rec(slot: usize, subset: &[Vec<bool>], used: &mut Vec<bool>, out: &mut Vec<usize>) -> bool {
        if slot == subset.len() {
            return true;
        }
        for role in 0..used.len() {
            if !used[role] && subset[slot][role] {
                used[role] = true;
                out.push(role);
                if rec(slot + 1, subset, used, out) {
                    return true;
                }
                out.pop();
                used[role] = false;
            }
        }
        false
    }
    let mut used = vec![false; subset.first().map_or(0, Vec::len)];
    let mut out = Vec::new();
    rec(0, subset, &mut used, &mut out).then_some(out)
}

/// Matches a really canonical witnessing `wpn(h)`-sequence of a supported
/// cycle `h` against the cycle's case list.
pub fn classify_sequence(h: &Graph, seq: &WitnessSequence) -> Result<Classification, WitnessError> {
    let cycle = SupportedCycle::of(h)?;
    let k = wpn(h);
    if seq.len() != k {
        return Err(WitnessError::ArityMismatch {
            expected: k,
            found: seq.len(),
        });
    }
    if !is_witnessing_sequence(h, seq) {
        return Err(WitnessError::NotWitnessing);
    }
    if !is_really_canonical(seq)? {
        return Err(WitnessError::NotReallyCanonical);
    }
    for (i, (label, roles)) in case_families(cycle).into_iter().enumerate() {
        let subset = seq
            .parts()
            .iter()
            .map(|f| {
                roles
                    .iter()
                    .map(|r| family_subset(f, r))
                    .collect::<Result<Vec<bool>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(slot_to_role) = match_roles(&subset) {
            return Ok(Classification::Case {
                case: i + 1,
                label,
                slot_to_role,
            });
        }
    }
    Ok(Classification::NoMatch)
}
