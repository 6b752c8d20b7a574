//! Witnessing partitions: `wpn`, witnessing sequences, certificates for the
//! cycle theorems, enumeration and classification of really canonical
//! sequences, and the finite cycle-partition claims.

mod certificate;
mod claims;
mod classify;
mod enumerate;
mod theorems;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyError, FamilySpec, NamedFamily};
use crate::graph::Graph;
use crate::partition::Partition;

pub use certificate::find_certificate;
pub use claims::{verify_cycle_partition_claims, ClaimItem, ClaimReport, ClaimStatus};
pub use classify::{classify_sequence, case_families, Classification, SupportedCycle};
pub use enumerate::{enumerate_really_canonical_sequences, EnumerationStats, Enumeration};
pub use theorems::{theorem_certifier, Theorem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("a witnessing sequence needs at least one family")]
    EmptySequence,
    #[error("the sequence is not witnessing for this graph")]
    NotWitnessing,
    #[error("the sequence is not really canonical")]
    NotReallyCanonical,
    #[error("expected {expected} families, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("the C_2l theorem needs l > 5, got l = {0}")]
    InvalidL(usize),
    #[error("budget of {budget} search steps exhausted")]
    BudgetExhausted { budget: u64 },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// An ordered list of hereditary families `(F_1, …, F_k)`, `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessSequence {
    parts: Vec<FamilySpec>,
}

impl WitnessSequence {
    pub fn new(parts: Vec<FamilySpec>) -> Result<Self, WitnessError> {
        if parts.is_empty() {
            return Err(WitnessError::EmptySequence);
        }
        Ok(WitnessSequence { parts })
    }

    pub fn named<I: IntoIterator<Item = NamedFamily>>(parts: I) -> Result<Self, WitnessError> {
        Self::new(parts.into_iter().map(FamilySpec::Named).collect())
    }

    pub fn parts(&self) -> &[FamilySpec] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.parts.iter().map(FamilySpec::label).collect()
    }
}

impl fmt::Display for WitnessSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A partition whose `i`-th part induces a member of the `i`-th family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub partition: Partition,
    pub sequence: WitnessSequence,
}

/// JSON form of a certificate: the parts as vertex lists with their families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub assignment: Vec<usize>,
    pub parts: Vec<CertificatePart>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificatePart {
    pub family: String,
    pub vertices: Vec<usize>,
}

impl PartitionCertificate {
    /// Re-checks every part against its family.
    pub fn verify(&self, g: &Graph) -> bool {
        self.partition.assignment().len() == g.n()
            && self.partition.arity() == self.sequence.len()
            && self
                .partition
                .parts()
                .iter()
                .zip(self.sequence.parts())
                .all(|(&part, f)| crate::families::member(f, &g.induced(part)))
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            assignment: self.partition.assignment().to_vec(),
            parts: self
                .partition
                .parts()
                .iter()
                .zip(self.sequence.parts())
                .map(|(part, f)| CertificatePart {
                    family: f.label(),
                    vertices: part.iter().collect(),
                })
                .collect(),
        }
    }
}

/// Whether `V(h)` splits into `c` cliques and `s` stable sets, empty parts
/// allowed.
pub fn clique_stable_partition_exists(h: &Graph, c: usize, s: usize) -> bool {
    if c + s == 0 {
        return h.n() == 0;
    }
    let seq = WitnessSequence::named(
        std::iter::repeat_n(NamedFamily::Clique, c)
            .chain(std::iter::repeat_n(NamedFamily::Stable, s)),
    )
    .expect("non-empty");
    find_certificate(h, &seq).is_some()
}

/// Largest `k` such that some `c + s = k` admits no partition into `c`
/// cliques and `s` stable sets. Zero for graphs on at most one vertex.
pub fn wpn(h: &Graph) -> usize {
    let n = h.n();
    for k in (1..n).rev() {
        if (0..=k).any(|c| !clique_stable_partition_exists(h, c, k - c)) {
            return k;
        }
    }
    0
}

/// No partition of `V(h)` into `k` parts puts every part inside its family.
pub fn is_witnessing_sequence(h: &Graph, seq: &WitnessSequence) -> bool {
    find_certificate(h, seq).is_none()
}

/// Each family contains all cliques or all stable sets.
pub fn is_really_canonical(seq: &WitnessSequence) -> Result<bool, FamilyError> {
    for f in seq.parts() {
        let basis = f.basis()?;
        let all_cliques = !basis.iter().any(Graph::is_clique);
        let all_stable = !basis.iter().any(Graph::is_stable);
        if !all_cliques && !all_stable {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::small::*;
    use NamedFamily::*;

    #[test]
    fn clique_stable_examples() {
        let c6 = c(6);
        assert!(clique_stable_partition_exists(&c6, 0, 2));
        assert!(!clique_stable_partition_exists(&c6, 2, 0));
        assert!(!clique_stable_partition_exists(&c(4), 1, 1));
        assert!(clique_stable_partition_exists(&c(3), 1, 1));
        assert!(clique_stable_partition_exists(&Graph::new(0), 0, 0));
    }

    #[test]
    fn wpn_small_cases() {
        assert_eq!(wpn(&c(6)), 2);
        assert_eq!(wpn(&c(7)), 3);
        assert_eq!(wpn(&c(10)), 4);
        assert_eq!(wpn(&Graph::new(1)), 0);
        assert_eq!(wpn(&k(2)), 1);
    }

    #[test]
    fn witnessing_examples() {
        let seq = WitnessSequence::named([Stable, CoGirth5]).unwrap();
        assert!(is_witnessing_sequence(&c(6), &seq));
        let two_stable = WitnessSequence::named([Stable, Stable]).unwrap();
        assert!(is_witnessing_sequence(&c(3), &two_stable));
        assert!(!is_witnessing_sequence(&c(4), &two_stable));
    }

    #[test]
    fn really_canonical_examples() {
        let seq = WitnessSequence::named([Stable, CoGirth5]).unwrap();
        assert!(is_really_canonical(&seq).unwrap());
        let bad = WitnessSequence::new(vec![
            FamilySpec::forbidden([k(2), e(2)]),
            FamilySpec::Named(Clique),
        ])
        .unwrap();
        assert!(!is_really_canonical(&bad).unwrap());
        let cs = WitnessSequence::named([Clique, Stable, Clique, Stable]).unwrap();
        assert!(is_really_canonical(&cs).unwrap());
        assert_eq!(WitnessSequence::new(vec![]), Err(WitnessError::EmptySequence));
    }

    #[test]
    fn certificate_examples() {
        let seq = WitnessSequence::named([Stable, CoGirth5]).unwrap();
        let two_triangles = k(3).disjoint_union(&k(3)).unwrap();
        assert!(find_certificate(&two_triangles, &seq).is_none());
        let cert = find_certificate(&c(5), &seq).expect("C5 certifiable");
        assert!(cert.verify(&c(5)));
        let cert = find_certificate(&e(5), &seq).expect("E5 certifiable");
        assert!(cert.verify(&e(5)));
    }
}
