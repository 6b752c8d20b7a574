use std::fmt;
use std::str::FromStr;

use crate::families::NamedFamily;
use crate::graph::Graph;

use super::{find_certificate, PartitionCertificate, WitnessError, WitnessSequence};

/// The four structural partition theorems for even cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// A stable set and a co-girth-5 graph.
    C6,
    /// Two cliques and a graph whose complement components are clique-stable joins.
    C8,
    /// Three cliques and the complement of a union of stars and cliques.
    C10,
    /// `l - 2` cliques and the complement of a union of stars and triangles.
    C2l(usize),
}

impl Theorem {
    pub fn c2l(l: usize) -> Result<Self, WitnessError> {
        if l <= 5 {
            return Err(WitnessError::InvalidL(l));
        }
        Ok(Theorem::C2l(l))
    }

    fn validate(self) -> Result<Self, WitnessError> {
        match self {
            Theorem::C2l(l) => Theorem::c2l(l),
            t => Ok(t),
        }
    }

    /// Length of the cycle the theorem is about.
    pub fn cycle_length(self) -> usize {
        match self {
            Theorem::C6 => 6,
            Theorem::C8 => 8,
            Theorem::C10 => 10,
            Theorem::C2l(l) => 2 * l,
        }
    }

    pub fn forbidden(self) -> Graph {
        Graph::cycle(self.cycle_length()).expect("cycle length at least 6")
    }

    pub fn sequence(self) -> Result<WitnessSequence, WitnessError> {
        use NamedFamily::*;
        let parts: Vec<NamedFamily> = match self.validate()? {
            Theorem::C6 => vec![CoGirth5, Stable],
            Theorem::C8 => vec![SplitJoinComponentsCo, Clique, Clique],
            Theorem::C10 => vec![StarsCliquesCo, Clique, Clique, Clique],
            Theorem::C2l(l) => std::iter::once(StarsTrianglesCo)
                .chain(std::iter::repeat_n(Clique, l - 2))
                .collect(),
        };
        WitnessSequence::named(parts)
    }

    pub fn id(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::C6 => f.write_str("c6"),
            Theorem::C8 => f.write_str("c8"),
            Theorem::C10 => f.write_str("c10"),
            Theorem::C2l(l) => write!(f, "c2l:{l}"),
        }
    }
}

impl FromStr for Theorem {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, WitnessError> {
        match s {
            "c6" => Ok(Theorem::C6),
            "c8" => Ok(Theorem::C8),
            "c10" => Ok(Theorem::C10),
            _ => {
                let l = s
                    .strip_prefix("c2l:")
                    .and_then(|l| l.parse::<usize>().ok())
                    .ok_or_else(|| {
                        WitnessError::Unsupported(format!(
                            "unknown theorem `{s}`, expected c6, c8, c10 or c2l:<l>"
                        ))
                    })?;
                Theorem::c2l(l)
            }
        }
    }
}

/// A partition of `g` certified by the theorem's witnessing sequence.
pub fn theorem_certifier(
    g: &Graph,
    theorem: Theorem,
) -> Result<Option<PartitionCertificate>, WitnessError> {
    let seq = theorem.sequence()?;
    Ok(find_certificate(g, &seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnessing::is_witnessing_sequence;

    #[test]
    fn parse_and_validate() {
        assert_eq!("c6".parse::<Theorem>().unwrap(), Theorem::C6);
        assert_eq!("c2l:6".parse::<Theorem>().unwrap(), Theorem::C2l(6));
        assert_eq!("c2l:5".parse::<Theorem>(), Err(WitnessError::InvalidL(5)));
        assert!("c7".parse::<Theorem>().is_err());
        assert_eq!(
            theorem_certifier(&Graph::new(3), Theorem::C2l(4)),
            Err(WitnessError::InvalidL(4))
        );
    }

    #[test]
    fn certifier_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(theorem_certifier(&c6, Theorem::C6).unwrap().is_none());
        let cert = theorem_certifier(&Graph::clique(7), Theorem::C8)
            .unwrap()
            .expect("K7 fits one clique part");
        assert!(cert.verify(&Graph::clique(7)));
        let two_triangles = Graph::clique(3).disjoint_union(&Graph::clique(3)).unwrap();
        assert!(theorem_certifier(&two_triangles, Theorem::C6).unwrap().is_none());
    }

    #[test]
    fn theorem_sequences_witness_their_cycles() {
        for t in [Theorem::C6, Theorem::C8, Theorem::C10, Theorem::C2l(6)] {
            assert!(is_witnessing_sequence(&t.forbidden(), &t.sequence().unwrap()), "{t}");
        }
    }
}
