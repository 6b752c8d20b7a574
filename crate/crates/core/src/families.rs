//! Hereditary graph families: named structural recognizers and families given
//! by a finite set of forbidden induced subgraphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{Graph, VertexSet};
use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};
use crate::subgraph::contains_induced;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family `{0}` has no finite forbidden induced subgraph basis")]
    NoFiniteBasis(NamedFamily),
    #[error("unknown family name `{0}`")]
    UnknownName(String),
    #[error("bad forbidden pattern: {0}")]
    BadPattern(#[from] Graph6Error),
}

/// The closed list of named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedFamily {
    Clique,
    /// All cliques together with `E_2`.
    CliqueOrE2,
    Stable,
    /// Complement has girth at least five: no induced `E_3` and no induced `2K_2`.
    CoGirth5,
    /// Complement is a disjoint union of stars and triangles.
    StarsTrianglesCo,
    /// Complement is a disjoint union of stars and cliques.
    StarsCliquesCo,
    /// Every complement component is the join of a clique and a stable set.
    SplitJoinComponentsCo,
    /// `P_4`-free.
    Cograph,
    CompleteMultipartite,
    DisjointCliques,
    /// Complements of matchings.
    CoMatching,
    /// Disjoint union of one clique and one stable set.
    CliqueUnionStable,
    Split,
    Bipartite,
    CoBipartite,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 15] = [
        NamedFamily::Clique,
        NamedFamily::CliqueOrE2,
        NamedFamily::Stable,
        NamedFamily::CoGirth5,
        NamedFamily::StarsTrianglesCo,
        NamedFamily::StarsCliquesCo,
        NamedFamily::SplitJoinComponentsCo,
        NamedFamily::Cograph,
        NamedFamily::CompleteMultipartite,
        NamedFamily::DisjointCliques,
        NamedFamily::CoMatching,
        NamedFamily::CliqueUnionStable,
        NamedFamily::Split,
        NamedFamily::Bipartite,
        NamedFamily::CoBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedFamily::Clique => "clique",
            NamedFamily::CliqueOrE2 => "clique-or-e2",
            NamedFamily::Stable => "stable",
            NamedFamily::CoGirth5 => "co-girth-5",
            NamedFamily::StarsTrianglesCo => "stars-triangles-co",
            NamedFamily::StarsCliquesCo => "stars-cliques-co",
            NamedFamily::SplitJoinComponentsCo => "split-join-components-co",
            NamedFamily::Cograph => "cograph",
            NamedFamily::CompleteMultipartite => "complete-multipartite",
            NamedFamily::DisjointCliques => "disjoint-cliques",
            NamedFamily::CoMatching => "co-matching",
            NamedFamily::CliqueUnionStable => "clique-union-stable",
            NamedFamily::Split => "split",
            NamedFamily::Bipartite => "bipartite",
            NamedFamily::CoBipartite => "co-bipartite",
        }
    }

    /// Direct structural recognizer.
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            NamedFamily::Clique => g.is_clique(),
            NamedFamily::CliqueOrE2 => g.is_clique() || (g.n() == 2 && g.is_stable()),
            NamedFamily::Stable => g.is_stable(),
            NamedFamily::CoGirth5 => has_girth_at_least_five(&g.complement()),
            NamedFamily::StarsTrianglesCo => complement_components_all(g, |h, c| {
                let s = c.len();
                s <= 3 || is_star(h, c)
            }),
            NamedFamily::StarsCliquesCo => {
                complement_components_all(g, |h, c| is_star(h, c) || h.is_clique_set(c))
            }
            NamedFamily::SplitJoinComponentsCo => complement_components_all(g, |h, c| {
                let s = c.len();
                let non_universal: VertexSet = c
                    .iter()
                    .filter(|&v| (h.row(v) & c.bits()).count_ones() as usize != s - 1)
                    .collect();
                h.is_stable_set(non_universal)
            }),
            NamedFamily::Cograph => is_cograph(g, g.vertices()),
            NamedFamily::CompleteMultipartite => {
                complement_components_all(g, |h, c| h.is_clique_set(c))
            }
            NamedFamily::DisjointCliques => g.components().into_iter().all(|c| g.is_clique_set(c)),
            NamedFamily::CoMatching => g.complement().max_degree() <= 1,
            NamedFamily::CliqueUnionStable => {
                let mut nontrivial = g.components().into_iter().filter(|c| c.len() > 1);
                match (nontrivial.next(), nontrivial.next()) {
                    (None, _) => true,
                    (Some(c), None) => g.is_clique_set(c),
                    _ => false,
                }
            }
            NamedFamily::Split => is_split(g),
            NamedFamily::Bipartite => is_bipartite(g),
            NamedFamily::CoBipartite => is_bipartite(&g.complement()),
        }
    }

    /// Minimal forbidden induced subgraphs, canonical and sorted.
    pub fn forbidden_basis(self) -> Result<Vec<Graph>, FamilyError> {
        use small::*;
        let basis = match self {
            NamedFamily::Clique => vec![e(2)],
            NamedFamily::CliqueOrE2 => vec![e(3), p3(), co_p3()],
            NamedFamily::Stable => vec![k(2)],
            NamedFamily::CoGirth5 => vec![e(3), two_k2()],
            NamedFamily::StarsTrianglesCo => {
                vec![p4(), two_k2(), p3_k1(), k2_e2(), e(4)]
            }
            NamedFamily::StarsCliquesCo => vec![p4(), two_k2(), p3_k1(), k2_e2()],
            NamedFamily::SplitJoinComponentsCo => vec![p4(), two_k2(), p3_k1()],
            NamedFamily::Cograph => vec![p4()],
            NamedFamily::CompleteMultipartite => vec![co_p3()],
            NamedFamily::DisjointCliques => vec![p3()],
            NamedFamily::CoMatching => vec![co_p3(), e(3)],
            NamedFamily::CliqueUnionStable => vec![p3(), two_k2()],
            NamedFamily::Split => vec![two_k2(), c(4), c(5)],
            NamedFamily::Bipartite | NamedFamily::CoBipartite => {
                return Err(FamilyError::NoFiniteBasis(self))
            }
        };
        Ok(normalize(basis))
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        NamedFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| FamilyError::UnknownName(s.to_string()))
    }
}

/// Small named graphs used by the tabulated bases.
pub mod small {
    use crate::graph::Graph;

    pub fn e(k: usize) -> Graph {
        Graph::empty(k)
    }
    pub fn k(k: usize) -> Graph {
        Graph::clique(k)
    }
    pub fn c(k: usize) -> Graph {
        Graph::cycle(k).expect("k >= 3")
    }
    pub fn p3() -> Graph {
        Graph::path(3)
    }
    pub fn p4() -> Graph {
        Graph::path(4)
    }
    /// `K_2 ∪ K_1`, the complement of `P_3`.
    pub fn co_p3() -> Graph {
        Graph::path(3).complement()
    }
    pub fn two_k2() -> Graph {
        Graph::from_edges(4, [(0, 1), (2, 3)]).expect("2K2")
    }
    pub fn p3_k1() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2)]).expect("P3+K1")
    }
    pub fn k2_e2() -> Graph {
        Graph::from_edges(4, [(0, 1)]).expect("K2+E2")
    }
}

/// A finite set of forbidden induced subgraphs, pairwise non-isomorphic and
/// stored canonically in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForbiddenSet(Vec<Graph>);

impl ForbiddenSet {
    pub fn new<I: IntoIterator<Item = Graph>>(patterns: I) -> Self {
        ForbiddenSet(normalize(patterns.into_iter().collect()))
    }

    pub fn patterns(&self) -> &[Graph] {
        &self.0
    }
}

fn normalize(patterns: Vec<Graph>) -> Vec<Graph> {
    let mut out: Vec<Graph> = patterns.iter().map(canonical_form).collect();
    out.sort_by(|a, b| (a.n(), a.edge_count(), a).cmp(&(b.n(), b.edge_count(), b)));
    out.dedup();
    out
}

/// A hereditary family: a named recognizer or a finite forbidden set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Named(NamedFamily),
    Forbidden(ForbiddenSet),
}

impl FamilySpec {
    pub fn forbidden<I: IntoIterator<Item = Graph>>(patterns: I) -> Self {
        FamilySpec::Forbidden(ForbiddenSet::new(patterns))
    }

    /// Finite basis; named families use their tabulated minimal basis.
    pub fn basis(&self) -> Result<Vec<Graph>, FamilyError> {
        match self {
            FamilySpec::Named(f) => f.forbidden_basis(),
            FamilySpec::Forbidden(set) => Ok(set.0.clone()),
        }
    }

    /// Parses a kebab-case family name or a comma-separated list of graph6
    /// patterns.
    pub fn parse(s: &str) -> Result<Self, FamilyError> {
        if let Ok(named) = s.parse::<NamedFamily>() {
            return Ok(FamilySpec::Named(named));
        }
        if s.contains(|c: char| c.is_ascii_lowercase()) && !s.contains(',') && s.contains('-') {
            return Err(FamilyError::UnknownName(s.to_string()));
        }
        let patterns = s
            .split(',')
            .map(|p| parse_graph6(p.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FamilySpec::forbidden(patterns))
    }

    /// Family name, or the forbidden patterns as comma-separated graph6.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Named(f) => f.name().to_string(),
            FamilySpec::Forbidden(set) => set
                .0
                .iter()
                .map(emit_graph6)
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

impl From<NamedFamily> for FamilySpec {
    fn from(f: NamedFamily) -> Self {
        FamilySpec::Named(f)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Named(n) => write!(f, "{n}"),
            FamilySpec::Forbidden(_) => write!(f, "forbid[{}]", self.label()),
        }
    }
}

/// Whether `g` belongs to the family.
pub fn member(f: &FamilySpec, g: &Graph) -> bool {
    match f {
        FamilySpec::Named(named) => named.contains(g),
        FamilySpec::Forbidden(set) => !set.0.iter().any(|p| contains_induced(g, p)),
    }
}

pub fn named_forbidden_basis(name: NamedFamily) -> Result<Vec<Graph>, FamilyError> {
    name.forbidden_basis()
}

/// Whether every graph of `a` lies in `b`: each forbidden pattern of `b`
/// must contain a forbidden pattern of `a`.
pub fn family_subset(a: &FamilySpec, b: &FamilySpec) -> Result<bool, FamilyError> {
    let basis_a = a.basis()?;
    let basis_b = b.basis()?;
    Ok(basis_b
        .iter()
        .all(|q| basis_a.iter().any(|p| contains_induced(q, p))))
}

/// Whether the family omits some bipartite graph, some co-bipartite graph and
/// some split graph; read off the forbidden basis.
pub fn is_restricted(f: &FamilySpec) -> Result<bool, FamilyError> {
    let basis = f.basis()?;
    Ok(basis.iter().any(is_bipartite)
        && basis.iter().any(|p| is_bipartite(&p.complement()))
        && basis.iter().any(is_split))
}

/// Whether the family contains every clique (no forbidden pattern is a clique).
pub fn contains_all_cliques(f: &FamilySpec) -> Result<bool, FamilyError> {
    Ok(!f.basis()?.iter().any(Graph::is_clique))
}

/// Whether the family contains every stable set.
pub fn contains_all_stable_sets(f: &FamilySpec) -> Result<bool, FamilyError> {
    Ok(!f.basis()?.iter().any(Graph::is_stable))
}

// Recognizers.

/// Applies `pred` to every component of the complement of `g`; `pred` gets the
/// complement and the component's vertex set.
fn complement_components_all(g: &Graph, pred: impl Fn(&Graph, VertexSet) -> bool) -> bool {
    let h = g.complement();
    h.components().into_iter().all(|c| pred(&h, c))
}

/// `K_{1,m}` for `m >= 0`, inside the component `c` of `h`.
fn is_star(h: &Graph, c: VertexSet) -> bool {
    let s = c.len();
    if s <= 2 {
        return true;
    }
    let degs: Vec<usize> = c
        .iter()
        .map(|v| (h.row(v) & c.bits()).count_ones() as usize)
        .collect();
    degs.iter().filter(|&&d| d == s - 1).count() == 1 && degs.iter().filter(|&&d| d == 1).count() == s - 1
}

fn has_girth_at_least_five(h: &Graph) -> bool {
    let n = h.n();
    for u in 0..n {
        for v in u + 1..n {
            let common = (h.row(u) & h.row(v)).count_ones();
            if common >= 2 || (common == 1 && h.has_edge(u, v)) {
                return false;
            }
        }
    }
    true
}

fn is_cograph(g: &Graph, within: VertexSet) -> bool {
    if within.len() <= 1 {
        return true;
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        return comps.into_iter().all(|c| is_cograph(g, c));
    }
    let h = g.complement();
    let co = h.components_within(within);
    if co.len() > 1 {
        return co.into_iter().all(|c| is_cograph(g, c));
    }
    false
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Degree-sequence test: with degrees `d_1 >= … >= d_n` and `m` the largest
/// index with `d_m >= m - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`.
pub fn is_split(g: &Graph) -> bool {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = d
        .iter()
        .enumerate()
        .filter(|&(i, &di)| di >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    head == m * m.saturating_sub(1) + tail
}

#[cfg(test)]
mod tests {
    use super::small::*;
    use super::*;

    fn star_plus_triangle_complement() -> Graph {
        Graph::star(3)
            .disjoint_union(&Graph::clique(3))
            .unwrap()
            .complement()
    }

    #[test]
    fn membership_examples() {
        assert!(member(&NamedFamily::CoGirth5.into(), &c(5)));
        assert!(!member(&NamedFamily::CoGirth5.into(), &two_k2()));
        assert!(member(
            &NamedFamily::StarsTrianglesCo.into(),
            &star_plus_triangle_complement()
        ));
        for mask in 0..8u64 {
            for n in 0..=3 {
                let g = Graph::from_edge_mask(n, mask & ((1 << (n * n.saturating_sub(1) / 2)) - 1));
                assert!(NamedFamily::SplitJoinComponentsCo.contains(&g));
            }
        }
    }

    #[test]
    fn empty_graph_is_in_every_family() {
        for f in NamedFamily::ALL {
            assert!(f.contains(&Graph::new(0)), "{f}");
            assert!(f.contains(&Graph::new(1)), "{f}");
        }
    }

    #[test]
    fn names_round_trip() {
        for f in NamedFamily::ALL {
            assert_eq!(f.name().parse::<NamedFamily>().unwrap(), f);
            assert_eq!(FamilySpec::parse(f.name()).unwrap(), FamilySpec::Named(f));
        }
        assert!(matches!(
            FamilySpec::parse("co-girth-6"),
            Err(FamilyError::UnknownName(_))
        ));
        let spec = FamilySpec::parse("Bw,B?").unwrap();
        assert_eq!(spec.basis().unwrap().len(), 2);
    }

    #[test]
    fn tabulated_bases() {
        let b = named_forbidden_basis(NamedFamily::CoGirth5).unwrap();
        assert_eq!(b, normalize(vec![e(3), two_k2()]));
        assert_eq!(named_forbidden_basis(NamedFamily::Cograph).unwrap(), normalize(vec![p4()]));
        assert_eq!(
            named_forbidden_basis(NamedFamily::Bipartite),
            Err(FamilyError::NoFiniteBasis(NamedFamily::Bipartite))
        );
    }

    #[test]
    fn subset_examples() {
        let clique = FamilySpec::Named(NamedFamily::Clique);
        let cograph = FamilySpec::Named(NamedFamily::Cograph);
        let cog5 = FamilySpec::Named(NamedFamily::CoGirth5);
        let stable = FamilySpec::Named(NamedFamily::Stable);
        assert!(family_subset(&clique, &cograph).unwrap());
        assert!(family_subset(&FamilySpec::forbidden([e(3), two_k2()]), &cog5).unwrap());
        assert!(!family_subset(&cog5, &stable).unwrap());
    }

    #[test]
    fn restricted_examples() {
        assert!(is_restricted(&FamilySpec::forbidden([e(3), two_k2()])).unwrap());
        assert!(is_restricted(&FamilySpec::forbidden([p4()])).unwrap());
        assert!(!is_restricted(&FamilySpec::forbidden([c(5)])).unwrap());
    }

    #[test]
    fn split_recognition() {
        assert!(is_split(&p4()));
        assert!(!is_split(&c(4)));
        assert!(!is_split(&two_k2()));
        assert!(!is_split(&c(5)));
        assert!(is_split(&Graph::star(4)));
        assert!(is_split(&Graph::clique(4).disjoint_union(&e(3)).unwrap()));
    }
}
