use std::collections::BTreeSet;

use proptest::prelude::*;
use wpn_core::census::unlabeled_classes;
use wpn_core::families::{family_subset, is_bipartite, is_restricted, is_split, member, small, FamilySpec, NamedFamily};
use wpn_core::{canonical_form, contains_induced, girth, Graph, VertexSet};

fn classes_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(|k| unlabeled_classes(k).unwrap()).collect()
}

fn finite_basis() -> impl Iterator<Item = NamedFamily> {
    NamedFamily::ALL
        .into_iter()
        .filter(|f| !matches!(f, NamedFamily::Bipartite | NamedFamily::CoBipartite))
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet)
}

fn brute_bipartite(g: &Graph) -> bool {
    let full = g.vertices().bits();
    subsets(g.n()).any(|s| g.is_stable_set(s) && g.is_stable_set(VertexSet(full & !s.bits())))
}

fn brute_split(g: &Graph) -> bool {
    let full = g.vertices().bits();
    subsets(g.n()).any(|s| g.is_clique_set(s) && g.is_stable_set(VertexSet(full & !s.bits())))
}

/// Every component of `h`, tested by `shape(component graph)`.
fn components_are(h: &Graph, shape: impl Fn(&Graph) -> bool) -> bool {
    h.components().into_iter().all(|c| shape(&h.induced(c)))
}

fn is_star(c: &Graph) -> bool {
    let s = c.n();
    s <= 2 || (c.edge_count() == s - 1 && c.max_degree() == s - 1)
}

/// A connected graph that is a clique joined to a stable set.
fn is_clique_stable_join(c: &Graph) -> bool {
    let full = c.vertices().bits();
    subsets(c.n()).any(|a| {
        let b = VertexSet(full & !a.bits());
        c.is_clique_set(a) && c.is_stable_set(b) && a.iter().all(|u| b.iter().all(|v| c.has_edge(u, v)))
    })
}

/// Membership from the definitions, independent of the library recognizers.
fn definition(f: NamedFamily, g: &Graph) -> bool {
    let co = g.complement();
    match f {
        NamedFamily::Clique => g.edge_count() * 2 == g.n() * g.n().saturating_sub(1),
        NamedFamily::CliqueOrE2 => definition(NamedFamily::Clique, g) || (g.n() == 2 && g.edge_count() == 0),
        NamedFamily::Stable => g.edge_count() == 0,
        NamedFamily::CoGirth5 => girth(&co).is_none_or(|k| k >= 5),
        NamedFamily::StarsTrianglesCo => components_are(&co, |c| is_star(c) || (c.n() == 3 && c.edge_count() == 3)),
        NamedFamily::StarsCliquesCo => components_are(&co, |c| is_star(c) || c.is_clique()),
        NamedFamily::SplitJoinComponentsCo => components_are(&co, is_clique_stable_join),
        NamedFamily::Cograph => !contains_induced(g, &Graph::path(4)),
        NamedFamily::CompleteMultipartite => components_are(&co, Graph::is_clique),
        NamedFamily::DisjointCliques => components_are(g, Graph::is_clique),
        NamedFamily::CoMatching => (0..g.n()).all(|v| co.degree(v) <= 1),
        NamedFamily::CliqueUnionStable => {
            let full = g.vertices().bits();
            subsets(g.n()).any(|a| {
                let b = VertexSet(full & !a.bits());
                g.is_clique_set(a) && g.is_stable_set(b) && a.iter().all(|u| b.iter().all(|v| !g.has_edge(u, v)))
            })
        }
        NamedFamily::Split => brute_split(g),
        NamedFamily::Bipartite => brute_bipartite(g),
        NamedFamily::CoBipartite => brute_bipartite(&co),
    }
}

#[test]
fn recognizers_match_definitions() {
    for g in classes_up_to(7) {
        for f in NamedFamily::ALL {
            assert_eq!(member(&f.into(), &g), definition(f, &g), "{f} on {g:?}");
        }
    }
}

#[test]
fn recognizers_match_on_all_labeled_five_vertex_graphs() {
    for mask in 0u64..1 << 10 {
        let g = Graph::from_edge_mask(5, mask);
        for f in NamedFamily::ALL {
            assert_eq!(member(&f.into(), &g), definition(f, &g), "{f} on mask {mask}");
        }
    }
}

#[test]
fn named_families_are_hereditary() {
    for g in classes_up_to(6) {
        for f in NamedFamily::ALL {
            let spec = FamilySpec::from(f);
            if !member(&spec, &g) {
                continue;
            }
            for s in subsets(g.n()) {
                assert!(member(&spec, &g.induced(s)), "{f}: {g:?} minus vertices");
            }
        }
    }
}

/// Minimal non-members on at most `n` vertices: every one-vertex deletion
/// is a member.
fn minimal_non_members(f: NamedFamily, n: usize) -> BTreeSet<Graph> {
    let spec = FamilySpec::from(f);
    classes_up_to(n)
        .into_iter()
        .filter(|g| !member(&spec, g))
        .filter(|g| {
            let full = g.vertices();
            full.iter().all(|v| member(&spec, &g.induced(full.difference(VertexSet::singleton(v)))))
        })
        .map(|g| canonical_form(&g))
        .collect()
}

#[test]
fn tabulated_bases_are_the_minimal_non_members() {
    for f in finite_basis() {
        let tabulated: BTreeSet<Graph> = f.forbidden_basis().unwrap().into_iter().collect();
        assert_eq!(minimal_non_members(f, 6), tabulated, "{f}");
    }
}

#[test]
fn bases_define_the_families_up_to_seven_vertices() {
    let graphs = classes_up_to(7);
    for f in finite_basis() {
        let by_basis = FamilySpec::forbidden(f.forbidden_basis().unwrap());
        for g in &graphs {
            assert_eq!(member(&f.into(), g), member(&by_basis, g), "{f} on {g:?}");
        }
    }
}

#[test]
fn infinite_bases_are_rejected() {
    for f in [NamedFamily::Bipartite, NamedFamily::CoBipartite] {
        assert!(f.forbidden_basis().is_err());
        assert!(family_subset(&f.into(), &NamedFamily::Clique.into()).is_err());
    }
    // Odd cycles are all minimal non-bipartite graphs.
    for k in [3, 5, 7] {
        let odd = Graph::cycle(k).unwrap();
        assert!(minimal_non_members(NamedFamily::Bipartite, 7).contains(&canonical_form(&odd)));
    }
}

#[test]
fn subset_agrees_with_exhaustive_containment() {
    let graphs = classes_up_to(6);
    let mut specs: Vec<FamilySpec> = finite_basis().map(FamilySpec::from).collect();
    specs.push(FamilySpec::forbidden([small::p3(), small::co_p3()]));
    specs.push(FamilySpec::forbidden([small::e(3), small::p3(), small::two_k2()]));
    specs.push(FamilySpec::forbidden([small::e(3), small::two_k2(), small::p4()]));
    for a in &specs {
        for b in &specs {
            let exhaustive = graphs.iter().all(|g| !member(a, g) || member(b, g));
            assert_eq!(family_subset(a, b).unwrap(), exhaustive, "{a} in {b}");
        }
    }
}

#[test]
fn membership_examples() {
    let c5 = Graph::cycle(5).unwrap();
    assert!(member(&NamedFamily::CoGirth5.into(), &c5));
    assert!(!member(&NamedFamily::CoGirth5.into(), &small::two_k2()));
    let star_triangle = Graph::star(3).disjoint_union(&Graph::clique(3)).unwrap();
    assert!(member(&NamedFamily::StarsTrianglesCo.into(), &star_triangle.complement()));
    for g in classes_up_to(3) {
        assert!(member(&NamedFamily::SplitJoinComponentsCo.into(), &g));
    }
}

#[test]
fn subset_and_restriction_examples() {
    let clique = FamilySpec::from(NamedFamily::Clique);
    let cograph = FamilySpec::from(NamedFamily::Cograph);
    let co_girth = FamilySpec::from(NamedFamily::CoGirth5);
    let e3_2k2 = FamilySpec::forbidden([small::e(3), small::two_k2()]);
    assert!(family_subset(&clique, &cograph).unwrap());
    assert!(family_subset(&e3_2k2, &co_girth).unwrap());
    assert!(!family_subset(&co_girth, &NamedFamily::Stable.into()).unwrap());
    assert!(is_restricted(&e3_2k2).unwrap());
    assert!(is_restricted(&FamilySpec::forbidden([small::p4()])).unwrap());
    assert!(!is_restricted(&FamilySpec::forbidden([Graph::cycle(5).unwrap()])).unwrap());
}

#[test]
fn bipartite_and_split_recognizers() {
    for g in classes_up_to(7) {
        assert_eq!(is_bipartite(&g), brute_bipartite(&g));
        assert_eq!(is_split(&g), brute_split(&g));
    }
}

#[test]
fn family_names_round_trip() {
    for f in NamedFamily::ALL {
        assert_eq!(f.name().parse::<NamedFamily>().unwrap(), f);
        assert_eq!(FamilySpec::parse(f.name()).unwrap(), FamilySpec::Named(f));
    }
    let spec = FamilySpec::parse("Bw,A_").unwrap();
    assert_eq!(spec, FamilySpec::forbidden([Graph::clique(3), Graph::clique(2)]));
    assert!(FamilySpec::parse("no-such-family").is_err());
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << m))
    })
    .prop_map(|(n, mask)| Graph::from_edge_mask(n, mask))
}

proptest! {
    #[test]
    fn membership_ignores_labels(g in arb_graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        for f in NamedFamily::ALL {
            prop_assert_eq!(member(&f.into(), &g), member(&f.into(), &h));
        }
    }
}
