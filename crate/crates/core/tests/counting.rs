use num_bigint::BigUint;
use num_traits::{One, Zero};
use wpn_core::counting::{
    bell, binomial, c2l_lower_bound, component_count, f_star, labeled_cograph_count, log2_lower_bound,
    partition_stats, CountingError, PartitionSampler, SetPartition,
};
use wpn_core::families::{member, FamilySpec, NamedFamily};
use wpn_core::Graph;

const FAMILIES: [NamedFamily; 3] =
    [NamedFamily::StarsTrianglesCo, NamedFamily::StarsCliquesCo, NamedFamily::SplitJoinComponentsCo];

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// All set partitions of `0..n` as restricted growth strings.
fn rgs_all(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = if cur.is_empty() { 0 } else { max + 1 };
        for b in 0..=next {
            cur.push(b);
            go(n, cur, max.max(b), out);
            cur.pop();
        }
    }
    go(n, &mut cur, 0, &mut out);
    out
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0u64..1 << (n * n.saturating_sub(1) / 2)).map(move |m| Graph::from_edge_mask(n, m))
}

fn brute_count(n: usize, f: &FamilySpec) -> BigUint {
    big(labeled_graphs(n).filter(|g| member(f, g)).count() as u64)
}

#[test]
fn bell_matches_enumeration() {
    for n in 0..=10 {
        assert_eq!(bell(n), big(rgs_all(n).len() as u64), "n = {n}");
    }
    assert_eq!(bell(4), big(15));
}

#[test]
fn bell_recurrence() {
    for n in 0..30 {
        let sum: BigUint = (0..=n).map(|k| binomial(n, k) * bell(k)).sum();
        assert_eq!(bell(n + 1), sum);
    }
}

#[test]
fn component_counts_match_brute_force() {
    for (i, f) in FAMILIES.into_iter().enumerate() {
        let spec = FamilySpec::from(f);
        for s in 1..=5 {
            let oracle = labeled_graphs(s).filter(|g| g.complement().is_connected() && member(&spec, g)).count();
            assert_eq!(component_count(i + 1, s).unwrap(), big(oracle as u64), "c_{}({s})", i + 1);
        }
    }
    assert_eq!(component_count(4, 3), Err(CountingError::BadFamilyIndex(4)));
}

#[test]
fn f_star_matches_brute_force() {
    for (i, f) in FAMILIES.into_iter().enumerate() {
        for n in 0..=6 {
            assert_eq!(f_star(i + 1, n).unwrap(), brute_count(n, &f.into()), "f*_{}({n})", i + 1);
        }
    }
    assert_eq!(f_star(1, 4).unwrap(), big(30));
    assert_eq!(f_star(3, 4).unwrap(), big(37));
}

#[test]
fn cographs_match_brute_force() {
    for n in 0..=6 {
        assert_eq!(labeled_cograph_count(n), brute_count(n, &NamedFamily::Cograph.into()), "n = {n}");
    }
    assert_eq!(labeled_cograph_count(3), big(8));
    assert_eq!(labeled_cograph_count(4), big(52));
}

#[test]
fn family_size_inequalities() {
    for i in 1..=3 {
        let f: Vec<BigUint> = (0..=201).map(|n| f_star(i, n).unwrap()).collect();
        for n in 1..=200 {
            let b = bell(n);
            assert!(b <= f[n] && f[n] <= (&b << n), "Bell sandwich, i = {i}, n = {n}");
            assert!(f[n] <= f[n + 1]);
        }
        for n in 8..=200 {
            // log2 n >= a / q, so 16 a f(n+1) >= q n f(n) is sufficient.
            let (a, q) = log2_lower_bound(n);
            assert!(big(16) * a * &f[n + 1] >= q * big(n as u64) * &f[n], "lower step, i = {i}, n = {n}");
            assert!(f[n + 1] <= big(4 * n as u64) * &f[n], "upper step, i = {i}, n = {n}");
        }
    }
}

#[test]
fn log2_lower_bound_is_tight() {
    for n in 1..=300usize {
        let (a, q) = log2_lower_bound(n);
        let a = a.to_string().parse::<f64>().unwrap();
        let q = q.to_string().parse::<f64>().unwrap();
        let l = (n as f64).log2();
        assert!(a / q <= l + 1e-12 && l - a / q < 1.0 / q + 1e-12);
    }
}

#[test]
fn cograph_growth_bound() {
    for n in 1..=100 {
        let cap = BigUint::from(2 * n).pow(2 * n as u32);
        assert!(labeled_cograph_count(n) < cap, "n = {n}");
    }
}

#[test]
fn bell_outer_bound() {
    for n in 8..=200usize {
        let l = (n as f64 / (n as f64).ln()).ceil() as u32;
        // B_n >= (l/2)^n, cleared of the denominator.
        assert!((bell(n) << n) >= BigUint::from(l).pow(n as u32), "n = {n}");
    }
}

#[test]
fn lower_bound_examples() {
    let b = c2l_lower_bound(3, 4).unwrap();
    assert_eq!(b.exact_value(), Some(big(4)));
    let b = c2l_lower_bound(8, 4).unwrap();
    assert!(!b.exponent_is_integer());
    assert_eq!((b.exponent_numerator.clone(), b.exponent_denominator.clone()), (big(56), big(3)));
    assert_eq!(b.bell_factor, big(5));
    // 2^(56/3) * 5 = 2^18 * 5 * 2^(2/3) ~ 2080638.5
    assert_eq!(b.floor_value(), big(2080638));
    assert!(b.is_at_most(&big(2080639)));
    assert!(!b.is_at_most(&big(2080638)));
    assert!(c2l_lower_bound(6, 4).unwrap().is_at_most(&big(1 << 15)));
    assert_eq!(c2l_lower_bound(8, 3), Err(CountingError::BadL(3)));
    assert!(c2l_lower_bound(0, 4).is_err());
}

#[test]
fn sampler_is_seeded() {
    let draw = |seed| {
        let mut s = PartitionSampler::new(50, seed).unwrap();
        (0..20).map(|_| s.sample().rgs()).collect::<Vec<_>>()
    };
    assert_eq!(draw(7), draw(7));
    assert_ne!(draw(7), draw(8));
    let mut one = PartitionSampler::new(1, 3).unwrap();
    for _ in 0..10 {
        assert_eq!(one.sample().blocks(), &[vec![0]]);
    }
    assert!(PartitionSampler::new(0, 0).is_err());
    assert!(PartitionSampler::new(2001, 0).is_err());
    assert!(PartitionSampler::new(2000, 0).is_ok());
}

#[test]
fn samples_are_valid_partitions() {
    let mut s = PartitionSampler::new(300, 11).unwrap();
    for _ in 0..50 {
        let p = s.sample();
        let mut seen = vec![false; 300];
        for b in p.blocks() {
            assert!(!b.is_empty());
            for &v in b {
                assert!(!seen[v]);
                seen[v] = true;
            }
        }
        assert!(seen.iter().all(|&x| x));
    }
}

#[test]
fn stats_examples() {
    let p = SetPartition::new(6, vec![vec![0, 1, 2], vec![3], vec![4, 5]]).unwrap();
    let s = partition_stats(&p, Some(2));
    assert_eq!((s.blocks, s.nonsingleton_blocks, s.heavy_vertices), (3, 2, 3));
    assert!(SetPartition::new(3, vec![vec![0, 1]]).is_none());
    assert!(SetPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_none());
}

#[test]
fn expected_block_count_identity() {
    // Mean block count over all partitions of n is B_{n+1}/B_n - 1.
    for n in 1..=10 {
        let all = rgs_all(n);
        let blocks: u64 = all.iter().map(|r| (r.iter().max().unwrap() + 1) as u64).sum();
        assert_eq!(big(blocks) + bell(n), bell(n + 1), "n = {n}");
    }
    assert!(bell(0).is_one() && !bell(1).is_zero());
}
