use std::collections::HashSet;

use hk_core::classify::{
    composition_matrix, is_2plus2_free, is_free, poset_from_composition_matrix, recognize_snake,
};
use hk_core::poset::{enumerate_posets, is_isomorphic, ordinal_decompose, ordinal_sum, parse_poset, serialize_poset};
use hk_core::{build_lattice, join_irreducibles, Poset};
use proptest::prelude::*;

fn all_posets(max: usize) -> impl Iterator<Item = Poset> {
    (0..=max).flat_map(|n| enumerate_posets(n).unwrap())
}

/// Random poset on `1..=n` whose relations respect the label order.
fn poset() -> impl Strategy<Value = Poset> {
    (0usize..=7).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut rel = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        rel.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::new((1..=n).map(|i| i.to_string()), &rel).unwrap()
        })
    })
}

#[test]
fn birkhoff_round_trip() {
    for p in all_posets(7) {
        let q = join_irreducibles(&build_lattice(&p));
        assert!(is_isomorphic(&q, &p), "{p}");
    }
}

#[test]
fn composition_matrices_invert_on_interval_orders() {
    for p in all_posets(7).filter(is_2plus2_free) {
        let m = composition_matrix(&p).unwrap();
        let back = poset_from_composition_matrix(&m).unwrap();
        assert!(is_isomorphic(&back, &p), "{p}");
    }
}

#[test]
fn snake_recognition_matches_freeness() {
    for p in all_posets(7).filter(|p| p.len() >= 2) {
        let irreducible = ordinal_decompose(&p).len() == 1;
        let snake = recognize_snake(&build_lattice(&p)).is_some();
        assert_eq!(snake, irreducible && is_free(&p), "{p}");
    }
}

/// Strict order relations as an `n×n` bit matrix, row-major.
fn relation_code(rel: &[Vec<bool>], perm: &[usize]) -> u64 {
    let n = rel.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            code = (code << 1) | rel[perm[i]][perm[j]] as u64;
        }
    }
    code
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of posets on `n` points by exhausting all strict
/// relations and taking the minimum code over relabelings.
fn brute_force_classes(n: usize) -> HashSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let perms = permutations(n);
    let mut classes = HashSet::new();
    for bits in 0u64..(1 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = bits >> k & 1 == 1;
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| !(rel[i][j] && rel[j][i])));
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel[i][j] && rel[j][k]) || rel[i][k])));
        if antisymmetric && transitive {
            classes.insert(perms.iter().map(|p| relation_code(&rel, p)).min().unwrap());
        }
    }
    classes
}

fn class_of(p: &Poset) -> u64 {
    let n = p.len();
    let rel: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| p.lt(i, j)).collect()).collect();
    permutations(n).iter().map(|q| relation_code(&rel, q)).min().unwrap()
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, expected) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16), (5, 63)] {
        let classes = brute_force_classes(n);
        assert_eq!(classes.len(), expected);
        let listed = enumerate_posets(n).unwrap();
        assert_eq!(listed.len(), expected, "n = {n}");
        let got: HashSet<u64> = listed.iter().map(class_of).collect();
        assert_eq!(got, classes, "n = {n}");
    }
}

proptest! {
    #[test]
    fn decompose_then_sum_is_identity(p in poset()) {
        let parts = ordinal_decompose(&p);
        prop_assert!(parts.iter().all(|q| ordinal_decompose(q).len() == 1));
        let mut acc = Poset::antichain(0);
        for q in &parts {
            acc = ordinal_sum(&acc, q).unwrap();
        }
        prop_assert!(is_isomorphic(&acc, &p));
    }

    #[test]
    fn text_format_round_trips(p in poset()) {
        let text = serialize_poset(&p);
        let q = parse_poset(&text).unwrap();
        prop_assert_eq!(serialize_poset(&q), text);
        prop_assert!(is_isomorphic(&q, &p));
    }

    #[test]
    fn lattices_are_distributive_with_ranked_levels(p in poset()) {
        let l = build_lattice(&p);
        prop_assert!(l.is_distributive());
        let ranks = l.ranks();
        prop_assert!(l.covers().iter().all(|&(a, b)| ranks[b] == ranks[a] + 1));
        prop_assert_eq!(ranks[l.top()], p.len());
    }
}
