//! Small named posets used throughout tests, benches and the CLI.

use crate::poset::Poset;

/// Two disjoint 2-chains `a1 < a2` and `b1 < b2`.
pub fn two_plus_two() -> Poset {
    Poset::from_labeled(&["a1", "a2", "b1", "b2"], &[("a1", "a2"), ("b1", "b2")]).expect("valid fixture")
}

/// The 3-element antichain `a, b, c`.
pub fn one_plus_one_plus_one() -> Poset {
    Poset::new(["a", "b", "c"], &[]).expect("valid fixture")
}

/// A (2+2)-free, (1+1+1)-free, ordinal-irreducible poset on `1..6`.
pub fn snake_six() -> Poset {
    Poset::from_labeled(
        &["1", "2", "3", "4", "5", "6"],
        &[("1", "2"), ("2", "3"), ("3", "4"), ("5", "6"), ("5", "4"), ("2", "6")],
    )
    .expect("valid fixture")
}

/// A single element `a` beside the chain `b1 < … < bm`; its lattice is the
/// divisor lattice of `2 · 3^m`.
pub fn ladder(m: usize) -> Poset {
    let mut labels = vec!["a".to_string()];
    labels.extend((1..=m).map(|i| format!("b{i}")));
    let rel: Vec<_> = (2..=m).map(|i| (i - 1, i)).collect();
    Poset::new(labels, &rel).expect("valid fixture")
}
