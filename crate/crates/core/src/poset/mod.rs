//! Finite posets stored as reflexive down/up closures over `u64` masks.

mod enumerate;
mod format;
mod structure;

pub use enumerate::{canonical_code, enumerate_posets, PosetEnumerator, DEFAULT_ENUMERATION_BOUND, MAX_ENUMERATION_BOUND};
pub use format::{parse_poset, serialize_poset};
pub use structure::{find_isomorphism, is_isomorphic, ordinal_decompose, ordinal_sum, width};

use crate::error::PosetError;

/// Largest poset accepted; ideals are `u64` masks.
pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Iterate the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A finite poset. `covers` holds `(a, b)` for every cover `a ⋖ b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    down: Vec<u64>,
    up: Vec<u64>,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '<' | ',' | '#' | '{' | '}' | ':'))
}

impl Poset {
    /// Build a poset from labels and strict relations `(a, b)` meaning `a < b`.
    ///
    /// The relation may contain redundant (transitively implied) pairs; only
    /// the transitive reduction is kept as the cover set.
    pub fn new<S, I>(labels: I, relations: &[(usize, usize)]) -> Result<Self, PosetError>
    where
        S: Into<String>,
        I: IntoIterator<Item = S>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                got: n,
                max: MAX_ELEMENTS,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !valid_label(l) {
                return Err(PosetError::InvalidLabel(l.clone()));
            }
            if !seen.insert(l.as_str()) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }

        let mut preds = vec![0u64; n];
        for &(a, b) in relations {
            assert!(a < n && b < n, "relation ({a}, {b}) out of range for {n} elements");
            if a == b {
                return Err(PosetError::Cycle(labels[a].clone()));
            }
            preds[b] |= bit(a);
        }

        // Kahn's algorithm over the predecessor masks.
        let mut indeg: Vec<u32> = preds.iter().map(|p| p.count_ones()).collect();
        let mut succs = vec![0u64; n];
        for (b, &p) in preds.iter().enumerate() {
            for a in bits(p) {
                succs[a] |= bit(b);
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for w in bits(succs[v]) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indeg[i] > 0).unwrap();
            return Err(PosetError::Cycle(labels[stuck].clone()));
        }

        let mut down = vec![0u64; n];
        for &v in &order {
            let mut d = bit(v);
            for u in bits(preds[v]) {
                d |= down[u];
            }
            down[v] = d;
        }
        Ok(Self::from_down(labels, down))
    }

    /// Build from labels and `(lower, upper)` label pairs.
    pub fn from_labeled<S: AsRef<str>>(labels: &[S], relations: &[(S, S)]) -> Result<Self, PosetError> {
        let names: Vec<&str> = labels.iter().map(AsRef::as_ref).collect();
        let find = |s: &str| {
            names
                .iter()
                .position(|&l| l == s)
                .ok_or_else(|| PosetError::UnknownLabel(s.to_string()))
        };
        let rel = relations
            .iter()
            .map(|(a, b)| Ok((find(a.as_ref())?, find(b.as_ref())?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        Self::new(names, &rel)
    }

    /// Assemble from precomputed reflexive down-closures.
    pub(crate) fn from_down(labels: Vec<String>, down: Vec<u64>) -> Self {
        let n = labels.len();
        let mut up = vec![0u64; n];
        for (v, &d) in down.iter().enumerate() {
            for u in bits(d) {
                up[u] |= bit(v);
            }
        }
        let mut covers = Vec::new();
        for v in 0..n {
            let strict = down[v] & !bit(v);
            for u in bits(strict) {
                if up[u] & strict == bit(u) {
                    covers.push((u, v));
                }
            }
        }
        covers.sort_unstable();
        Self {
            labels,
            covers,
            down,
            up,
        }
    }

    /// The chain `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new((1..=n).map(|i| i.to_string()), &rel).expect("chain is a poset")
    }

    /// The antichain on `1, …, n`.
    pub fn antichain(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string()), &[]).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `a ≤ b`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b] & bit(a) != 0
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn all_mask(&self) -> u64 {
        full_mask(self.len())
    }

    /// Reflexive principal ideal of `i`.
    pub fn down_mask(&self, i: usize) -> u64 {
        self.down[i]
    }

    /// Reflexive principal filter of `i`.
    pub fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    /// `D(i) = {b | b < i}`.
    pub fn strict_down_mask(&self, i: usize) -> u64 {
        self.down[i] & !bit(i)
    }

    /// `U(i) = {b | b > i}`.
    pub fn strict_up_mask(&self, i: usize) -> u64 {
        self.up[i] & !bit(i)
    }

    /// Labels of a mask, sorted lexicographically.
    pub fn mask_labels(&self, mask: u64) -> Vec<&str> {
        let mut v: Vec<&str> = bits(mask).map(|i| self.labels[i].as_str()).collect();
        v.sort_unstable();
        v
    }

    /// Strict down-set of the element labelled `label`, as sorted labels.
    pub fn downset(&self, label: &str) -> Result<Vec<&str>, PosetError> {
        let i = self
            .index_of(label)
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))?;
        Ok(self.mask_labels(self.strict_down_mask(i)))
    }

    /// Strict up-set of the element labelled `label`, as sorted labels.
    pub fn upset(&self, label: &str) -> Result<Vec<&str>, PosetError> {
        let i = self
            .index_of(label)
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))?;
        Ok(self.mask_labels(self.strict_up_mask(i)))
    }

    /// `true` when `mask` is downward closed.
    pub fn is_ideal(&self, mask: u64) -> bool {
        bits(mask).all(|i| self.down[i] & !mask == 0)
    }

    /// Induced subposet on `mask`, keeping the relative element order.
    pub fn induced(&self, mask: u64) -> Poset {
        let keep: Vec<usize> = bits(mask).collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let down = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.leq(j, i))
                    .fold(0u64, |acc, (k, _)| acc | bit(k))
            })
            .collect();
        Poset::from_down(labels, down)
    }

    /// Same order, new labels (positionally).
    pub fn relabeled<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Poset, PosetError> {
        Poset::new(labels, &self.covers)
    }

    /// Relabel elements by a permutation: element `i` becomes position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let n = self.len();
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
        }
        let rel: Vec<_> = self.covers.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Poset::new(labels, &rel).expect("permutation preserves validity")
    }

    /// The order-dual poset.
    pub fn dual(&self) -> Poset {
        let rel: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::new(self.labels.clone(), &rel).expect("dual of a poset is a poset")
    }

    /// Minimal elements as a mask.
    pub fn minimal_mask(&self) -> u64 {
        (0..self.len())
            .filter(|&i| self.down[i] == bit(i))
            .fold(0, |acc, i| acc | bit(i))
    }

    /// Length of the longest chain ending at each element (0 for minimal ones).
    pub(crate) fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down[i].count_ones());
        let mut h = vec![0; n];
        for &v in &order {
            h[v] = bits(self.strict_down_mask(v)).map(|u| h[u] + 1).max().unwrap_or(0);
        }
        h
    }

    /// `true` if the poset is a chain.
    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.comparable(a, b)))
    }
}

impl std::fmt::Display for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&serialize_poset(self))
    }
}
