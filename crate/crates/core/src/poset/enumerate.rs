//! Unlabeled poset enumeration.
//!
//! Level `n` is produced from level `n - 1` by adjoining a new maximal element
//! whose strict down-set is any ideal of the smaller poset; every poset arises
//! this way by deleting one of its maximal elements. Duplicates are removed by
//! a canonical code.

use std::collections::BTreeMap;

use super::{bit, bits, Poset};
use crate::error::EnumerationError;
use crate::lattice::ideals_of;
use crate::par::{self, Execution};

pub const DEFAULT_ENUMERATION_BOUND: usize = 7;
/// Canonical codes are `n * n` bit strings packed into a `u64`.
pub const MAX_ENUMERATION_BOUND: usize = 8;

/// Canonical code of a poset with at most 8 elements.
///
/// The minimum over all relabelings compatible with a per-element invariant
/// of the strict relation matrix packed row-major. Two posets have the same
/// code iff they are isomorphic.
pub fn canonical_code(p: &Poset) -> u64 {
    canonical_form(p).0
}

/// Code plus a position for every element that attains it.
fn canonical_form(p: &Poset) -> (u64, Vec<usize>) {
    let n = p.len();
    assert!(n <= MAX_ENUMERATION_BOUND, "canonical codes need n <= {MAX_ENUMERATION_BOUND}");
    let h = p.heights();
    let key = |i: usize| {
        let mut below: Vec<u32> = bits(p.strict_down_mask(i)).map(|j| p.down_mask(j).count_ones()).collect();
        below.sort_unstable();
        (h[i], p.down_mask(i).count_ones(), p.up_mask(i).count_ones(), below)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));

    // cells of equal invariant occupy consecutive positions
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut s = 0;
    for k in 1..=n {
        if k == n || keys[order[k]] != keys[order[s]] {
            cells.push((s, k));
            s = k;
        }
    }

    let mut best = (u64::MAX, Vec::new());
    let mut slots = order.clone();
    permute_cells(&cells, 0, &mut slots, &mut |slots| {
        let mut code = 0u64;
        for a in 0..n {
            for b in 0..n {
                if a != b && p.lt(slots[a], slots[b]) {
                    code |= 1u64 << (a * n + b);
                }
            }
        }
        if code < best.0 {
            let mut pos = vec![0; n];
            for (k, &e) in slots.iter().enumerate() {
                pos[e] = k;
            }
            best = (code, pos);
        }
    });
    if n == 0 {
        best = (0, Vec::new());
    }
    best
}

fn permute_cells(cells: &[(usize, usize)], c: usize, slots: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if c == cells.len() {
        f(slots);
        return;
    }
    let (lo, hi) = cells[c];
    heap_permute(slots, lo, hi - lo, &mut |s| permute_cells(cells, c + 1, s, f));
}

// Heap's algorithm over slots[lo..lo + k].
fn heap_permute(slots: &mut Vec<usize>, lo: usize, k: usize, f: &mut impl FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        f(slots);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(slots, lo, k - 1, f);
        if k % 2 == 0 {
            slots.swap(lo + i, lo + k - 1);
        } else {
            slots.swap(lo, lo + k - 1);
        }
    }
    heap_permute(slots, lo, k - 1, f);
}

/// Relabel `p` into canonical position order with labels `1..=n`.
fn canonical_representative(p: &Poset) -> (u64, Poset) {
    let (code, pos) = canonical_form(p);
    let n = p.len();
    let mut rel = Vec::new();
    for &(a, b) in p.covers() {
        rel.push((pos[a], pos[b]));
    }
    let q = Poset::new((1..=n).map(|i| i.to_string()), &rel).expect("relabeling preserves validity");
    (code, q)
}

/// All posets on `n` elements up to isomorphism, ordered by canonical code.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, EnumerationError> {
    PosetEnumerator::new(DEFAULT_ENUMERATION_BOUND).level(n)
}

/// Level-by-level generator; iterating yields the levels `0, 1, …, bound`.
#[derive(Clone, Debug)]
pub struct PosetEnumerator {
    bound: usize,
    exec: Execution,
    next: usize,
    current: Vec<Poset>,
}

impl PosetEnumerator {
    pub fn new(bound: usize) -> Self {
        Self {
            bound,
            exec: Execution::default(),
            next: 0,
            current: Vec::new(),
        }
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    /// Posets on exactly `n` elements.
    pub fn level(&self, n: usize) -> Result<Vec<Poset>, EnumerationError> {
        if n > self.bound || n > MAX_ENUMERATION_BOUND {
            return Err(EnumerationError::BoundExceeded {
                requested: n,
                max: self.bound.min(MAX_ENUMERATION_BOUND),
            });
        }
        let mut level = vec![Poset::antichain(0)];
        for _ in 0..n {
            level = extend(&level, self.exec);
        }
        Ok(level)
    }
}

impl Iterator for PosetEnumerator {
    type Item = (usize, Vec<Poset>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next > self.bound.min(MAX_ENUMERATION_BOUND) {
            return None;
        }
        self.current = if self.next == 0 {
            vec![Poset::antichain(0)]
        } else {
            extend(&self.current, self.exec)
        };
        self.next += 1;
        Some((self.next - 1, self.current.clone()))
    }
}

fn extend(level: &[Poset], exec: Execution) -> Vec<Poset> {
    let batches = par::map(exec, level, |p| {
        let m = p.len();
        ideals_of(p)
            .into_iter()
            .map(|ideal| {
                let mut down: Vec<u64> = (0..m).map(|i| p.down_mask(i)).collect();
                down.push(ideal | bit(m));
                let labels = (1..=m + 1).map(|i| i.to_string()).collect();
                canonical_representative(&Poset::from_down(labels, down))
            })
            .collect::<Vec<_>>()
    });
    let mut unique = BTreeMap::new();
    for (code, q) in batches.into_iter().flatten() {
        unique.entry(code).or_insert(q);
    }
    unique.into_values().collect()
}
