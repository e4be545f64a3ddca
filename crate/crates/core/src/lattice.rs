//! Birkhoff lattices: families of poset ideals closed under union and intersection.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{LatticeError, PosetError};
use crate::poset::{bit, bits, Poset};

/// A downward-closed subset of a fixed poset, as a member mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetIdeal(u64);

impl PosetIdeal {
    pub fn new(p: &Poset, mask: u64) -> Option<Self> {
        (mask & !p.all_mask() == 0 && p.is_ideal(mask)).then_some(Self(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & bit(i) != 0
    }

    pub fn is_subset(self, other: PosetIdeal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

/// All ideals of `p`, grown one minimal element of the complement at a time.
/// Returned by increasing cardinality.
pub fn ideals_of(p: &Poset) -> Vec<u64> {
    let mut out = vec![0u64];
    let mut layer = vec![0u64];
    let mut seen = HashSet::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &ideal in &layer {
            for x in bits(p.all_mask() & !ideal) {
                if p.strict_down_mask(x) & !ideal == 0 {
                    let grown = ideal | bit(x);
                    if seen.insert(grown) {
                        next.push(grown);
                    }
                }
            }
        }
        out.extend_from_slice(&next);
        layer = next;
    }
    out
}

/// A finite distributive lattice realised as a family of ideals of `base`.
///
/// Element indices follow a linear extension of inclusion, so the bottom is
/// index 0 and the top is the last index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributiveLattice {
    base: Poset,
    elements: Vec<PosetIdeal>,
    index: HashMap<u64, usize>,
    join: Vec<u32>,
    meet: Vec<u32>,
    covers: Vec<(usize, usize)>,
}

/// Canonical element order: cardinality, then sorted member labels.
pub(crate) fn canonical_cmp(p: &Poset, a: u64, b: u64) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| p.mask_labels(a).cmp(&p.mask_labels(b)))
}

/// The lattice `L(p)` of all ideals of `p` in canonical order.
pub fn build_lattice(p: &Poset) -> DistributiveLattice {
    let mut ideals = ideals_of(p);
    ideals.sort_by(|&a, &b| canonical_cmp(p, a, b));
    DistributiveLattice::assemble(p.clone(), ideals)
}

impl DistributiveLattice {
    /// A lattice from an explicit ideal family, kept in the given order.
    ///
    /// The family must be closed under union and intersection and the order
    /// must be a linear extension of inclusion.
    pub fn from_family(base: Poset, family: Vec<u64>) -> Result<Self, LatticeError> {
        if family.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut seen = HashSet::new();
        for &m in &family {
            if PosetIdeal::new(&base, m).is_none() {
                return Err(LatticeError::NotIdeal(m));
            }
            if !seen.insert(m) {
                return Err(LatticeError::Duplicate(m));
            }
        }
        for &a in &family {
            for &b in &family {
                if !seen.contains(&(a | b)) || !seen.contains(&(a & b)) {
                    return Err(LatticeError::NotClosed);
                }
            }
        }
        for (i, &a) in family.iter().enumerate() {
            if family[..i].iter().any(|&b| b != a && a & !b == 0) {
                return Err(LatticeError::NotLinearExtension);
            }
        }
        Ok(Self::assemble(base, family))
    }

    fn assemble(base: Poset, family: Vec<u64>) -> Self {
        let n = family.len();
        let index: HashMap<u64, usize> = family.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = index[&(family[i] | family[j])] as u32;
                meet[i * n + j] = index[&(family[i] & family[j])] as u32;
            }
        }

        // below[j] holds every i with e_i ⊊ e_j; j covers i iff nothing lies strictly between.
        let words = n.div_ceil(64);
        let mut below = vec![vec![0u64; words]; n];
        let mut above = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in i + 1..n {
                if family[i] & !family[j] == 0 {
                    below[j][i / 64] |= 1 << (i % 64);
                    above[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut covers = Vec::new();
        for j in 0..n {
            for i in 0..j {
                if below[j][i / 64] & (1 << (i % 64)) != 0
                    && below[j].iter().zip(&above[i]).all(|(a, b)| a & b == 0)
                {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();

        Self {
            base,
            elements: family.into_iter().map(PosetIdeal).collect(),
            index,
            join,
            meet,
            covers,
        }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetIdeal] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> PosetIdeal {
        self.elements[i]
    }

    pub fn index_of(&self, ideal: u64) -> Option<usize> {
        self.index.get(&ideal).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].is_subset(self.elements[j])
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    /// Cover pairs `(i, j)` with `e_i ⋖ e_j`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Unordered incomparable pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.comparable(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `{a,b}` with the member labels sorted.
    pub fn element_label(&self, i: usize) -> String {
        format!("{{{}}}", self.base.mask_labels(self.elements[i].mask()).join(","))
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.len()];
        for &(i, j) in &self.covers {
            // covers are sorted by lower index and indices follow a linear extension
            r[j] = r[j].max(r[i] + 1);
        }
        r
    }

    /// `true` when the distributive law holds for every triple.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))))
        })
    }

    /// Size of a maximum antichain.
    pub fn width(&self) -> usize {
        let n = self.len();
        let words = n.div_ceil(64);
        let incomparable: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in 0..n {
                    if !self.comparable(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        let mut all = vec![0u64; words];
        for j in 0..n {
            all[j / 64] |= 1 << (j % 64);
        }
        let mut best = 0;
        wide_antichain(all, &incomparable, 0, &mut best);
        best
    }

    /// Graphviz Hasse diagram, bottom at the bottom; nodes are 1-based indices
    /// labelled by their ideals.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for i in 0..self.len() {
            s.push_str(&format!("  {} [label=\"{}\"];\n", i + 1, self.element_label(i)));
        }
        for &(a, b) in &self.covers {
            s.push_str(&format!("  {} -> {};\n", a + 1, b + 1));
        }
        s.push_str("}\n");
        s
    }

    /// The lattice as a poset labelled by [`Self::element_label`] with braces
    /// replaced: element `i` becomes `e{i+1}`.
    pub fn to_poset(&self) -> Result<Poset, PosetError> {
        let labels = (1..=self.len()).map(|i| format!("e{i}"));
        Poset::new(labels, &self.covers)
    }
}

fn wide_antichain(cands: Vec<u64>, incomparable: &[Vec<u64>], current: usize, best: &mut usize) {
    let count: usize = cands.iter().map(|w| w.count_ones() as usize).sum();
    if current + count <= *best {
        return;
    }
    let Some(w) = cands.iter().position(|&w| w != 0) else {
        *best = current;
        return;
    };
    let i = w * 64 + cands[w].trailing_zeros() as usize;
    let with: Vec<u64> = cands.iter().zip(&incomparable[i]).map(|(a, b)| a & b).collect();
    wide_antichain(with, incomparable, current + 1, best);
    let mut without = cands;
    without[w] &= !(1 << (i % 64));
    wide_antichain(without, incomparable, current, best);
}

/// Join-irreducible elements (exactly one lower cover) with the induced order.
///
/// An element whose ideal is the principal ideal of some `x` is labelled by
/// `x`; any other is labelled `e{index+1}`.
pub fn join_irreducibles(l: &DistributiveLattice) -> Poset {
    let n = l.len();
    let mut lower = vec![0usize; n];
    for &(_, j) in l.covers() {
        lower[j] += 1;
    }
    let irr: Vec<usize> = (0..n).filter(|&j| lower[j] == 1).collect();
    let base = l.base();
    let labels: Vec<String> = irr
        .iter()
        .map(|&j| {
            let m = l.element(j).mask();
            bits(m)
                .find(|&x| base.down_mask(x) == m)
                .map(|x| base.label(x).to_string())
                .unwrap_or_else(|| format!("e{}", j + 1))
        })
        .collect();
    let mut rel = Vec::new();
    for (a, &i) in irr.iter().enumerate() {
        for (b, &j) in irr.iter().enumerate() {
            if i != j && l.leq(i, j) {
                rel.push((a, b));
            }
        }
    }
    Poset::new(labels, &rel).expect("join-irreducibles of a lattice form a poset")
}
