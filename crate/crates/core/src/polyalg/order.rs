use std::cmp::Ordering;

use crate::error::AlgebraError;
use crate::lattice::DistributiveLattice;

use super::Monomial;

/// Degree reverse lexicographic order with variable `v` of rank `rank[v]`;
/// rank 0 is the smallest variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u32>,
}

impl MonomialOrder {
    /// Degrevlex with `extension[k]` as the variable of rank `k`.
    ///
    /// # Panics
    /// If `extension` is not a permutation of `0..extension.len()`.
    pub fn degrevlex(extension: &[usize]) -> Self {
        let mut rank = vec![u32::MAX; extension.len()];
        for (k, &v) in extension.iter().enumerate() {
            assert!(v < rank.len() && rank[v] == u32::MAX, "extension must be a permutation");
            rank[v] = k as u32;
        }
        Self { rank }
    }

    pub fn num_vars(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, v: usize) -> u32 {
        self.rank[v]
    }

    /// Variables from smallest to largest.
    pub fn extension(&self) -> Vec<usize> {
        let mut ext = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            ext[r as usize] = v;
        }
        ext
    }

    /// Higher degree wins; at equal degree the monomial with the smaller
    /// exponent in the smallest variable where they differ is larger.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            let ranked = |m: &Monomial| {
                let mut v: Vec<(u32, u32)> = m.iter().map(|(x, e)| (self.rank[x], e)).collect();
                v.sort_unstable();
                v
            };
            let (ra, rb) = (ranked(a), ranked(b));
            let (mut i, mut j) = (0, 0);
            loop {
                match (ra.get(i), rb.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(x, e)), Some(&(y, f))) => match x.cmp(&y) {
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal if e != f => return f.cmp(&e),
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }

    /// `degrevlex[…]` listing variables smallest first, 1-based.
    pub fn describe(&self) -> String {
        let ext: Vec<String> = self.extension().iter().map(|v| (v + 1).to_string()).collect();
        format!("degrevlex[{}]", ext.join(","))
    }
}

/// The compatible order from the canonical element order of `l`.
pub fn compatible_order(l: &DistributiveLattice) -> MonomialOrder {
    let ext: Vec<usize> = (0..l.len()).collect();
    order_from_extension(l, &ext).expect("element indices form a linear extension")
}

/// The compatible order from an explicit linear extension of `l`
/// (element indices, bottom first).
///
/// # Panics
/// If the resulting order fails to make `x_α x_β` the initial monomial of
/// some generator, which would mean a bug rather than bad input.
pub fn order_from_extension(l: &DistributiveLattice, extension: &[usize]) -> Result<MonomialOrder, AlgebraError> {
    let n = l.len();
    let mut seen = vec![false; n];
    let mut is_perm = extension.len() == n;
    for &v in extension {
        if v >= n || seen[v] {
            is_perm = false;
            break;
        }
        seen[v] = true;
    }
    let reject = || AlgebraError::NotLinearExtension(extension.to_vec());
    if !is_perm {
        return Err(reject());
    }
    for (k, &a) in extension.iter().enumerate() {
        if extension[k + 1..].iter().any(|&b| l.leq(b, a)) {
            return Err(reject());
        }
    }
    let ord = MonomialOrder::degrevlex(extension);
    for (a, b) in l.incomparable_pairs() {
        let top = Monomial::from_exponents([(a, 1), (b, 1)]);
        let other = Monomial::from_exponents([(l.meet(a, b), 1), (l.join(a, b), 1)]);
        assert_eq!(
            ord.cmp(&top, &other),
            Ordering::Greater,
            "order {} is not compatible at pair ({a}, {b})",
            ord.describe()
        );
    }
    Ok(ord)
}
