use num_traits::One;

use crate::fixtures::ladder;
use crate::lattice::build_lattice;
use crate::poset::bit;

use super::{compatible_order, hibi_generators, Monomial, Polynomial};

/// For the divisor lattice of `2 · 3^m`, label `β_j = {b1..b_{j-1}}` and
/// `α_i = β_i ∪ {a}`. Checks that the generators are exactly the 2×2 minors
/// `x_{α_i} x_{β_j} − x_{β_i} x_{α_j}` (`i < j`) with diagonal initial terms.
pub fn plucker_identity_check(m: usize) -> bool {
    assert!(m >= 1, "the ladder needs at least one chain element");
    let p = ladder(m);
    let l = build_lattice(&p);
    let ord = compatible_order(&l);
    let g = hibi_generators(&l, &ord);
    let chain_prefix = |j: usize| (1..j).fold(0u64, |acc, k| acc | bit(k));
    let beta: Vec<usize> = (1..=m + 1).map(|j| l.index_of(chain_prefix(j)).expect("β is an ideal")).collect();
    let alpha: Vec<usize> = (1..=m + 1)
        .map(|i| l.index_of(chain_prefix(i) | bit(0)).expect("α is an ideal"))
        .collect();

    if g.len() != m * (m + 1) / 2 {
        return false;
    }
    for i in 0..=m {
        for j in i + 1..=m {
            let Some(k) = g.index_of(alpha[i], beta[j]) else {
                return false;
            };
            let diagonal = Monomial::from_exponents([(alpha[i], 1), (beta[j], 1)]);
            let mut minor = Polynomial::term(diagonal.clone(), One::one());
            minor.add_term(Monomial::from_exponents([(beta[i], 1), (alpha[j], 1)]), -num_rational::BigRational::one());
            let gen = g.get(k);
            if gen.poly != minor || gen.initial != diagonal {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ladders() {
        for m in 1..=5 {
            assert!(plucker_identity_check(m), "m = {m}");
        }
    }
}
