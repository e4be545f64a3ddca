use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::lattice::DistributiveLattice;

use super::{Monomial, MonomialOrder, Polynomial};

/// `f_{α,β} = x_α x_β − x_{α∧β} x_{α∨β}` for an incomparable pair `α < β` (by index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub pair: (usize, usize),
    pub poly: Polynomial,
    pub initial: Monomial,
}

/// The Hibi-type generators of a lattice under a fixed compatible order.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    by_pair: HashMap<(usize, usize), usize>,
    incident: Vec<Vec<usize>>,
    order: MonomialOrder,
    names: Vec<String>,
}

/// Variable names `x{a,b}` from the member labels of each element.
pub fn variable_names(l: &DistributiveLattice) -> Vec<String> {
    (0..l.len()).map(|i| format!("x{}", l.element_label(i))).collect()
}

/// One generator per unordered incomparable pair, in lexicographic pair order.
pub fn hibi_generators(l: &DistributiveLattice, ord: &MonomialOrder) -> GeneratorSet {
    let mut gens = Vec::new();
    for (a, b) in l.incomparable_pairs() {
        let one = BigRational::one();
        let mut poly = Polynomial::term(Monomial::from_exponents([(a, 1), (b, 1)]), one.clone());
        poly.add_term(Monomial::from_exponents([(l.meet(a, b), 1), (l.join(a, b), 1)]), -one);
        let initial = poly.leading_term(ord).expect("generator is nonzero").0.clone();
        gens.push(Generator {
            pair: (a, b),
            poly,
            initial,
        });
    }
    GeneratorSet::new(gens, ord.clone(), variable_names(l))
}

impl GeneratorSet {
    fn new(gens: Vec<Generator>, order: MonomialOrder, names: Vec<String>) -> Self {
        let mut incident = vec![Vec::new(); names.len()];
        let mut by_pair = HashMap::new();
        for (k, g) in gens.iter().enumerate() {
            by_pair.insert(g.pair, k);
            for (v, _) in g.initial.iter() {
                incident[v].push(k);
            }
        }
        Self {
            gens,
            by_pair,
            incident,
            order,
            names,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn get(&self, k: usize) -> &Generator {
        &self.gens[k]
    }

    /// Index of `f_{α,β}` regardless of argument order.
    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        self.by_pair.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    /// Product of the generators with the given indices.
    pub fn product(&self, indices: &[usize]) -> Polynomial {
        indices.iter().fold(Polynomial::one(), |acc, &k| &acc * &self.gens[k].poly)
    }

    /// Product of their initial monomials.
    pub fn initial_product(&self, indices: &[usize]) -> Monomial {
        indices.iter().fold(Monomial::one(), |acc, &k| acc.mul(&self.gens[k].initial))
    }
}

/// A multiset of generators (sorted indices) whose initial monomials
/// multiply to `m`, if one exists.
///
/// Every initial monomial is a squarefree `x_α x_β`, so this is an exact
/// edge decomposition of the exponent vector. The variable with the largest
/// remaining exponent is matched first, trying its generators in list order.
pub fn represent_initial(m: &Monomial, g: &GeneratorSet) -> Option<Vec<usize>> {
    if m.degree() % 2 == 1 {
        return None;
    }
    let mut rem = vec![0u32; g.num_vars()];
    for (v, e) in m.iter() {
        if v >= rem.len() {
            return None;
        }
        rem[v] = e;
    }
    let mut out = Vec::new();
    if decompose(&mut rem, m.degree(), g, &mut out) {
        out.sort_unstable();
        Some(out)
    } else {
        None
    }
}

fn decompose(rem: &mut [u32], total: u32, g: &GeneratorSet, out: &mut Vec<usize>) -> bool {
    if total == 0 {
        return true;
    }
    let (v, &top) = rem
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("nonzero total");
    if 2 * top > total {
        return false;
    }
    for &k in &g.incident[v] {
        let (a, b) = g.gens[k].pair;
        let w = if a == v { b } else { a };
        if rem[w] == 0 {
            continue;
        }
        rem[v] -= 1;
        rem[w] -= 1;
        out.push(k);
        if decompose(rem, total - 2, g, out) {
            return true;
        }
        out.pop();
        rem[v] += 1;
        rem[w] += 1;
    }
    false
}
