use num_rational::BigRational;
use serde::Serialize;

use crate::error::AlgebraError;

use super::{represent_initial, GeneratorSet, Monomial, MonomialOrder, Polynomial};

pub const DEFAULT_ITERATION_CAP: usize = 1_000_000;

/// One pass of the subduction loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `c · ∏ f_j` was subtracted; `generators` is the multiset of indices.
    Subducted {
        monomial: Monomial,
        coefficient: BigRational,
        generators: Vec<usize>,
    },
    /// `c · m` had no representation and moved to the remainder.
    Remainder { monomial: Monomial, coefficient: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subduction {
    pub q: Polynomial,
    pub r: Polynomial,
    pub trace: Vec<Step>,
}

impl Subduction {
    /// `true` when nothing but a scalar is left over.
    pub fn reduced_to_constant(&self) -> bool {
        self.r.is_constant()
    }

    /// `q` rebuilt from the trace.
    pub fn expand_q(&self, g: &GeneratorSet) -> Polynomial {
        let mut q = Polynomial::zero();
        for step in &self.trace {
            if let Step::Subducted {
                coefficient,
                generators,
                ..
            } = step
            {
                q = &q + &g.product(generators).scale(coefficient);
            }
        }
        q
    }

    /// Re-check the contract: `q + r = f`, `q` matches the trace, and every
    /// subduction step's generators multiply to its monomial.
    pub fn verify(&self, f: &Polynomial, g: &GeneratorSet) -> bool {
        let steps_ok = self.trace.iter().all(|s| match s {
            Step::Subducted {
                monomial, generators, ..
            } => &g.initial_product(generators) == monomial,
            Step::Remainder { .. } => true,
        });
        steps_ok && &(&self.q + &self.r) == f && self.expand_q(g) == self.q
    }

    pub fn steps_summary(&self) -> TraceSummary {
        let subducted = self.trace.iter().filter(|s| matches!(s, Step::Subducted { .. })).count();
        TraceSummary {
            subducted,
            remainder_terms: self.trace.len() - subducted,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceSummary {
    pub subducted: usize,
    pub remainder_terms: usize,
}

pub fn subduction(f: &Polynomial, g: &GeneratorSet, ord: &MonomialOrder) -> Result<Subduction, AlgebraError> {
    subduction_with_cap(f, g, ord, DEFAULT_ITERATION_CAP)
}

/// Subduce `f` by `g`. The scalar left when the loop stops is added to `r`,
/// so `f = q + r` holds exactly.
pub fn subduction_with_cap(
    f: &Polynomial,
    g: &GeneratorSet,
    ord: &MonomialOrder,
    cap: usize,
) -> Result<Subduction, AlgebraError> {
    let mut p = f.clone();
    let mut q = Polynomial::zero();
    let mut r = Polynomial::zero();
    let mut trace = Vec::new();
    let mut iterations = 0;
    while !p.is_constant() {
        iterations += 1;
        if iterations > cap {
            return Err(AlgebraError::IterationCap(cap));
        }
        let (m, c) = p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())).expect("nonconstant");
        match represent_initial(&m, g) {
            Some(generators) => {
                let prod = g.product(&generators);
                let (_, lead) = prod.leading_term(ord).expect("product of generators is nonzero");
                let coefficient = &c / lead;
                let sub = prod.scale(&coefficient);
                p = &p - &sub;
                q = &q + &sub;
                trace.push(Step::Subducted {
                    monomial: m,
                    coefficient,
                    generators,
                });
            }
            None => {
                let t = Polynomial::term(m.clone(), c.clone());
                p = &p - &t;
                r = &r + &t;
                trace.push(Step::Remainder {
                    monomial: m,
                    coefficient: c,
                });
            }
        }
    }
    r = &r + &p;
    Ok(Subduction { q, r, trace })
}
