//! Forbidden-subposet tests, composition matrices and snake lattices.

mod compmat;
mod snake;

pub use compmat::{composition_matrix, downset_chain, poset_from_composition_matrix, CompositionMatrix, DownsetChain};
pub use snake::{recognize_snake, snake_poset, Letter, SnakeWord, MAX_SNAKE_LETTERS};

use serde::{Deserialize, Serialize};

use crate::poset::{bits, ordinal_decompose, width, Poset};

/// Four elements `a < b`, `c < d` with `{a, b}` and `{c, d}` mutually
/// incomparable, if any. Returned as `[a, b, c, d]`.
pub fn find_2plus2(p: &Poset) -> Option<[usize; 4]> {
    for a in 0..p.len() {
        for b in bits(p.strict_up_mask(a)) {
            let outside = !(p.up_mask(a) | p.down_mask(a) | p.up_mask(b) | p.down_mask(b)) & p.all_mask();
            for c in bits(outside) {
                if let Some(d) = bits(p.strict_up_mask(c) & outside).next() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// `true` iff the strict down-sets `D(x)` are totally ordered by inclusion.
pub fn is_2plus2_free(p: &Poset) -> bool {
    let downs: Vec<u64> = (0..p.len()).map(|i| p.strict_down_mask(i)).collect();
    downs
        .iter()
        .all(|&x| downs.iter().all(|&y| x & !y == 0 || y & !x == 0))
}

/// `true` iff `p` has no 3-element antichain.
pub fn is_1plus1plus1_free(p: &Poset) -> bool {
    width(p) <= 2
}

/// `true` iff `p` is both (2+2)-free and (1+1+1)-free.
pub fn is_free(p: &Poset) -> bool {
    is_2plus2_free(p) && is_1plus1plus1_free(p)
}

/// Combinatorial prediction of the Khovanskii property: every ordinal
/// summand is (2+2)-free and (1+1+1)-free.
pub fn predict_khovanskii(p: &Poset) -> bool {
    ordinal_decompose(p).iter().all(is_free)
}

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Predicted,
    Snake,
}

/// A failing walk together with the data that certifies the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Edges as 1-based lattice indices, in walk order.
    pub walk: Vec<(usize, usize)>,
    pub binomial: String,
    pub expansion: String,
    pub remainder: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub khovanskii: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl Verdict {
    pub fn predicted(p: &Poset) -> Self {
        Self {
            khovanskii: predict_khovanskii(p),
            witness: None,
            method: Method::Predicted,
        }
    }
}
