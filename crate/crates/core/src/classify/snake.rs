use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::DistributiveLattice;
use crate::poset::{bit, bits, Poset, MAX_ELEMENTS};

/// Words longer than this would need more than 64 join-irreducibles.
pub const MAX_SNAKE_LETTERS: usize = MAX_ELEMENTS - 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

/// A snake word; the leading empty letter is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SnakeWord(pub Vec<Letter>);

impl SnakeWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words of exactly `len` letters, `L` before `R`.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = SnakeWord> {
        (0u64..1 << len).map(move |code| {
            SnakeWord(
                (0..len)
                    .map(|i| if code >> (len - 1 - i) & 1 == 0 { Letter::L } else { Letter::R })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for SnakeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::L => "L",
                Letter::R => "R",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid snake word `{0}`: expected letters L and R, optionally prefixed by ε")]
pub struct SnakeWordError(pub String);

impl FromStr for SnakeWord {
    type Err = SnakeWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t.strip_prefix('ε').unwrap_or(t);
        body.chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                _ => Err(SnakeWordError(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SnakeWord)
    }
}

impl Serialize for SnakeWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SnakeWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cover pairs `(i, j)`, `α_i ⋖ α_j`, of the snake lattice on `α_0 … α_{2l+3}`.
fn snake_covers(w: &SnakeWord) -> Vec<(usize, usize)> {
    let mut covers = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
    for l in 1..=w.len() {
        covers.push((2 * l + 1, 2 * l + 3));
        covers.push((2 * l + 2, 2 * l + 3));
        let odd = if l == 1 {
            w.0[0] == Letter::L
        } else {
            w.0[l - 2] != w.0[l - 1]
        };
        covers.push((if odd { 2 * l - 1 } else { 2 * l }, 2 * l + 2));
    }
    covers.sort_unstable();
    covers
}

/// The snake lattice `P(w)` with element `i` equal to `α_i`.
///
/// The base poset is its set of join-irreducibles `α_k`, labelled `j{k}`.
///
/// # Panics
/// If `w` has more than [`MAX_SNAKE_LETTERS`] letters.
pub fn snake_poset(w: &SnakeWord) -> DistributiveLattice {
    assert!(
        w.len() <= MAX_SNAKE_LETTERS,
        "snake words are limited to {MAX_SNAKE_LETTERS} letters"
    );
    let size = 2 * w.len() + 4;
    let covers = snake_covers(w);
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); size];
    for &(i, j) in &covers {
        lower[j].push(i);
    }
    let irreducible: Vec<usize> = (0..size).filter(|&j| lower[j].len() == 1).collect();
    let slot = |k: usize| irreducible.iter().position(|&j| j == k);

    // α indices increase along every cover, so one pass builds each ideal
    let mut ideals = vec![0u64; size];
    for j in 0..size {
        let mut m = slot(j).map_or(0, bit);
        for &i in &lower[j] {
            m |= ideals[i];
        }
        ideals[j] = m;
    }
    let labels: Vec<String> = irreducible.iter().map(|k| format!("j{k}")).collect();
    let down: Vec<u64> = irreducible.iter().map(|&k| ideals[k]).collect();
    let base = Poset::new(
        labels,
        &down
            .iter()
            .enumerate()
            .flat_map(|(b, &d)| bits(d).filter(move |&a| a != b).map(move |a| (a, b)))
            .collect::<Vec<_>>(),
    )
    .expect("join-irreducibles of a snake form a poset");
    DistributiveLattice::from_family(base, ideals).expect("snake words give distributive lattices")
}

/// A word `w` with `snake_poset(w)` isomorphic to `l`, if one exists.
///
/// The atom with the smaller lattice index is tried as `α_1` first, so a
/// lattice whose indices already follow the α numbering gets its own word
/// back. Swapping the atoms flips every letter.
pub fn recognize_snake(l: &DistributiveLattice) -> Option<SnakeWord> {
    let n = l.len();
    if n < 4 || n % 2 == 1 {
        return None;
    }
    let letters = n / 2 - 2;
    let ranks = l.ranks();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); letters + 3];
    for (i, &r) in ranks.iter().enumerate() {
        if r > letters + 2 {
            return None;
        }
        levels[r].push(i);
    }
    if levels[0].len() != 1
        || levels[letters + 2].len() != 1
        || levels[1..=letters + 1].iter().any(|lv| lv.len() != 2)
    {
        return None;
    }
    let covered = |i: usize, j: usize| l.covers().binary_search(&(i, j)).is_ok();

    for flip in [false, true] {
        let (a1, a2) = if flip {
            (levels[1][1], levels[1][0])
        } else {
            (levels[1][0], levels[1][1])
        };
        let mut alpha = vec![levels[0][0], a1, a2];
        let mut word = Vec::with_capacity(letters);
        let mut ok = true;
        for k in 1..=letters + 1 {
            // the element of rank k + 1 above both α_{2k-1} and α_{2k}
            let (x, y) = (alpha[2 * k - 1], alpha[2 * k]);
            let Some(&top) = levels[k + 1].iter().find(|&&t| covered(x, t) && covered(y, t)) else {
                ok = false;
                break;
            };
            alpha.push(top);
            if k == letters + 1 {
                break;
            }
            let Some(&side) = levels[k + 1].iter().find(|&&t| t != top) else {
                ok = false;
                break;
            };
            // α_{2k+2} sits above exactly one of α_{2k-1}, α_{2k}
            let odd = match (covered(x, side), covered(y, side)) {
                (true, false) => true,
                (false, true) => false,
                _ => {
                    ok = false;
                    break;
                }
            };
            let letter = if k == 1 {
                if odd {
                    Letter::L
                } else {
                    Letter::R
                }
            } else {
                let prev: Letter = word[k - 2];
                match (odd, prev) {
                    (true, Letter::L) | (false, Letter::R) => Letter::R,
                    _ => Letter::L,
                }
            };
            word.push(letter);
            alpha.push(side);
        }
        if !ok || alpha.len() != n {
            continue;
        }
        let w = SnakeWord(word);
        let mut mapped: Vec<(usize, usize)> = snake_covers(&w).iter().map(|&(i, j)| (alpha[i], alpha[j])).collect();
        mapped.sort_unstable();
        if mapped == l.covers() {
            return Some(w);
        }
    }
    None
}
