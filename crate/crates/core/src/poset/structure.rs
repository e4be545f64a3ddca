use super::{bit, bits, Poset};
use crate::error::PosetError;

/// Size of a maximum antichain.
pub fn width(p: &Poset) -> usize {
    let n = p.len();
    let incomparable: Vec<u64> = (0..n)
        .map(|i| (0..n).filter(|&j| !p.comparable(i, j)).fold(0u64, |acc, j| acc | bit(j)))
        .collect();
    let mut best = 0;
    max_antichain(p.all_mask(), &incomparable, 0, &mut best);
    best
}

fn max_antichain(cands: u64, incomparable: &[u64], current: usize, best: &mut usize) {
    if current + cands.count_ones() as usize <= *best {
        return;
    }
    if cands == 0 {
        *best = current;
        return;
    }
    let i = cands.trailing_zeros() as usize;
    max_antichain(cands & incomparable[i], incomparable, current + 1, best);
    max_antichain(cands & !bit(i), incomparable, current, best);
}

/// `p ⊕ q`: every element of `q` is placed above every element of `p`.
pub fn ordinal_sum(p: &Poset, q: &Poset) -> Result<Poset, PosetError> {
    if let Some(l) = q.labels().iter().find(|l| p.index_of(l).is_some()) {
        return Err(PosetError::LabelCollision(l.clone()));
    }
    let off = p.len();
    let mut rel: Vec<(usize, usize)> = p.covers().to_vec();
    rel.extend(q.covers().iter().map(|&(a, b)| (a + off, b + off)));
    let maxima: Vec<usize> = (0..p.len()).filter(|&i| p.strict_up_mask(i) == 0).collect();
    let minima: Vec<usize> = bits(q.minimal_mask()).collect();
    for &a in &maxima {
        for &b in &minima {
            rel.push((a, b + off));
        }
    }
    Poset::new(p.labels().iter().chain(q.labels()).cloned(), &rel)
}

/// Split `p` into its ordinal-irreducible summands, bottom first.
///
/// A cut is a prefix of a linear extension whose elements all lie below every
/// remaining element; every cut of `p` is such a prefix.
pub fn ordinal_decompose(p: &Poset) -> Vec<Poset> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (p.down_mask(i).count_ones(), i));

    let mut blocks = Vec::new();
    let mut start_mask = 0u64;
    let mut prefix = 0u64;
    for (k, &v) in order.iter().enumerate() {
        prefix |= bit(v);
        if k + 1 == n {
            break;
        }
        let cut = order[k + 1..].iter().all(|&w| p.down_mask(w) & prefix == prefix);
        if cut {
            blocks.push(p.induced(prefix & !start_mask));
            start_mask = prefix;
        }
    }
    blocks.push(p.induced(p.all_mask() & !start_mask));
    blocks
}

/// An order isomorphism `p → q` as an index map, if one exists.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let hp = p.heights();
    let hq = q.heights();
    let inv = |s: &Poset, h: &[usize], i: usize| {
        (
            h[i],
            s.down_mask(i).count_ones(),
            s.up_mask(i).count_ones(),
            s.covers().iter().filter(|c| c.1 == i).count(),
            s.covers().iter().filter(|c| c.0 == i).count(),
        )
    };
    let ip: Vec<_> = (0..n).map(|i| inv(p, &hp, i)).collect();
    let iq: Vec<_> = (0..n).map(|i| inv(q, &hq, i)).collect();
    let mut sp = ip.clone();
    let mut sq = iq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }

    // Assign p's elements bottom-up so comparabilities with earlier choices prune early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (hp[i], i));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;

    fn go(
        k: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        ip: &[(usize, u32, u32, usize, usize)],
        iq: &[(usize, u32, u32, usize, usize)],
        map: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for j in 0..q.len() {
            if *used & bit(j) != 0 || ip[i] != iq[j] {
                continue;
            }
            let consistent = order[..k].iter().all(|&a| {
                let b = map[a];
                p.leq(a, i) == q.leq(b, j) && p.leq(i, a) == q.leq(j, b)
            });
            if !consistent {
                continue;
            }
            map[i] = j;
            *used |= bit(j);
            if go(k + 1, order, p, q, ip, iq, map, used) {
                return true;
            }
            *used &= !bit(j);
            map[i] = usize::MAX;
        }
        false
    }

    go(0, &order, p, q, &ip, &iq, &mut map, &mut used).then_some(map)
}

/// `true` iff `p` and `q` are order-isomorphic.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}
