use std::collections::{HashMap, HashSet};

use crate::error::AlgebraError;
use crate::par::{self, Execution};
use crate::polyalg::{GeneratorSet, Polynomial};

use super::{is_bipartite, CoCompGraph};

/// A closed walk `v_0 v_1 … v_{L-1} v_0`; edge `k` joins `v_k` and `v_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedWalk {
    vertices: Vec<usize>,
}

impl ClosedWalk {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(min, max)` pairs in walk order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let l = self.vertices.len();
        (0..l)
            .map(|k| {
                let (a, b) = (self.vertices[k], self.vertices[(k + 1) % l]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Even length and every step is an edge of `g`.
    pub fn is_valid_in(&self, g: &CoCompGraph) -> bool {
        !self.vertices.is_empty() && self.len() % 2 == 0 && self.edges().iter().all(|&(a, b)| g.edge_id(a, b).is_some())
    }

    /// `true` when no vertex repeats.
    pub fn is_cycle(&self) -> bool {
        let set: HashSet<_> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }
}

/// Lexicographically least vertex sequence over all rotations and reflections.
pub fn canonical_walk(vertices: &[usize]) -> Vec<usize> {
    let l = vertices.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..l {
        for dir in [true, false] {
            let cand: Vec<usize> = (0..l)
                .map(|k| {
                    if dir {
                        vertices[(start + k) % l]
                    } else {
                        vertices[(start + l - k) % l]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Sorted edge multiset: one side of a walk binomial.
type EdgeMultiset = Vec<(usize, usize)>;

/// A walk with `p_Γ = ∏ X_{odd positions} − ∏ X_{even positions}`
/// (positions counted from 1). Both sides are sorted edge multisets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkBinomial {
    pub walk: ClosedWalk,
    pub plus: Vec<(usize, usize)>,
    pub minus: Vec<(usize, usize)>,
}

impl WalkBinomial {
    pub fn from_walk(walk: ClosedWalk) -> Self {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (k, e) in walk.edges().into_iter().enumerate() {
            if k % 2 == 0 {
                plus.push(e);
            } else {
                minus.push(e);
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        Self { walk, plus, minus }
    }

    pub fn degree(&self) -> usize {
        self.plus.len()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    /// The binomial up to sign.
    fn key(&self) -> (EdgeMultiset, EdgeMultiset) {
        if self.plus <= self.minus {
            (self.plus.clone(), self.minus.clone())
        } else {
            (self.minus.clone(), self.plus.clone())
        }
    }

    /// `X{a,b}*X{c,d} - X{e,f}*X{g,h}` with 1-based vertices, edges in walk order.
    pub fn to_text(&self) -> String {
        let edges = self.walk.edges();
        let side = |parity: usize| {
            edges
                .iter()
                .enumerate()
                .filter(|(k, _)| k % 2 == parity)
                .map(|(_, &(a, b))| format!("X{{{},{}}}", a + 1, b + 1))
                .collect::<Vec<_>>()
                .join("*")
        };
        format!("{} - {}", side(0), side(1))
    }

    /// Walk edges as 1-based vertex pairs.
    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.walk.edges().into_iter().map(|(a, b)| (a + 1, b + 1)).collect()
    }
}

/// `p_Γ` with every `X_{j,k}` replaced by `f_{α_j,α_k}`.
pub fn substitute(b: &WalkBinomial, g: &GeneratorSet) -> Result<Polynomial, AlgebraError> {
    let side = |edges: &[(usize, usize)]| -> Result<Polynomial, AlgebraError> {
        let ids = edges
            .iter()
            .map(|&(a, c)| g.index_of(a, c).ok_or(AlgebraError::UnmappedEdge((a, c))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(g.product(&ids))
    };
    Ok(&side(&b.plus)? - &side(&b.minus)?)
}

/// All even cycles, each once, sorted by length then canonical vertex sequence.
pub fn even_cycles(g: &CoCompGraph) -> Vec<ClosedWalk> {
    let n = g.num_vertices();
    (4..=n)
        .step_by(2)
        .flat_map(|len| closed_walks(g, len, 0..n, true, Execution::default()))
        .collect()
}

/// Closed walks of length `len` whose least vertex lies in `roots`, as sorted
/// canonical vertex sequences (each starts at its least vertex). `simple` restricts to cycles. Otherwise walks that
/// revisit a vertex after an even number of steps, or use an edge at both
/// parities, are skipped: each splits off a shorter closed walk whose
/// binomial divides theirs, so none of them is primitive.
fn closed_walks(
    g: &CoCompGraph,
    len: usize,
    roots: std::ops::Range<usize>,
    simple: bool,
    exec: Execution,
) -> Vec<ClosedWalk> {
    let roots: Vec<usize> = roots.collect();
    let per_root = par::map(exec, &roots, |&r| {
        let mut out = Vec::new();
        let mut dfs = Dfs {
            g,
            root: r,
            len,
            simple,
            dist: g.distances_from(r),
            path: vec![r],
            seen_at: vec![Vec::new(); g.num_vertices()],
            parity_use: vec![[0u16; 2]; g.edges().len()],
            out: &mut out,
        };
        dfs.seen_at[r].push(0);
        dfs.step();
        out
    });
    let mut all: Vec<Vec<usize>> = per_root.into_iter().flatten().map(|v| canonical_walk(&v)).collect();
    all.sort_unstable();
    all.dedup();
    all.into_iter().map(ClosedWalk::new).collect()
}

struct Dfs<'a> {
    g: &'a CoCompGraph,
    root: usize,
    len: usize,
    simple: bool,
    dist: Vec<usize>,
    path: Vec<usize>,
    seen_at: Vec<Vec<usize>>,
    parity_use: Vec<[u16; 2]>,
    out: &'a mut Vec<Vec<usize>>,
}

impl Dfs<'_> {
    fn step(&mut self) {
        let d = self.path.len();
        let u = self.path[d - 1];
        let parity = (d - 1) % 2;
        for &w in self.g.neighbors(u) {
            if w < self.root {
                continue;
            }
            let e = self.g.edge_id(u, w).expect("neighbors share an edge");
            if self.parity_use[e][1 - parity] > 0 {
                continue;
            }
            if d == self.len {
                // one orientation per walk
                if w == self.root && self.path[1] < self.path[d - 1] {
                    self.out.push(self.path.clone());
                }
                continue;
            }
            if self.simple && !self.seen_at[w].is_empty() {
                continue;
            }
            if self.seen_at[w].iter().any(|&i| (d - i) % 2 == 0) {
                continue;
            }
            if self.dist[w] > self.len - d {
                continue;
            }
            self.path.push(w);
            self.seen_at[w].push(d);
            self.parity_use[e][parity] += 1;
            self.step();
            self.parity_use[e][parity] -= 1;
            self.seen_at[w].pop();
            self.path.pop();
        }
    }
}

fn multiset_divides(small: &[(usize, usize)], big: &[(usize, usize)]) -> bool {
    let mut j = 0;
    for x in small {
        while j < big.len() && big[j] < *x {
            j += 1;
        }
        if j == big.len() || big[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Walk binomials in batches, shortest walks first and canonical order within
/// a length. A batch covers the walks rooted at a few consecutive least
/// vertices, so a caller that stops early never builds a whole length.
///
/// On bipartite graphs the walks are the even cycles and together form a
/// complete generating set. Otherwise every nonzero closed walk up to `bound`
/// is enumerated, deduplicated by binomial up to sign, and dropped when a
/// binomial already retained at a shorter length divides it termwise.
pub struct WalkStream<'g> {
    g: &'g CoCompGraph,
    bipartite: bool,
    limit: usize,
    next_len: usize,
    next_root: usize,
    /// Binomial keys (up to sign) already emitted at `next_len`.
    keys: HashSet<(EdgeMultiset, EdgeMultiset)>,
    exec: Execution,
    /// Retained binomials keyed by each side, mapping to the other side.
    retained: HashMap<EdgeMultiset, Vec<EdgeMultiset>>,
}

/// Least vertices handled per batch.
const ROOT_GROUP: usize = 8;

impl<'g> WalkStream<'g> {
    pub fn new(g: &'g CoCompGraph, bound: usize, exec: Execution) -> Self {
        let bipartite = is_bipartite(g);
        let limit = if bipartite { g.num_vertices() } else { bound };
        Self {
            g,
            bipartite,
            limit,
            next_len: 4,
            next_root: 0,
            keys: HashSet::new(),
            exec,
            retained: HashMap::new(),
        }
    }

    /// `true` when the stream yields a complete generating set.
    pub fn complete(&self) -> bool {
        self.bipartite
    }

    pub fn bipartite(&self) -> bool {
        self.bipartite
    }
}

impl WalkStream<'_> {
    /// Some retained binomial divides `b` termwise, in either orientation.
    fn dominated(&self, b: &WalkBinomial) -> bool {
        let mut sub = Vec::with_capacity(b.plus.len());
        sub_multisets(&b.plus, 0, &mut sub, &mut |p| {
            self.retained
                .get(p)
                .is_some_and(|ms| ms.iter().any(|m| multiset_divides(m, &b.minus)))
        })
    }
}

/// Visit every sub-multiset of the sorted `items` once; stops at the first
/// `true` from `f`.
fn sub_multisets<T: Clone + PartialEq>(
    items: &[T],
    from: usize,
    cur: &mut Vec<T>,
    f: &mut impl FnMut(&[T]) -> bool,
) -> bool {
    if !cur.is_empty() && f(cur) {
        return true;
    }
    for i in from..items.len() {
        // skip duplicates at the same depth
        if i > from && items[i] == items[i - 1] {
            continue;
        }
        cur.push(items[i].clone());
        let hit = sub_multisets(items, i + 1, cur, f);
        cur.pop();
        if hit {
            return true;
        }
    }
    false
}

impl Iterator for WalkStream<'_> {
    type Item = (usize, Vec<WalkBinomial>);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.g.num_vertices();
        loop {
            if self.next_len > self.limit {
                return None;
            }
            if self.next_root >= n {
                self.next_len += 2;
                self.next_root = 0;
                self.keys.clear();
                continue;
            }
            let len = self.next_len;
            let roots = self.next_root..n.min(self.next_root + ROOT_GROUP);
            self.next_root = roots.end;
            let mut batch = Vec::new();
            for w in closed_walks(self.g, len, roots, self.bipartite, self.exec) {
                let b = WalkBinomial::from_walk(w);
                if b.is_zero() || !self.keys.insert(b.key()) {
                    continue;
                }
                // a same-length divisor would be equal up to sign, caught by `keys`
                if !self.bipartite && self.dominated(&b) {
                    continue;
                }
                batch.push(b);
            }
            if !self.bipartite {
                for b in &batch {
                    self.retained.entry(b.plus.clone()).or_default().push(b.minus.clone());
                    self.retained.entry(b.minus.clone()).or_default().push(b.plus.clone());
                }
            }
            if !batch.is_empty() {
                return Some((len, batch));
            }
        }
    }
}

/// Result of [`toric_generators`].
#[derive(Clone, Debug)]
pub struct ToricGenerators {
    pub binomials: Vec<WalkBinomial>,
    /// `true` when the set is known to generate the whole toric ideal.
    pub complete: bool,
    pub bound: usize,
}

/// Generators of the toric ideal of `g` (complete on bipartite graphs,
/// otherwise all primitive candidates of length at most `bound`).
pub fn toric_generators(g: &CoCompGraph, bound: usize) -> ToricGenerators {
    let stream = WalkStream::new(g, bound, Execution::default());
    let complete = stream.complete();
    ToricGenerators {
        binomials: stream.flat_map(|(_, b)| b).collect(),
        complete,
        bound,
    }
}
