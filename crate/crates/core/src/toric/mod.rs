//! Co-comparability graphs, closed walks and the binomials of their toric ideals.

mod walks;

pub use walks::{
    canonical_walk, even_cycles, substitute, toric_generators, ClosedWalk, ToricGenerators, WalkBinomial, WalkStream,
};

use std::collections::{HashMap, VecDeque};

use crate::lattice::DistributiveLattice;

/// Simple undirected graph; for lattices the vertices are element indices and
/// `{i, j}` is an edge iff `α_i` and `α_j` are incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoCompGraph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
}

pub fn cocomparability_graph(l: &DistributiveLattice) -> CoCompGraph {
    let labels = (0..l.len()).map(|i| l.element_label(i)).collect();
    CoCompGraph::with_labels(labels, &l.incomparable_pairs())
}

impl CoCompGraph {
    /// A graph on `0..n` labelled `1..=n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::with_labels((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = labels.len();
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                assert!(a != b && a < n && b < n, "edge ({a}, {b}) is not simple on {n} vertices");
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &e {
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let edge_index = e.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Self {
            labels,
            edges: e,
            adj,
            edge_index,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// A proper 2-colouring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.num_vertices();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("queued vertices are coloured");
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all vertices visited")).collect())
    }

    /// Shortest-path distances from `s`; unreachable vertices get `usize::MAX`.
    pub(crate) fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.num_vertices()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graphviz rendering; vertices are named by their labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cocomparability {\n");
        for (v, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  {} [label=\"{}\"];\n", v + 1, l));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  {} -- {};\n", a + 1, b + 1));
        }
        s.push_str("}\n");
        s
    }
}

pub fn is_bipartite(g: &CoCompGraph) -> bool {
    g.two_coloring().is_some()
}
