use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::classify::{Method, Verdict};
use crate::error::CheckError;
use crate::lattice::{build_lattice, DistributiveLattice};
use crate::poset::{serialize_poset, Poset};
use crate::toric::{cocomparability_graph, WalkStream};

use super::{check_lattice, prepare, CheckOptions, CheckReport, Status};

/// Closure of `seed` under join and meet, as a lattice over the same base.
///
/// # Panics
/// If `seed` is empty or names an element outside `l`.
pub fn minimal_sublattice(l: &DistributiveLattice, seed: &[usize]) -> DistributiveLattice {
    assert!(!seed.is_empty(), "seed must be nonempty");
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            for &b in &current {
                set.insert(l.join(a, b));
                set.insert(l.meet(a, b));
            }
        }
        if set.len() == before {
            break;
        }
    }
    // ambient indices already follow a linear extension
    let family = set.iter().map(|&i| l.element(i).mask()).collect();
    DistributiveLattice::from_family(l.base().clone(), family).expect("closure is a sublattice")
}

/// One walk's minimal sublattice and its own verdict.
#[derive(Clone, Debug, Serialize)]
pub struct SublatticeRow {
    /// Walk edges as 1-based ambient indices.
    pub walk: Vec<(usize, usize)>,
    /// Sublattice elements as 1-based ambient indices.
    pub elements: Vec<usize>,
    pub status: Status,
}

/// Verdict assembled from the minimal sublattice of every walk, each checked
/// on its own. Identical sublattices are checked once.
pub fn check_via_sublattices(p: &Poset, opts: &CheckOptions) -> Result<CheckReport, CheckError> {
    let l = build_lattice(p);
    let g = cocomparability_graph(&l);
    let bound = opts.bound.unwrap_or(2 * g.edges().len()).max(4);
    let prep = prepare(&l, opts.order.as_deref())?;
    let stream = WalkStream::new(&g, bound, opts.exec);
    let complete = stream.complete();

    let sub_opts = CheckOptions {
        order: None,
        ..opts.clone()
    };
    let mut memo: HashMap<Vec<usize>, CheckReport> = HashMap::new();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    'outer: for (_, batch) in stream {
        for b in batch {
            let sub = minimal_sublattice(&l, b.walk.vertices());
            let elements: Vec<usize> = (0..sub.len())
                .map(|i| l.index_of(sub.element(i).mask()).expect("sublattice element") + 1)
                .collect();
            if !memo.contains_key(&elements) {
                memo.insert(elements.clone(), check_lattice(&sub, &sub_opts)?);
            }
            let sub_report = &memo[&elements];
            rows.push(SublatticeRow {
                walk: b.edges_one_based(),
                elements,
                status: sub_report.status,
            });
            if sub_report.status == Status::Fail {
                failures.extend(sub_report.failures.iter().cloned());
                if !opts.full {
                    break 'outer;
                }
            }
        }
    }

    let complete = complete && memo.values().all(|r| r.complete);
    let status = match (failures.is_empty(), complete) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::PassUpToBound,
    };
    Ok(CheckReport {
        poset: serialize_poset(p),
        lattice_size: l.len(),
        order: prep.order.describe(),
        generator_count: prep.gens.len(),
        graph_edges: g.edges().len(),
        bipartite: g.two_coloring().is_some(),
        complete,
        bound,
        walk_count: rows.len(),
        status,
        verdict: Verdict {
            khovanskii: failures.is_empty(),
            witness: failures.first().cloned(),
            method: Method::Direct,
        },
        failures,
        walks: Vec::new(),
        sublattices: Some(rows),
        elapsed_ms: None,
    })
}
