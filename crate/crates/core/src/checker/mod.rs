//! End-to-end Khovanskii verdicts, the sublattice reduction and the
//! classification sweep.

mod sublattice;
mod sweep;

pub use sublattice::{check_via_sublattices, minimal_sublattice, SublatticeRow};
pub use sweep::{order_independence_experiment, theorem_sweep, OrderReport, OrderRun, SweepReport, SweepRow};

use std::time::Instant;

use serde::Serialize;

use crate::classify::{Method, Verdict, Witness};
use crate::error::CheckError;
use crate::lattice::{build_lattice, DistributiveLattice};
use crate::par::{self, Execution};
use crate::polyalg::{
    compatible_order, hibi_generators, order_from_extension, subduction, to_text, GeneratorSet, MonomialOrder,
    TraceSummary,
};
use crate::poset::{serialize_poset, Poset};
use crate::toric::{cocomparability_graph, substitute, WalkBinomial, WalkStream};

/// Walks are subduced in parallel chunks of this size; a failure inside a
/// chunk stops the scan after that chunk.
const CHUNK: usize = 64;

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    /// Linear extension of the lattice (element indices, bottom first).
    pub order: Option<Vec<usize>>,
    /// Walk-length bound for non-bipartite graphs; defaults to `2·|E|`.
    pub bound: Option<usize>,
    /// Keep going after the first failing walk.
    pub full: bool,
    pub exec: Execution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    PassUpToBound,
    Fail,
}

/// Outcome of subducing one substituted walk binomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkTrace {
    /// Edges as 1-based element pairs, in walk order.
    pub walk: Vec<(usize, usize)>,
    pub binomial: String,
    pub reduced: bool,
    pub steps: TraceSummary,
    pub remainder: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub poset: String,
    pub lattice_size: usize,
    pub order: String,
    pub generator_count: usize,
    pub graph_edges: usize,
    pub bipartite: bool,
    /// `true` when the examined walks generate the whole toric ideal.
    pub complete: bool,
    pub bound: usize,
    pub walk_count: usize,
    pub status: Status,
    pub verdict: Verdict,
    /// All failing walks (only the first unless `full` was requested).
    pub failures: Vec<Witness>,
    pub walks: Vec<WalkTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sublattices: Option<Vec<SublatticeRow>>,
    /// Wall time; left out of JSON unless set by the caller.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Check `F_{L(p)}` against the toric generators of the co-comparability graph.
pub fn khovanskii_check(p: &Poset, opts: &CheckOptions) -> Result<CheckReport, CheckError> {
    let start = Instant::now();
    let l = build_lattice(p);
    let mut report = check_lattice(&l, opts)?;
    report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}

pub(crate) struct Prepared {
    pub order: MonomialOrder,
    pub gens: GeneratorSet,
}

pub(crate) fn prepare(l: &DistributiveLattice, order: Option<&[usize]>) -> Result<Prepared, CheckError> {
    let order = match order {
        Some(ext) => order_from_extension(l, ext)?,
        None => compatible_order(l),
    };
    let gens = hibi_generators(l, &order);
    Ok(Prepared { order, gens })
}

/// Subduce one walk binomial; the witness is filled in when it fails.
pub(crate) fn run_walk(b: &WalkBinomial, prep: &Prepared) -> Result<(WalkTrace, Option<Witness>), CheckError> {
    let f = substitute(b, &prep.gens)?;
    let s = subduction(&f, &prep.gens, &prep.order)?;
    debug_assert!(s.verify(&f, &prep.gens), "subduction contract violated");
    let names = prep.gens.names();
    let reduced = s.reduced_to_constant();
    let remainder = to_text(&s.r, &prep.order, names);
    let trace = WalkTrace {
        walk: b.edges_one_based(),
        binomial: b.to_text(),
        reduced,
        steps: s.steps_summary(),
        remainder: remainder.clone(),
    };
    let witness = (!reduced).then(|| Witness {
        walk: b.edges_one_based(),
        binomial: b.to_text(),
        expansion: to_text(&f, &prep.order, names),
        remainder,
    });
    Ok((trace, witness))
}

/// Check an arbitrary lattice of ideals under its index order (or `opts.order`).
pub fn check_lattice(l: &DistributiveLattice, opts: &CheckOptions) -> Result<CheckReport, CheckError> {
    let prep = prepare(l, opts.order.as_deref())?;
    let g = cocomparability_graph(l);
    let bound = opts.bound.unwrap_or(2 * g.edges().len()).max(4);
    let stream = WalkStream::new(&g, bound, opts.exec);
    let bipartite = stream.bipartite();
    let complete = stream.complete();

    let mut walks = Vec::new();
    let mut failures = Vec::new();
    'lengths: for (_, batch) in stream {
        for chunk in batch.chunks(CHUNK) {
            let results = par::map(opts.exec, chunk, |b| run_walk(b, &prep));
            for r in results {
                let (trace, witness) = r?;
                walks.push(trace);
                if let Some(w) = witness {
                    failures.push(w);
                    if !opts.full {
                        break 'lengths;
                    }
                }
            }
        }
    }

    let status = match (failures.is_empty(), complete) {
        (false, _) => Status::Fail,
        (true, true) => Status::Pass,
        (true, false) => Status::PassUpToBound,
    };
    Ok(CheckReport {
        poset: serialize_poset(l.base()),
        lattice_size: l.len(),
        order: prep.order.describe(),
        generator_count: prep.gens.len(),
        graph_edges: g.edges().len(),
        bipartite,
        complete,
        bound,
        walk_count: walks.len(),
        status,
        verdict: Verdict {
            khovanskii: failures.is_empty(),
            witness: failures.first().cloned(),
            method: Method::Direct,
        },
        failures,
        walks,
        sublattices: None,
        elapsed_ms: None,
    })
}
