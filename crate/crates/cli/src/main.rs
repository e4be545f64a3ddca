//! `hk`: Khovanskii-basis checks for Hibi-type generators from the command line.
//!
//! Exit status: 0 on success or a passing verdict, 1 on a failing verdict
//! (or sweep disagreement, or a poset that is not a snake), 2 on bad input.

mod input;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hk_core::checker::{
    check_via_sublattices, khovanskii_check, order_independence_experiment, theorem_sweep, CheckOptions, Status,
};
use hk_core::classify::{
    composition_matrix, find_2plus2, is_1plus1plus1_free, is_2plus2_free, is_free, predict_khovanskii,
    recognize_snake, snake_poset,
};
use hk_core::poset::{ordinal_decompose, serialize_poset};
use hk_core::toric::cocomparability_graph;
use hk_core::{build_lattice, par, AlgebraError, CheckError, DistributiveLattice, Execution, Poset};

use input::{load, Loaded};

#[derive(Parser)]
#[command(name = "hk", version, about = "Khovanskii-basis checks for Hibi-type generators")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Copy)]
struct Format {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Human-readable text instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Run the direct Khovanskii check on a poset file.
    Check {
        poset: String,
        /// Linear extension of the lattice as comma-separated 1-based indices.
        #[arg(long)]
        order: Option<String>,
        /// Walk-length bound for non-bipartite graphs (even, at least 4).
        #[arg(long)]
        bound: Option<usize>,
        /// Report every failing walk instead of stopping at the first.
        #[arg(long)]
        full: bool,
        /// Assemble the verdict from the minimal sublattice of each walk.
        #[arg(long)]
        via_sublattices: bool,
        /// Include wall time in the report (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Forbidden-subposet tests, ordinal summands and snake recognition.
    Classify {
        poset: String,
        #[command(flatten)]
        format: Format,
    },
    /// The lattice of order ideals.
    Lattice {
        poset: String,
        /// Graphviz Hasse diagram.
        #[arg(long, conflicts_with_all = ["graph", "json", "pretty"])]
        dot: bool,
        /// Graphviz co-comparability graph.
        #[arg(long, conflicts_with_all = ["json", "pretty"])]
        graph: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Composition matrix of a (2+2)-free poset.
    Compmat {
        poset: String,
        #[command(flatten)]
        format: Format,
    },
    /// Build the snake lattice of a word, or recognize one from a poset file.
    ///
    /// A file whose first line is `poset` is recognized; any other file holds
    /// a word such as `εLLRL`.
    Snake {
        #[arg(required_unless_present = "word", conflicts_with = "word")]
        input: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, conflicts_with_all = ["json", "pretty"])]
        dot: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Compare freeness, snake recognition and the direct check on every poset.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Re-run the check under several linear extensions.
    Orders {
        poset: String,
        /// Number of distinct extensions to try.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[command(flatten)]
        format: Format,
    },
}

/// A message for stderr and the exit status that goes with it.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        let code = if matches!(e, CheckError::Disagreement { .. }) { 1 } else { 2 };
        Self { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("hk: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn exec_for(jobs: Option<usize>) -> Execution {
    if jobs == Some(1) {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn poset_arg(path: &str) -> Result<Poset, Failure> {
    match load(path)? {
        Loaded::Poset(p) => Ok(p),
        Loaded::Word(_) => Err(Failure::input(format!("{path}: expected a poset file"))),
    }
}

fn parse_order(text: &str, size: usize) -> Result<Vec<usize>, Failure> {
    let mut ext = Vec::new();
    for tok in text.split(',') {
        let i: usize = tok
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("--order: `{}` is not an index", tok.trim())))?;
        if i == 0 || i > size {
            return Err(Failure::input(format!("--order: index {i} outside 1..={size}")));
        }
        ext.push(i - 1);
    }
    Ok(ext)
}

type Outcome = Result<(String, u8), Failure>;

fn run(verb: Verb) -> Outcome {
    match verb {
        Verb::Check { poset, order, bound, full, via_sublattices, timing, jobs, format } => {
            let p = poset_arg(&poset)?;
            if let Some(b) = bound {
                if b < 4 || b % 2 == 1 {
                    return Err(Failure::input(format!("--bound: expected an even number >= 4, got {b}")));
                }
            }
            let l = build_lattice(&p);
            let order = order.map(|o| parse_order(&o, l.len())).transpose()?;
            let opts = CheckOptions { order, bound, full, exec: exec_for(jobs) };
            let start = Instant::now();
            let result = par::with_jobs(jobs, || {
                if via_sublattices {
                    check_via_sublattices(&p, &opts)
                } else {
                    khovanskii_check(&p, &opts)
                }
            });
            let mut report = result.map_err(|e| match e {
                CheckError::Algebra(AlgebraError::NotLinearExtension(_)) => {
                    Failure::input("--order: not a linear extension of the lattice")
                }
                e => e.into(),
            })?;
            report.elapsed_ms = timing.then(|| start.elapsed().as_secs_f64() * 1e3);
            let code = u8::from(report.status == Status::Fail);
            let text = if format.pretty { render::check(&p, &report) } else { json(&report) };
            Ok((text, code))
        }
        Verb::Classify { poset, format } => {
            let p = poset_arg(&poset)?;
            let c = classify(&p);
            Ok((if format.pretty { render::classification(&c) } else { json(&c) }, 0))
        }
        Verb::Lattice { poset, dot, graph, format } => {
            let p = poset_arg(&poset)?;
            let l = build_lattice(&p);
            let text = if dot {
                l.to_dot()
            } else if graph {
                cocomparability_graph(&l).to_dot()
            } else {
                let v = LatticeView::new(&l);
                if format.pretty {
                    render::lattice(&v)
                } else {
                    json(&v)
                }
            };
            Ok((text, 0))
        }
        Verb::Compmat { poset, format } => {
            let p = poset_arg(&poset)?;
            let m = composition_matrix(&p).map_err(|e| Failure::input(format!("{poset}: {e}")))?;
            let text = if format.pretty { render::matrix(m.cells()) } else { json(&m) };
            Ok((text, 0))
        }
        Verb::Snake { input, word, dot, format } => {
            let loaded = match (input, word) {
                (_, Some(w)) => Loaded::Word(w.parse().map_err(|e| Failure::input(format!("--word: {e}")))?),
                (Some(path), None) => load(&path)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            match loaded {
                Loaded::Word(w) => {
                    let l = snake_poset(&w);
                    if dot {
                        return Ok((l.to_dot(), 0));
                    }
                    let v = SnakeView { word: format!("ε{w}"), lattice: LatticeView::new(&l) };
                    Ok((if format.pretty { render::lattice(&v.lattice) } else { json(&v) }, 0))
                }
                Loaded::Poset(p) => {
                    let l = build_lattice(&p);
                    let word = recognize_snake(&l).map(|w| format!("ε{w}"));
                    let code = u8::from(word.is_none());
                    if dot {
                        return Ok((l.to_dot(), code));
                    }
                    let r = Recognition { poset: serialize_poset(&p), word };
                    let text = if format.pretty {
                        format!("{}\n", r.word.as_deref().unwrap_or("not a snake lattice"))
                    } else {
                        json(&r)
                    };
                    Ok((text, code))
                }
            }
        }
        Verb::Sweep { max_n, jobs, format } => {
            let report = par::with_jobs(jobs, || theorem_sweep(max_n, exec_for(jobs)))?;
            let code = u8::from(!report.all_agree);
            Ok((if format.pretty { render::sweep(&report) } else { json(&report) }, code))
        }
        Verb::Orders { poset, k, format } => {
            let p = poset_arg(&poset)?;
            let report = order_independence_experiment(&p, k.into())?;
            Ok((if format.pretty { render::orders(&report) } else { json(&report) }, 0))
        }
    }
}

#[derive(Serialize)]
struct Summand {
    elements: Vec<String>,
    free: bool,
}

#[derive(Serialize)]
struct Classification {
    poset: String,
    elements: usize,
    two_plus_two_free: bool,
    /// Labels `a < b`, `c < d` of one induced (2+2).
    #[serde(skip_serializing_if = "Option::is_none")]
    two_plus_two: Option<[String; 4]>,
    one_plus_one_plus_one_free: bool,
    free: bool,
    summands: Vec<Summand>,
    predicted_khovanskii: bool,
    /// Only for ordinal-irreducible posets with at least two elements.
    #[serde(skip_serializing_if = "Option::is_none")]
    snake: Option<String>,
}

fn classify(p: &Poset) -> Classification {
    let summands: Vec<Summand> = ordinal_decompose(p)
        .iter()
        .map(|q| Summand { elements: q.labels().to_vec(), free: is_free(q) })
        .collect();
    let snake = (summands.len() == 1 && p.len() >= 2)
        .then(|| recognize_snake(&build_lattice(p)).map(|w| format!("ε{w}")))
        .flatten();
    Classification {
        poset: serialize_poset(p),
        elements: p.len(),
        two_plus_two_free: is_2plus2_free(p),
        two_plus_two: find_2plus2(p).map(|idx| idx.map(|i| p.label(i).to_string())),
        one_plus_one_plus_one_free: is_1plus1plus1_free(p),
        free: is_free(p),
        summands,
        predicted_khovanskii: predict_khovanskii(p),
        snake,
    }
}

#[derive(Serialize)]
struct ElementView {
    index: usize,
    ideal: Vec<String>,
    rank: usize,
}

#[derive(Serialize)]
struct LatticeView {
    size: usize,
    width: usize,
    elements: Vec<ElementView>,
    /// 1-based index pairs `(lower, upper)`.
    covers: Vec<(usize, usize)>,
    cocomparability_edges: usize,
    bipartite: bool,
}

impl LatticeView {
    fn new(l: &DistributiveLattice) -> Self {
        let ranks = l.ranks();
        let g = cocomparability_graph(l);
        Self {
            size: l.len(),
            width: l.width(),
            elements: (0..l.len())
                .map(|i| ElementView {
                    index: i + 1,
                    ideal: l.base().mask_labels(l.element(i).mask()).into_iter().map(String::from).collect(),
                    rank: ranks[i],
                })
                .collect(),
            covers: l.covers().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
            cocomparability_edges: g.edges().len(),
            bipartite: g.two_coloring().is_some(),
        }
    }
}

#[derive(Serialize)]
struct SnakeView {
    word: String,
    lattice: LatticeView,
}

#[derive(Serialize)]
struct Recognition {
    poset: String,
    word: Option<String>,
}
