//! `--pretty` text renderings. Column layouts are fixed so output stays
//! byte-identical between runs.

use std::fmt::Write;

use hk_core::checker::{CheckReport, OrderReport, Status, SweepReport};
use hk_core::Poset;

use crate::{Classification, LatticeView};

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::PassUpToBound => "pass up to bound",
        Status::Fail => "fail",
    }
}

fn walk(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn check(p: &Poset, r: &CheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "poset       {} elements, lattice {} elements", p.len(), r.lattice_size);
    let _ = writeln!(s, "order       {}", r.order);
    let _ = writeln!(s, "generators  {}", r.generator_count);
    let _ = writeln!(
        s,
        "graph       {} edges, {}",
        r.graph_edges,
        if r.bipartite { "bipartite" } else { "not bipartite" }
    );
    let _ = writeln!(
        s,
        "walks       {} examined, bound {}, {}",
        r.walk_count,
        r.bound,
        if r.complete { "complete" } else { "incomplete" }
    );
    if let Some(rows) = &r.sublattices {
        let failing = rows.iter().filter(|row| row.status == Status::Fail).count();
        let _ = writeln!(s, "sublattices {} walks, {} failing", rows.len(), failing);
    }
    let _ = writeln!(s, "status      {}", status(r.status));
    for w in &r.failures {
        let _ = writeln!(s, "witness     {}", walk(&w.walk));
        let _ = writeln!(s, "  binomial  {}", w.binomial);
        let _ = writeln!(s, "  expansion {}", w.expansion);
        let _ = writeln!(s, "  remainder {}", w.remainder);
    }
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(s, "elapsed     {ms:.1} ms");
    }
    s
}

pub fn classification(c: &Classification) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "elements          {}", c.elements);
    let _ = write!(s, "(2+2)-free        {}", yes(c.two_plus_two_free));
    if let Some([a, b, x, y]) = &c.two_plus_two {
        let _ = write!(s, " ({a}<{b}, {x}<{y})");
    }
    s.push('\n');
    let _ = writeln!(s, "(1+1+1)-free      {}", yes(c.one_plus_one_plus_one_free));
    for (i, q) in c.summands.iter().enumerate() {
        let _ = writeln!(s, "summand {:<9} {} (free: {})", i + 1, q.elements.join(" "), yes(q.free));
    }
    let _ = writeln!(s, "predicted         {}", if c.predicted_khovanskii { "pass" } else { "fail" });
    if let Some(w) = &c.snake {
        let _ = writeln!(s, "snake             {w}");
    }
    s
}

pub fn lattice(v: &LatticeView) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "size {}, width {}", v.size, v.width);
    for e in &v.elements {
        let _ = writeln!(s, "{:>4}  rank {:<3} {{{}}}", e.index, e.rank, e.ideal.join(","));
    }
    let covers: Vec<String> = v.covers.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    let _ = writeln!(s, "covers {}", covers.join(", "));
    let _ = writeln!(
        s,
        "co-comparability graph: {} edges, {}",
        v.cocomparability_edges,
        if v.bipartite { "bipartite" } else { "not bipartite" }
    );
    s
}

pub fn matrix(cells: &[Vec<Vec<String>>]) -> String {
    let text: Vec<Vec<String>> = cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| if c.is_empty() { "-".to_string() } else { c.join(",") })
                .collect()
        })
        .collect();
    let width = text.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut s = String::new();
    for row in &text {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "{}", line.join("  ").trim_end());
    }
    s
}

pub fn sweep(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<8} {:<11} {:<5} {:<16} {:<16} agree", "id", "irreducible", "free", "snake/predicted", "direct");
    for row in &r.rows {
        let middle = match (&row.snake, row.predicted) {
            (Some(w), _) => format!("ε{w}"),
            (None, Some(p)) => format!("predict {}", if p { "pass" } else { "fail" }),
            (None, None) => "-".to_string(),
        };
        let _ = writeln!(
            s,
            "{:<8} {:<11} {:<5} {:<16} {:<16} {}",
            row.id,
            yes(row.irreducible),
            yes(row.free),
            middle,
            status(row.direct),
            yes(row.agree)
        );
    }
    let _ = writeln!(
        s,
        "{} irreducible, {} reducible, all agree: {}",
        r.irreducible_rows,
        r.reducible_rows,
        yes(r.all_agree)
    );
    s
}

pub fn orders(r: &OrderReport) -> String {
    let mut s = String::new();
    for run in &r.runs {
        let ext: Vec<String> = run.extension.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "{:<16} {}", status(run.status), ext.join(","));
    }
    let _ = writeln!(s, "{} of {} requested orders, coincide: {}", r.runs.len(), r.requested, yes(r.coincide));
    s
}
