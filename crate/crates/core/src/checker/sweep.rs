use serde::Serialize;

use crate::classify::{is_free, predict_khovanskii, recognize_snake};
use crate::error::CheckError;
use crate::lattice::{build_lattice, DistributiveLattice};
use crate::par::{self, Execution};
use crate::poset::{ordinal_decompose, serialize_poset, PosetEnumerator, Poset, DEFAULT_ENUMERATION_BOUND};

use super::{check_lattice, CheckOptions, Status};

/// One isomorphism class in the sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    /// `n{size}-{k}`, `k` counting from 1 in canonical enumeration order.
    pub id: String,
    pub poset: String,
    pub irreducible: bool,
    pub free: bool,
    /// Recognised snake word; only computed for irreducible posets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snake: Option<String>,
    /// Ordinal-summand prediction; only computed for reducible posets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<bool>,
    pub direct: Status,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub rows: Vec<SweepRow>,
    pub irreducible_rows: usize,
    pub reducible_rows: usize,
    pub all_agree: bool,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn sweep_row(id: String, p: &Poset, exec: Execution) -> Result<SweepRow, CheckError> {
    let l = build_lattice(p);
    let opts = CheckOptions {
        exec,
        ..CheckOptions::default()
    };
    let direct = check_lattice(&l, &opts)?.status;
    let pass = direct != Status::Fail;
    let irreducible = ordinal_decompose(p).len() == 1;
    let free = is_free(p);
    let (snake, predicted, agree) = if irreducible {
        let snake = recognize_snake(&l);
        // an unbounded pass is required; a bounded one counts as disagreement
        let agree = free == snake.is_some() && free == (direct == Status::Pass) && free == pass;
        (snake.map(|w| w.to_string()), None, agree)
    } else {
        let predicted = predict_khovanskii(p);
        let agree = predicted == (direct == Status::Pass) && predicted == pass;
        (None, Some(predicted), agree)
    };
    Ok(SweepRow {
        id,
        poset: serialize_poset(p),
        irreducible,
        free,
        snake,
        predicted,
        direct,
        agree,
    })
}

/// Cross-check freeness, snake recognition and the direct verdict on every
/// poset with `2..=n_max` elements. The first disagreement (in row order)
/// is returned as an error.
pub fn theorem_sweep(n_max: usize, exec: Execution) -> Result<SweepReport, CheckError> {
    let enumerator = PosetEnumerator::new(DEFAULT_ENUMERATION_BOUND.max(n_max)).with_execution(exec);
    let mut jobs = Vec::new();
    for n in 2..=n_max {
        for (k, p) in enumerator.level(n)?.into_iter().enumerate() {
            jobs.push((format!("n{n}-{}", k + 1), p));
        }
    }
    // inner walk checks stay sequential; the classes are the parallel unit
    let rows = par::map(exec, &jobs, |(id, p)| sweep_row(id.clone(), p, Execution::Sequential))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(bad) = rows.iter().find(|r| !r.agree) {
        return Err(CheckError::Disagreement {
            poset: bad.poset.clone(),
            detail: format!(
                "{}: irreducible={} free={} snake={:?} predicted={:?} direct={:?}",
                bad.id, bad.irreducible, bad.free, bad.snake, bad.predicted, bad.direct
            ),
        });
    }
    let irreducible_rows = rows.iter().filter(|r| r.irreducible).count();
    Ok(SweepReport {
        n_max,
        irreducible_rows,
        reducible_rows: rows.len() - irreducible_rows,
        all_agree: true,
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderRun {
    /// Linear extension as 1-based element indices.
    pub extension: Vec<usize>,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderReport {
    pub poset: String,
    pub requested: usize,
    pub runs: Vec<OrderRun>,
    pub coincide: bool,
}

/// Extensions enumerated lexicographically before sampling.
const EXTENSION_POOL: usize = 4096;

/// Up to `k` distinct linear extensions of `l`, deterministic. The first is
/// the index order; the rest are spread evenly over the lexicographic
/// enumeration (capped at [`EXTENSION_POOL`]).
pub(crate) fn linear_extensions(l: &DistributiveLattice, k: usize) -> Vec<Vec<usize>> {
    let n = l.len();
    let mut below = vec![0usize; n];
    let mut above = vec![Vec::new(); n];
    for &(a, b) in l.covers() {
        below[b] += 1;
        above[a].push(b);
    }
    let mut pool = Vec::new();
    let mut ext = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    extend(&mut below, &above, &mut placed, &mut ext, &mut pool);
    if pool.len() <= k {
        return pool;
    }
    (0..k).map(|i| pool[i * (pool.len() - 1) / (k - 1).max(1)].clone()).collect()
}

fn extend(
    below: &mut [usize],
    above: &[Vec<usize>],
    placed: &mut [bool],
    ext: &mut Vec<usize>,
    pool: &mut Vec<Vec<usize>>,
) {
    if pool.len() == EXTENSION_POOL {
        return;
    }
    if ext.len() == below.len() {
        pool.push(ext.clone());
        return;
    }
    for v in 0..below.len() {
        if placed[v] || below[v] != 0 {
            continue;
        }
        placed[v] = true;
        ext.push(v);
        for &w in &above[v] {
            below[w] -= 1;
        }
        extend(below, above, placed, ext, pool);
        for &w in &above[v] {
            below[w] += 1;
        }
        ext.pop();
        placed[v] = false;
    }
}

/// Run the direct check under up to `k` distinct compatible orders.
///
/// # Panics
/// If `k == 0`.
pub fn order_independence_experiment(p: &Poset, k: usize) -> Result<OrderReport, CheckError> {
    assert!(k >= 1, "k must be positive");
    let l = build_lattice(p);
    let mut runs = Vec::new();
    for ext in linear_extensions(&l, k) {
        let opts = CheckOptions {
            order: Some(ext.clone()),
            ..CheckOptions::default()
        };
        let status = check_lattice(&l, &opts)?.status;
        runs.push(OrderRun {
            extension: ext.iter().map(|i| i + 1).collect(),
            status,
        });
    }
    let coincide = runs.windows(2).all(|w| w[0].status == w[1].status);
    Ok(OrderReport {
        poset: serialize_poset(p),
        requested: k,
        runs,
        coincide,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sweep_four_agrees() {
        let r = theorem_sweep(4, Execution::Parallel).unwrap();
        assert!(r.all_agree);
        // 2 + 5 + 16 classes on 2, 3, 4 elements
        assert_eq!(r.rows.len(), 23);
        let anti = r.rows.iter().find(|r| r.id == "n2-1" || r.id == "n2-2").unwrap();
        assert!(anti.agree);
        let two = r.rows.iter().filter(|r| r.id.starts_with("n2-"));
        let anti = two.filter(|r| r.irreducible).collect::<Vec<_>>();
        assert_eq!(anti.len(), 1);
        assert_eq!(anti[0].snake.as_deref(), Some(""));
        assert_eq!(anti[0].direct, Status::Pass);
    }

    #[test]
    fn sweep_modes_match() {
        let a = theorem_sweep(4, Execution::Parallel).unwrap().to_json();
        let b = theorem_sweep(4, Execution::Sequential).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn forbidden_rows() {
        for p in [fixtures::two_plus_two(), fixtures::one_plus_one_plus_one()] {
            let row = sweep_row("x".into(), &p, Execution::Sequential).unwrap();
            assert!(row.irreducible && !row.free && row.snake.is_none());
            assert_eq!(row.direct, Status::Fail);
            assert!(row.agree);
        }
    }

    #[test]
    fn extensions_are_distinct_and_valid() {
        let l = build_lattice(&fixtures::snake_six());
        let exts = linear_extensions(&l, 5);
        assert_eq!(exts.len(), 5);
        assert_eq!(exts[0], (0..l.len()).collect::<Vec<_>>());
        for e in &exts {
            let mut pos = vec![0; e.len()];
            for (i, &v) in e.iter().enumerate() {
                pos[v] = i;
            }
            assert!(l.covers().iter().all(|&(a, b)| pos[a] < pos[b]));
        }
        assert_eq!(linear_extensions(&build_lattice(&Poset::chain(3)), 5).len(), 1);
    }

    #[test]
    fn order_experiment_examples() {
        let r = order_independence_experiment(&fixtures::two_plus_two(), 5).unwrap();
        assert_eq!(r.runs.len(), 5);
        assert!(r.coincide && r.runs.iter().all(|x| x.status == Status::Fail));
        let r = order_independence_experiment(&fixtures::snake_six(), 5).unwrap();
        assert!(r.coincide && r.runs.iter().all(|x| x.status == Status::Pass));
        let r = order_independence_experiment(&Poset::chain(3), 5).unwrap();
        assert!(r.coincide && r.runs.iter().all(|x| x.status == Status::Pass));
    }
}
