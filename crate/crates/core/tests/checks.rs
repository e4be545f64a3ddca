use hk_core::checker::{check_via_sublattices, khovanskii_check, order_independence_experiment, CheckOptions, Status};
use hk_core::classify::is_free;
use hk_core::fixtures;
use hk_core::polyalg::{compatible_order, hibi_generators, parse_polynomial, subduction};
use hk_core::poset::enumerate_posets;
use hk_core::toric::{cocomparability_graph, substitute, toric_generators};
use hk_core::{build_lattice, DistributiveLattice, Execution, Poset};

fn all_posets(max: usize) -> impl Iterator<Item = Poset> {
    (0..=max).flat_map(|n| enumerate_posets(n).unwrap())
}

#[test]
fn sublattice_route_agrees_with_direct_check() {
    for p in all_posets(6) {
        let direct = khovanskii_check(&p, &CheckOptions::default()).unwrap();
        let via = check_via_sublattices(&p, &CheckOptions::default()).unwrap();
        assert_eq!(direct.status, via.status, "{p}");
    }
}

fn decomposable(exps: &mut [u32], l: &DistributiveLattice) -> bool {
    let Some(v) = exps.iter().position(|&e| e > 0) else {
        return true;
    };
    for w in v + 1..exps.len() {
        if exps[w] > 0 && !l.comparable(v, w) {
            exps[v] -= 1;
            exps[w] -= 1;
            let ok = decomposable(exps, l);
            exps[v] += 1;
            exps[w] += 1;
            if ok {
                return true;
            }
        }
    }
    false
}

#[test]
fn failing_remainders_have_no_edge_decomposition() {
    for p in all_posets(5).filter(|p| !is_free(p)) {
        let l = build_lattice(&p);
        let opts = CheckOptions { full: true, bound: Some(4), ..CheckOptions::default() };
        let r = khovanskii_check(&p, &opts).unwrap();
        let ord = compatible_order(&l);
        let gens = hibi_generators(&l, &ord);
        for w in &r.failures {
            let rem = parse_polynomial(&w.remainder, gens.names()).unwrap();
            let (m, _) = rem.leading_term(&ord).expect("failing remainder is nonzero");
            let mut exps = vec![0; l.len()];
            for (v, e) in m.iter() {
                exps[v] = e;
            }
            assert!(m.degree() % 2 == 1 || !decomposable(&mut exps, &l), "{p}");
        }
    }
}

#[test]
fn passing_walks_reconstruct_exactly() {
    for p in all_posets(5).filter(is_free) {
        let l = build_lattice(&p);
        let ord = compatible_order(&l);
        let gens = hibi_generators(&l, &ord);
        let g = cocomparability_graph(&l);
        let tg = toric_generators(&g, 0);
        assert!(tg.complete);
        for b in &tg.binomials {
            let f = substitute(b, &gens).unwrap();
            let s = subduction(&f, &gens, &ord).unwrap();
            assert!(s.reduced_to_constant(), "{p}");
            assert!(s.verify(&f, &gens));
            assert_eq!(&s.expand_q(&gens) + &s.r, f);
        }
    }
}

#[test]
fn parallel_and_sequential_reports_match() {
    for p in [fixtures::two_plus_two(), fixtures::snake_six(), fixtures::one_plus_one_plus_one()] {
        let mut a = khovanskii_check(&p, &CheckOptions { full: true, ..CheckOptions::default() }).unwrap();
        let mut b = khovanskii_check(
            &p,
            &CheckOptions { full: true, exec: Execution::Sequential, ..CheckOptions::default() },
        )
        .unwrap();
        a.elapsed_ms = None;
        b.elapsed_ms = None;
        assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn explicit_order_must_be_a_linear_extension() {
    let p = fixtures::two_plus_two();
    let bad = CheckOptions { order: Some(vec![1, 0, 2, 3, 4, 5, 6, 7, 8]), ..CheckOptions::default() };
    assert!(khovanskii_check(&p, &bad).is_err());
    let swapped = CheckOptions { order: Some(vec![0, 2, 1, 3, 4, 5, 6, 7, 8]), ..CheckOptions::default() };
    assert_eq!(khovanskii_check(&p, &swapped).unwrap().status, Status::Fail);
}

#[test]
fn order_experiment_on_small_posets() {
    for p in all_posets(4) {
        let r = order_independence_experiment(&p, 4).unwrap();
        assert!(!r.runs.is_empty());
        assert!(r.coincide, "{p}");
    }
}

#[test]
fn bounded_walks_are_flagged() {
    let p = fixtures::one_plus_one_plus_one();
    let r = khovanskii_check(&p, &CheckOptions { bound: Some(4), ..CheckOptions::default() }).unwrap();
    assert!(!r.complete && !r.bipartite);
    assert_eq!(r.status, Status::Fail);
}
