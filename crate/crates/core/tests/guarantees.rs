//! Randomized checks of the solver guarantees against the brute-force oracles.

use maxeven::generate::{gen_digraph, gen_instance};
use maxeven::graph::{digraph_to_instance, ArcClasses};
use maxeven::half_integral::half_integral_solve;
use maxeven::lp::{build_lp, simplex_solve, LpStatus};
use maxeven::model::{normalize, objective_value, strong_count, weak_count, BoolAssignment};
use maxeven::oracle::{
    brute_max_cut, brute_max_dicut, brute_strong_opt, brute_ternary_opt, brute_weak_opt, check_acyclic,
    kept_subgraph,
};
use maxeven::rounding::{derandomized_round, expected_weak_count, randomized_round};
use maxeven::{solve_dicut_acyclic, solve_dicut_cut, solve_max_and_even, Rational};

fn instance(seed: u64, max_n: u64, max_m: u64) -> maxeven::Instance {
    let n = 1 + (seed % max_n) as usize;
    let m = (seed * 7 % (max_m + 1)) as usize;
    gen_instance(n, m, 1, 4, seed)
}

#[test]
fn half_integrality_and_value_preservation() {
    for seed in 0..150 {
        let (inst, _) = normalize(&instance(seed, 8, 16));
        let h = half_integral_solve(&inst).unwrap();
        assert_eq!(objective_value(&inst, &h.assignment).unwrap(), h.lp_value, "seed {seed}");
        assert_eq!(brute_ternary_opt(&inst, 13).unwrap().value, h.lp_value, "seed {seed}");
        assert!(h.collapses <= inst.num_vars());
    }
}

#[test]
fn lp_bounds_from_below_and_above() {
    for seed in 0..100 {
        let raw = instance(seed, 8, 12);
        let (inst, _) = normalize(&raw);
        let sol = simplex_solve(&build_lp(&inst).unwrap()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        let strong = brute_strong_opt(&raw, 20).unwrap().value;
        assert!(sol.objective_value >= Rational::from(strong));
        assert!(sol.objective_value <= Rational::from(inst.num_clauses()));
    }
}

#[test]
fn rounding_dominates_expectation() {
    for seed in 0..150 {
        let (inst, _) = normalize(&instance(seed, 10, 20));
        let h = half_integral_solve(&inst).unwrap();
        let expected = expected_weak_count(&inst, &h.assignment, 12).unwrap();
        assert!(expected >= h.lp_value);
        let s = derandomized_round(&inst, &h.assignment).unwrap();
        assert!(Rational::from(s.weak_count) >= expected);
        assert_eq!(s, derandomized_round(&inst, &h.assignment).unwrap());
    }
}

#[test]
fn randomized_rounding_averages_near_expectation() {
    // 400 seeded draws; the sample mean of a count bounded by m must land
    // well inside m/4 of the exact expectation.
    let (inst, _) = normalize(&gen_instance(6, 12, 1, 3, 99));
    let h = half_integral_solve(&inst).unwrap();
    let expected = expected_weak_count(&inst, &h.assignment, 20).unwrap().to_f64();
    let total: usize = (0..400).map(|s| weak_count(&inst, &randomized_round(&h.assignment, s)).unwrap()).sum();
    let mean = total as f64 / 400.0;
    assert!((mean - expected).abs() < 12.0 / 4.0, "mean {mean} vs {expected}");
}

#[test]
fn main_guarantee() {
    for seed in 0..200 {
        let inst = instance(seed, 10, 20);
        let r = solve_max_and_even(&inst).unwrap();
        let strong = brute_strong_opt(&inst, 20).unwrap().value;
        assert!(r.solution.weak_count >= strong, "seed {seed}");
        assert!(r.solution.weak_count as i64 >= r.solution.lp_value.ceil_i64());
        assert_eq!(r.solution.weak_count, weak_count(&inst, &r.solution.assignment).unwrap());
    }
}

#[test]
fn oracle_consistency() {
    for seed in 0..100 {
        let inst = instance(seed, 8, 12);
        let strong = brute_strong_opt(&inst, 20).unwrap().value;
        let weak = brute_weak_opt(&inst, 20).unwrap().value;
        let ternary = brute_ternary_opt(&inst, 13).unwrap().value;
        assert!(Rational::from(strong) <= ternary);
        assert!(ternary <= Rational::from(inst.num_clauses()));
        assert!(strong <= weak);
    }
}

#[test]
fn graph_guarantees() {
    for seed in 0..150 {
        let n = 1 + (seed % 8) as usize;
        let m = (seed * 5 % 17) as usize;
        let g = gen_digraph(n, m, seed, None).graph;
        let dicut = brute_max_dicut(&g, 20).unwrap().value;

        let cut = solve_dicut_cut(&g).unwrap();
        assert!(cut.undirected_cut_value >= dicut, "seed {seed}");
        assert_eq!(cut.undirected_cut_value, g.cut_value(&cut.side));

        let acyc = solve_dicut_acyclic(&g).unwrap();
        assert!(acyc.value >= dicut, "seed {seed}");
        assert!(check_acyclic(n, &kept_subgraph(&g, &acyc.kept_arcs)));
        let classes = ArcClasses::of(&g, &acyc.ternary);
        let (a, b) = acyc.candidate_values;
        assert!(Rational::from(a + b) >= Rational::from(2 * classes.increasing() + classes.get(0, 0)));
        assert!(classes.ordering_bound() >= acyc.lp_value);
    }
}

#[test]
fn graph_and_clause_oracles_agree() {
    for seed in 0..60 {
        let n = 1 + (seed % 6) as usize;
        let g = maxeven::graph::remove_loops(&gen_digraph(n, 8, seed, None).graph);
        let inst = digraph_to_instance(&g);
        assert_eq!(brute_max_dicut(&g, 20).unwrap().value, brute_strong_opt(&inst, 20).unwrap().value);
        assert_eq!(brute_max_cut(&g, 20).unwrap().value, brute_weak_opt(&inst, 20).unwrap().value);
        for mask in 0..(1u64 << n) {
            let a = BoolAssignment::from_mask(n, mask);
            assert_eq!(strong_count(&inst, &a).unwrap(), g.dicut_value(a.values()));
        }
    }
}

#[test]
fn planted_digraphs_meet_their_promise() {
    for seed in 0..40 {
        let gd = gen_digraph(8, 16, seed, Some(0.75));
        let planted = gd.planted_dicut.unwrap();
        assert!(solve_dicut_cut(&gd.graph).unwrap().undirected_cut_value >= planted);
        assert!(solve_dicut_acyclic(&gd.graph).unwrap().value >= planted);
    }
}
