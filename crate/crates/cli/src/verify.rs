//! Running solvers next to the brute-force oracles and checking the promised bounds.

use maxeven::generate::{gen_digraph, gen_instance};
use maxeven::graph::ArcClasses;
use maxeven::model::{normalize, weak_count};
use maxeven::oracle::{brute_max_dicut, brute_strong_opt, brute_ternary_opt, check_acyclic, kept_subgraph, DEFAULT_TERNARY_CAP};
use maxeven::{solve_dicut_acyclic, solve_dicut_cut, solve_max_and_even, Digraph, Error, Instance, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// An oracle refused the input size.
    CapExceeded,
    /// A guarantee failed or the solver hit an internal invariant: a bug.
    Violation,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub outcome: Outcome,
    pub details: Vec<String>,
}

impl Check {
    fn new(label: String) -> Self {
        Check { label, outcome: Outcome::Pass, details: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: String) {
        if !ok {
            self.outcome = Outcome::Violation;
            self.details.push(format!("VIOLATED {what}"));
        } else {
            self.details.push(what);
        }
    }

    fn fail_with(mut self, e: Error) -> Self {
        self.outcome = match e {
            Error::CapExceeded { .. } => Outcome::CapExceeded,
            _ => Outcome::Violation,
        };
        self.details.push(e.to_string());
        self
    }

    pub fn line(&self) -> String {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::CapExceeded => "CAP ",
            Outcome::Violation => "FAIL",
        };
        format!("{tag} {}: {}", self.label, self.details.join("; "))
    }
}

pub fn verify_instance(label: String, inst: &Instance, cap: usize) -> Check {
    let check = Check::new(label);
    match verify_instance_inner(check.clone(), inst, cap) {
        Ok(c) => c,
        Err(e) => check.fail_with(e),
    }
}

fn verify_instance_inner(mut check: Check, inst: &Instance, cap: usize) -> Result<Check, Error> {
    let strong = brute_strong_opt(inst, cap)?.value;
    let solved = solve_max_and_even(inst)?;
    let sol = &solved.solution;
    let weak = weak_count(inst, &sol.assignment)?;
    let lp = &sol.lp_value;
    check.require(weak == sol.weak_count, format!("reported weak {} recomputes to {weak}", sol.weak_count));
    check.require(weak >= strong, format!("weak {weak} >= strong optimum {strong}"));
    check.require(weak as i64 >= lp.ceil_i64(), format!("weak {weak} >= ceil(lp {lp})"));
    check.require(lp >= &Rational::from(strong), format!("lp {lp} >= strong optimum {strong}"));
    let (normalized, _) = normalize(inst);
    if inst.num_vars() <= DEFAULT_TERNARY_CAP.min(cap) {
        let ternary = brute_ternary_opt(&normalized, DEFAULT_TERNARY_CAP)?.value;
        check.require(&ternary == lp, format!("lp {lp} == ternary optimum {ternary}"));
    } else {
        check.details.push("ternary oracle skipped".into());
    }
    Ok(check)
}

pub fn verify_digraph(label: String, g: &Digraph, cap: usize) -> Check {
    let check = Check::new(label);
    match verify_digraph_inner(check.clone(), g, cap) {
        Ok(c) => c,
        Err(e) => check.fail_with(e),
    }
}

fn verify_digraph_inner(mut check: Check, g: &Digraph, cap: usize) -> Result<Check, Error> {
    let dicut = brute_max_dicut(g, cap)?.value;
    let cut = solve_dicut_cut(g)?;
    let cut_value = g.cut_value(&cut.side);
    check.require(cut_value == cut.undirected_cut_value, format!("reported cut {} recomputes to {cut_value}", cut.undirected_cut_value));
    check.require(cut_value >= dicut, format!("cut {cut_value} >= max dicut {dicut}"));

    let acyc = solve_dicut_acyclic(g)?;
    let kept = kept_subgraph(g, &acyc.kept_arcs);
    check.require(kept.len() >= dicut, format!("acyclic {} >= max dicut {dicut}", kept.len()));
    check.require(check_acyclic(g.num_vertices(), &kept), "kept arcs acyclic".into());
    let classes = ArcClasses::of(g, &acyc.ternary);
    let (a, b) = acyc.candidate_values;
    let bound = classes.ordering_bound();
    check.require(
        Rational::from(a.max(b)) >= bound && bound >= acyc.lp_value,
        format!("max(sigma {a}, sigma' {b}) >= {bound} >= lp {}", acyc.lp_value),
    );
    Ok(check)
}

/// Trial `i` checks one generated instance and one generated digraph, both
/// seeded with `seed + i`.
pub fn run_trial(i: u64, seed: u64, cap: usize) -> Vec<Check> {
    let s = seed.wrapping_add(i);
    let n = 1 + (s % 10) as usize;
    let m = (s.wrapping_mul(7) % 21) as usize;
    let inst = gen_instance(n.min(cap.max(1)), m, 1, 4, s);
    let gn = 1 + (s % 8) as usize;
    let gm = (s.wrapping_mul(5) % 17) as usize;
    let g = gen_digraph(gn.min(cap.max(1)), gm, s, None).graph;
    vec![
        verify_instance(format!("trial {i} instance (seed {s})"), &inst, cap),
        verify_digraph(format!("trial {i} digraph (seed {s})"), &g, cap),
    ]
}
