//! Digraphs as clause instances: arc `(u, v)` becomes the clause `{-u, +v}`,
//! strongly satisfied exactly when the arc crosses a cut forward and weakly
//! satisfied exactly when it crosses in either direction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half_integral::half_integral_solve;
use crate::model::{normalize, Clause, Instance, Literal, TernaryAssignment};
use crate::rational::Rational;
use crate::rounding::solve_max_and_even;

/// Arc multiset over vertices `1..=n`; loops and parallel arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VarOutOfRange { var: w, n });
                }
            }
        }
        Ok(Digraph { n, arcs })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn num_loops(&self) -> usize {
        self.arcs.iter().filter(|(u, v)| u == v).count()
    }

    /// Number of arcs from side `-1` to side `+1`.
    pub fn dicut_value(&self, side: &[i8]) -> usize {
        self.arcs.iter().filter(|&&(u, v)| side[u - 1] < 0 && side[v - 1] > 0).count()
    }

    /// Number of arcs whose endpoints lie on different sides.
    pub fn cut_value(&self, side: &[i8]) -> usize {
        self.arcs.iter().filter(|&&(u, v)| side[u - 1] != side[v - 1]).count()
    }
}

pub fn digraph_to_instance(g: &Digraph) -> Instance {
    let clauses = g
        .arcs
        .iter()
        .map(|&(u, v)| Clause::new(vec![Literal::neg(u), Literal::pos(v)]))
        .collect();
    Instance::new(g.n, clauses).expect("arc endpoints are in range")
}

pub fn remove_loops(g: &Digraph) -> Digraph {
    Digraph { n: g.n, arcs: g.arcs.iter().copied().filter(|(u, v)| u != v).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    /// `-1` / `+1` per vertex.
    pub side: Vec<i8>,
    pub undirected_cut_value: usize,
    pub lp_value: Rational,
    pub ternary: TernaryAssignment,
}

/// An undirected cut at least as large as the largest directed cut.
pub fn solve_dicut_cut(g: &Digraph) -> Result<CutResult> {
    let inst = digraph_to_instance(g);
    let solved = solve_max_and_even(&inst)?;
    let side = solved.solution.assignment.values().to_vec();
    // loops are tautologies, never weakly satisfied, so they drop out of the count
    let undirected_cut_value = g.cut_value(&side);
    if undirected_cut_value != solved.solution.weak_count {
        return Err(Error::Invariant("cut value disagrees with weak count".into()));
    }
    Ok(CutResult { side, undirected_cut_value, lp_value: solved.solution.lp_value, ternary: solved.ternary })
}

/// A permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::Invariant(format!("{order:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(VertexOrdering(order))
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    /// `position[v - 1]` is where `v` sits.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }
}

/// `σ = (π₋₁, π₀, π₁)` and `σ' = (π₋₁, reverse π₀, π₁)`, each group in
/// ascending vertex order.
pub fn candidate_orderings(t: &TernaryAssignment) -> (VertexOrdering, VertexOrdering) {
    let group = |val: i8| -> Vec<usize> { (1..=t.len()).filter(|&v| t.get(v) == val).collect() };
    let (neg, zero, pos) = (group(-1), group(0), group(1));
    let sigma = [neg.as_slice(), &zero, &pos].concat();
    let rev: Vec<usize> = zero.iter().rev().copied().collect();
    let sigma_rev = [neg.as_slice(), &rev, &pos].concat();
    (VertexOrdering(sigma), VertexOrdering(sigma_rev))
}

/// Indices of arcs whose tail strictly precedes the head.
pub fn well_ordered_arcs(g: &Digraph, o: &VertexOrdering) -> Vec<usize> {
    let pos = o.positions();
    g.arcs.iter().enumerate().filter(|(_, &(u, v))| pos[u - 1] < pos[v - 1]).map(|(i, _)| i).collect()
}

pub fn well_ordered_count(g: &Digraph, o: &VertexOrdering) -> usize {
    well_ordered_arcs(g, o).len()
}

/// Arc counts by the ternary values of tail and head; `counts[a + 1][b + 1]`
/// holds `#E_{a,b}`. Loops are skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ArcClasses {
    pub counts: [[usize; 3]; 3],
}

impl ArcClasses {
    pub fn of(g: &Digraph, t: &TernaryAssignment) -> Self {
        let mut counts = [[0; 3]; 3];
        for &(u, v) in g.arcs.iter().filter(|(u, v)| u != v) {
            counts[(t.get(u) + 1) as usize][(t.get(v) + 1) as usize] += 1;
        }
        ArcClasses { counts }
    }

    pub fn get(&self, a: i8, b: i8) -> usize {
        self.counts[(a + 1) as usize][(b + 1) as usize]
    }

    /// Arcs with `t(tail) < t(head)`.
    pub fn increasing(&self) -> usize {
        self.get(-1, 0) + self.get(-1, 1) + self.get(0, 1)
    }

    /// `#{t(x) < t(y)} + ½ #E₀,₀`: the lower bound one of the two orderings meets.
    pub fn ordering_bound(&self) -> Rational {
        Rational::from(self.increasing()) + Rational::half() * Rational::from(self.get(0, 0))
    }

    /// `#E₋₁,₁ + ½ (#E₋₁,₀ + #E₀,₁ + #E₀,₀)`: the ternary objective of a loop-free digraph.
    pub fn ternary_value(&self) -> Rational {
        Rational::from(self.get(-1, 1))
            + Rational::half() * Rational::from(self.get(-1, 0) + self.get(0, 1) + self.get(0, 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicResult {
    pub ordering: VertexOrdering,
    pub kept_arcs: Vec<usize>,
    pub value: usize,
    /// `(|V₋₁|, |V₀|, |V₁|)`
    pub partition_sizes: (usize, usize, usize),
    pub lp_value: Rational,
    pub ternary: TernaryAssignment,
    /// Well-ordered counts of `σ` and `σ'`.
    pub candidate_values: (usize, usize),
    pub classes: ArcClasses,
}

/// An acyclic subgraph with at least as many arcs as the largest directed cut.
pub fn solve_dicut_acyclic(g: &Digraph) -> Result<AcyclicResult> {
    let loop_free = remove_loops(g);
    let (inst, _) = normalize(&digraph_to_instance(&loop_free));
    let half = half_integral_solve(&inst)?;
    let t = half.assignment;
    let (sigma, sigma_rev) = candidate_orderings(&t);
    let a = well_ordered_count(g, &sigma);
    let b = well_ordered_count(g, &sigma_rev);
    let ordering = if b > a { sigma_rev } else { sigma };
    let kept_arcs = well_ordered_arcs(g, &ordering);
    let classes = ArcClasses::of(g, &t);
    if Rational::from(a.max(b)) < classes.ordering_bound() || classes.ordering_bound() < half.lp_value {
        return Err(Error::Invariant("ordering bound chain broken".into()));
    }
    let count = |val: i8| t.values().iter().filter(|&&x| x == val).count();
    Ok(AcyclicResult {
        value: kept_arcs.len(),
        kept_arcs,
        ordering,
        partition_sizes: (count(-1), count(0), count(1)),
        lp_value: half.lp_value,
        candidate_values: (a, b),
        classes,
        ternary: t,
    })
}
