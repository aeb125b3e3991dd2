//! Bounded-variable primal simplex over exact rationals, plus the LP relaxation
//! of the ternary objective.
//!
//! Variables carry their own (possibly infinite) bounds instead of explicit
//! bound rows. Each `≤` row gets a slack; rows that are violated at the
//! starting point get an artificial variable and a phase-1 pass. Pivoting uses
//! Bland's rule (smallest eligible index enters, smallest tied basic index
//! leaves), which terminates under degeneracy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{clause_min, Instance, TernaryAssignment};
use crate::rational::Rational;

/// `a · x ≤ rhs`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

/// Maximize `objective · x + objective_constant` subject to `≤` rows and
/// per-variable bounds. `None` bounds are infinite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<Rational>,
    pub objective_constant: Rational,
}

impl LinearProgram {
    /// All variables in `[0, +inf)`, zero objective, no rows.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            lower: vec![Some(Rational::zero()); num_vars],
            upper: vec![None; num_vars],
            constraints: Vec::new(),
            objective: vec![Rational::zero(); num_vars],
            objective_constant: Rational::zero(),
        }
    }

    pub fn set_bounds(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) {
        self.lower[var] = lower;
        self.upper[var] = upper;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, rhs });
    }

    pub fn set_objective(&mut self, coeffs: Vec<Rational>, constant: Rational) {
        self.objective = coeffs;
        self.objective_constant = constant;
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars;
        if self.lower.len() != n || self.upper.len() != n || self.objective.len() != n {
            return Err(Error::MalformedLp("bound or objective length differs from num_vars".into()));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(Error::MalformedLp(format!("row {i} has {} coefficients", c.coeffs.len())));
            }
        }
        for j in 0..n {
            if let (Some(lo), Some(hi)) = (&self.lower[j], &self.upper[j]) {
                if lo > hi {
                    return Err(Error::MalformedLp(format!("variable {j} has lower {lo} > upper {hi}")));
                }
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x) + &self.objective_constant
    }

    /// Exact check of every bound and row at `x`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().enumerate().all(|(j, v)| {
                self.lower[j].as_ref().map_or(true, |lo| v >= lo)
                    && self.upper[j].as_ref().map_or(true, |hi| v <= hi)
            })
            && self.constraints.iter().all(|c| dot(&c.coeffs, x) <= c.rhs)
    }
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter()
        .zip(x)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, v)| c * v)
        .sum()
}

fn fmt_bound(b: &Option<Rational>, inf: &str) -> String {
    b.as_ref().map_or_else(|| inf.to_string(), |r| r.to_string())
}

/// Plain-text dump, one line per item:
///
/// ```text
/// lp <num_vars> <num_constraints>
/// max <c_1> ... <c_n> const <c_0>
/// bound <j> <lower|-inf> <upper|inf>
/// row <a_1> ... <a_n> <= <rhs>
/// ```
impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lp {} {}", self.num_vars, self.constraints.len())?;
        write!(f, "max")?;
        for c in &self.objective {
            write!(f, " {c}")?;
        }
        writeln!(f, " const {}", self.objective_constant)?;
        for j in 0..self.num_vars {
            writeln!(
                f,
                "bound {} {} {}",
                j + 1,
                fmt_bound(&self.lower[j], "-inf"),
                fmt_bound(&self.upper[j], "inf")
            )?;
        }
        for c in &self.constraints {
            write!(f, "row")?;
            for a in &c.coeffs {
                write!(f, " {a}")?;
            }
            writeln!(f, " <= {}", c.rhs)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl LpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        }
    }
}

/// For `Optimal`, `values` is an exactly feasible vertex and `objective_value`
/// its objective. For the other statuses both are whatever the solver held last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpSolution {
    pub values: Vec<Rational>,
    pub objective_value: Rational,
    pub status: LpStatus,
    pub pivots: usize,
}

const MAX_ITERATIONS: usize = 1_000_000;

struct Tableau {
    /// `B⁻¹ [A | I | -I_art]`, one row per constraint.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Row index for basic columns.
    row_of: Vec<Option<usize>>,
    x: Vec<Rational>,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
    /// Reduced costs of the current objective.
    reduced: Vec<Rational>,
    pivots: usize,
}

enum Step {
    Optimal,
    Unbounded,
    Moved,
}

impl Tableau {
    fn set_costs(&mut self, cost: &[Rational]) {
        let mut reduced = cost.to_vec();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= &(cb * a);
                }
            }
        }
        self.reduced = reduced;
    }

    fn can_increase(&self, j: usize) -> bool {
        self.upper[j].as_ref().map_or(true, |hi| &self.x[j] < hi)
    }

    fn can_decrease(&self, j: usize) -> bool {
        self.lower[j].as_ref().map_or(true, |lo| &self.x[j] > lo)
    }

    fn entering(&self) -> Option<(usize, bool)> {
        (0..self.x.len()).find_map(|j| {
            if self.row_of[j].is_some() {
                return None;
            }
            let d = &self.reduced[j];
            if d.is_positive() && self.can_increase(j) {
                Some((j, true))
            } else if d.is_negative() && self.can_decrease(j) {
                Some((j, false))
            } else {
                None
            }
        })
    }

    fn step(&mut self) -> Step {
        let Some((enter, increasing)) = self.entering() else {
            return Step::Optimal;
        };
        self.advance(enter, increasing)
    }

    /// Move nonbasic `enter` as far as the ratio test allows, pivoting if a
    /// basic variable blocks first.
    fn advance(&mut self, enter: usize, increasing: bool) -> Step {

        // Distance the entering variable may travel before hitting its own far bound.
        let mut best: Option<(Rational, Option<usize>)> = if increasing {
            self.upper[enter].as_ref().map(|hi| (hi - &self.x[enter], None))
        } else {
            self.lower[enter].as_ref().map(|lo| (&self.x[enter] - lo, None))
        };

        // Per unit of travel, basic variable i changes by rate_i = -a_ij (or +a_ij when decreasing).
        let mut rates: Vec<Rational> = Vec::with_capacity(self.rows.len());
        for i in 0..self.rows.len() {
            let a = &self.rows[i][enter];
            let rate = if increasing { -a } else { a.clone() };
            if !rate.is_zero() {
                let b = self.basis[i];
                let limit = if rate.is_negative() {
                    self.lower[b].as_ref().map(|lo| (&self.x[b] - lo) / (-&rate))
                } else {
                    self.upper[b].as_ref().map(|hi| (hi - &self.x[b]) / &rate)
                };
                if let Some(theta) = limit {
                    let better = match &best {
                        None => true,
                        Some((t, None)) => theta < *t,
                        Some((t, Some(r))) => theta < *t || (theta == *t && b < self.basis[*r]),
                    };
                    if better {
                        best = Some((theta, Some(i)));
                    }
                }
            }
            rates.push(rate);
        }

        let Some((theta, leave)) = best else {
            return Step::Unbounded;
        };

        if !theta.is_zero() {
            if increasing {
                self.x[enter] += &theta;
            } else {
                self.x[enter] -= &theta;
            }
            for (i, rate) in rates.iter().enumerate() {
                if !rate.is_zero() {
                    let b = self.basis[i];
                    self.x[b] += &(rate * &theta);
                }
            }
        }
        if let Some(r) = leave {
            self.pivot(r, enter);
        }
        Step::Moved
    }

    fn pivot(&mut self, r: usize, enter: usize) {
        let leave = self.basis[r];
        let p = self.rows[r][enter].clone();
        let inv = Rational::one() / &p;
        let nonzero: Vec<usize> = self.rows[r]
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, _)| j)
            .collect();
        for &j in &nonzero {
            self.rows[r][j] *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for &j in &nonzero {
                row[j] -= &(&f * &pivot_row[j]);
            }
        }
        let f = self.reduced[enter].clone();
        if !f.is_zero() {
            for &j in &nonzero {
                self.reduced[j] -= &(&f * &pivot_row[j]);
            }
        }
        self.basis[r] = enter;
        self.row_of[enter] = Some(r);
        self.row_of[leave] = None;
        self.pivots += 1;
    }

    /// Push structural nonbasic variables that sit strictly inside their
    /// bounds (possible after a warm start) upward until each hits a bound or
    /// becomes basic. Only zero reduced costs qualify, so the objective stays put.
    fn crossover(&mut self, structural: usize) -> Result<()> {
        for j in 0..structural {
            while self.row_of[j].is_none() && self.can_increase(j) && self.can_decrease(j) {
                if !self.reduced[j].is_zero() {
                    return Err(Error::Invariant("crossover on a variable with nonzero reduced cost".into()));
                }
                let up = self.upper[j].is_some() || self.lower[j].is_none();
                if let Step::Unbounded = self.advance(j, up) {
                    // a free column no row constrains; leave it where it is
                    break;
                }
            }
        }
        Ok(())
    }

    fn run(&mut self) -> Result<Step> {
        for _ in 0..MAX_ITERATIONS {
            match self.step() {
                Step::Moved => continue,
                done => return Ok(done),
            }
        }
        Err(Error::Invariant("simplex iteration limit reached".into()))
    }
}

/// Where a nonbasic variable starts: its lower bound, else its upper, else 0.
fn resting_value(lo: &Option<Rational>, hi: &Option<Rational>) -> Rational {
    lo.clone().or_else(|| hi.clone()).unwrap_or_else(Rational::zero)
}

pub fn simplex_solve(lp: &LinearProgram) -> Result<LpSolution> {
    let start: Vec<Rational> = (0..lp.num_vars).map(|j| resting_value(&lp.lower[j], &lp.upper[j])).collect();
    simplex_solve_from(lp, &start)
}

/// Like [`simplex_solve`], starting the structural variables at `start`
/// (which must respect the bounds; rows may be violated). Variables that start
/// strictly inside their bounds may move either way until they hit a bound or
/// enter the basis; any still interior at the optimum are then pushed upward
/// to a bound, so the result is a vertex.
pub fn simplex_solve_from(lp: &LinearProgram, start: &[Rational]) -> Result<LpSolution> {
    lp.validate()?;
    let n = lp.num_vars;
    let m = lp.constraints.len();
    if start.len() != n {
        return Err(Error::MalformedLp(format!("start point has {} entries", start.len())));
    }
    if start.iter().enumerate().any(|(j, v)| {
        lp.lower[j].as_ref().is_some_and(|lo| v < lo) || lp.upper[j].as_ref().is_some_and(|hi| v > hi)
    }) {
        return Err(Error::MalformedLp("start point violates a bound".into()));
    }

    let mut x: Vec<Rational> = start.to_vec();
    let residual: Vec<Rational> = lp.constraints.iter().map(|c| &c.rhs - dot(&c.coeffs, &x)).collect();
    let artificial_rows: Vec<usize> = (0..m).filter(|&i| residual[i].is_negative()).collect();
    let total = n + m + artificial_rows.len();

    let mut lower = lp.lower.clone();
    let mut upper = lp.upper.clone();
    lower.extend(std::iter::repeat(Some(Rational::zero())).take(m + artificial_rows.len()));
    upper.extend(std::iter::repeat(None).take(m + artificial_rows.len()));

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    x.resize(total, Rational::zero());
    let mut art_iter = artificial_rows.iter().enumerate().peekable();
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = c.coeffs.clone();
        row.resize(total, Rational::zero());
        row[n + i] = Rational::one();
        match art_iter.peek() {
            Some(&(k, &ai)) if ai == i => {
                // -a·x - s + art = -(rhs), with art = a·x - rhs > 0 basic.
                let col = n + m + k;
                for v in row.iter_mut() {
                    *v = -&*v;
                }
                row[col] = Rational::one();
                x[col] = -&residual[i];
                basis.push(col);
                art_iter.next();
            }
            _ => {
                x[n + i] = residual[i].clone();
                basis.push(n + i);
            }
        }
        rows.push(row);
    }
    let mut row_of = vec![None; total];
    for (i, &b) in basis.iter().enumerate() {
        row_of[b] = Some(i);
    }

    let mut tab = Tableau { rows, basis, row_of, x, lower, upper, reduced: Vec::new(), pivots: 0 };

    if !artificial_rows.is_empty() {
        let mut cost = vec![Rational::zero(); total];
        for c in cost.iter_mut().skip(n + m) {
            *c = -Rational::one();
        }
        tab.set_costs(&cost);
        tab.run()?;
        let infeasibility: Rational = tab.x[n + m..].iter().sum();
        if infeasibility.is_positive() {
            return Ok(finish(lp, tab, LpStatus::Infeasible));
        }
        // Artificials are all zero now; pin them there.
        for j in n + m..total {
            tab.upper[j] = Some(Rational::zero());
        }
    }

    let mut cost = lp.objective.clone();
    cost.resize(total, Rational::zero());
    tab.set_costs(&cost);
    let status = match tab.run()? {
        Step::Optimal => {
            tab.crossover(n)?;
            LpStatus::Optimal
        }
        _ => LpStatus::Unbounded,
    };
    let sol = finish(lp, tab, status);
    if status == LpStatus::Optimal && !lp.is_feasible(&sol.values) {
        return Err(Error::Invariant("simplex returned an infeasible vertex".into()));
    }
    Ok(sol)
}

fn finish(lp: &LinearProgram, mut tab: Tableau, status: LpStatus) -> LpSolution {
    tab.x.truncate(lp.num_vars);
    let objective_value = lp.evaluate(&tab.x);
    LpSolution { values: tab.x, objective_value, status, pivots: tab.pivots }
}

/// The LP relaxation of the ternary objective over `[-1, 1]`.
///
/// Variables `0..n` are the assignment `c(x)`; then one auxiliary `t_i` per
/// nonempty clause, in clause order, with `t_i - s_j·c(x_j) ≤ 0` for every
/// literal. The objective is `Σ ½ + ½ t_i`, plus 1 per empty clause.
pub fn build_lp(inst: &Instance) -> Result<LinearProgram> {
    inst.require_normalized()?;
    let n = inst.num_vars();
    let nonempty: Vec<usize> = (0..inst.num_clauses()).filter(|&i| !inst.clauses()[i].is_empty()).collect();
    let total = n + nonempty.len();
    let mut lp = LinearProgram::new(total);
    for j in 0..total {
        lp.set_bounds(j, Some(-Rational::one()), Some(Rational::one()));
    }

    let half = Rational::half();
    let mut objective = vec![Rational::zero(); total];
    for (k, &ci) in nonempty.iter().enumerate() {
        let t = n + k;
        objective[t] = half.clone();
        for lit in inst.clauses()[ci].iter() {
            let mut row = vec![Rational::zero(); total];
            row[t] = Rational::one();
            row[lit.var - 1] = Rational::from(-(lit.sign.value() as i64));
            lp.add_constraint(row, Rational::zero());
        }
    }
    let empties = inst.num_clauses() - nonempty.len();
    let constant = &half * &Rational::from(nonempty.len()) + Rational::from(empties);
    lp.set_objective(objective, constant);
    Ok(lp)
}

/// `c = 0`, every `t_i = -1`: feasible for every row of [`build_lp`].
pub fn relaxation_start(inst: &Instance) -> Vec<Rational> {
    let aux = inst.clauses().iter().filter(|c| !c.is_empty()).count();
    let mut start = vec![Rational::zero(); inst.num_vars()];
    start.extend(std::iter::repeat(-Rational::one()).take(aux));
    start
}

/// Raise every auxiliary `t_i` to `min_j s_j·c(x_j)`, the largest feasible value.
pub fn tighten(inst: &Instance, values: &mut [Rational]) {
    let n = inst.num_vars();
    let mut t = n;
    for clause in inst.clauses().iter().filter(|c| !c.is_empty()) {
        let min = clause
            .iter()
            .map(|l| if l.sign.value() > 0 { values[l.var - 1].clone() } else { -&values[l.var - 1] })
            .min()
            .expect("nonempty clause");
        values[t] = min;
        t += 1;
    }
}

/// Build, solve and tighten. Returns the full LP point (assignment then
/// auxiliaries) and its value. A non-optimal status here is a bug.
pub fn solve_relaxation(inst: &Instance) -> Result<(Vec<Rational>, Rational)> {
    let lp = build_lp(inst)?;
    let sol = simplex_solve_from(&lp, &relaxation_start(inst))?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::LpNotOptimal(sol.status.as_str()));
    }
    let mut values = sol.values;
    tighten(inst, &mut values);
    let value = lp.evaluate(&values);
    if value != sol.objective_value || !lp.is_feasible(&values) {
        return Err(Error::Invariant("tightening changed the LP optimum".into()));
    }
    Ok((values, value))
}

/// The ternary objective restated through the LP at an integral point; used to
/// cross-check `objective_value`.
pub fn lp_value_at(inst: &Instance, t: &TernaryAssignment) -> Result<Rational> {
    let lp = build_lp(inst)?;
    let mut values: Vec<Rational> = t.values().iter().map(|&v| Rational::from(v as i64)).collect();
    for clause in inst.clauses().iter().filter(|c| !c.is_empty()) {
        values.push(Rational::from(clause_min(clause, t)? as i64));
    }
    Ok(lp.evaluate(&values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{objective_value, Clause};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn inst(n: usize, cs: &[&[i64]]) -> Instance {
        Instance::new(n, cs.iter().map(|c| Clause::from_signed(c)).collect()).unwrap()
    }

    #[test]
    fn t_below_c() {
        // maximize t s.t. t <= c, t,c in [-1,1]
        let mut lp = LinearProgram::new(2);
        lp.set_bounds(0, Some(r(-1)), Some(r(1)));
        lp.set_bounds(1, Some(r(-1)), Some(r(1)));
        lp.add_constraint(vec![r(-1), r(1)], r(0));
        lp.set_objective(vec![r(0), r(1)], r(0));
        let s = simplex_solve(&lp).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.objective_value, r(1));
    }

    #[test]
    fn build_lp_single_clause() {
        let lp = build_lp(&inst(1, &[&[1]])).unwrap();
        assert_eq!(lp.num_vars, 2);
        assert_eq!(lp.constraints.len(), 1);
        assert_eq!(lp.constraints[0].coeffs, vec![r(-1), r(1)]);
        let s = simplex_solve(&lp).unwrap();
        assert_eq!(s.objective_value, r(1));
        assert_eq!(s.values, vec![r(1), r(1)]);
    }

    #[test]
    fn build_lp_complementary_units() {
        let lp = build_lp(&inst(1, &[&[1], &[-1]])).unwrap();
        assert_eq!(lp.num_vars, 3);
        assert_eq!(simplex_solve(&lp).unwrap().objective_value, r(1));
    }

    #[test]
    fn build_lp_single_arc() {
        let (values, value) = solve_relaxation(&inst(2, &[&[-1, 2]])).unwrap();
        assert_eq!(value, r(1));
        assert_eq!(&values[..2], &[r(-1), r(1)]);
    }

    #[test]
    fn build_lp_empty_and_constant() {
        let lp = build_lp(&inst(0, &[])).unwrap();
        assert_eq!(simplex_solve(&lp).unwrap().objective_value, r(0));
        let lp = build_lp(&inst(1, &[&[], &[]])).unwrap();
        assert_eq!(lp.objective_constant, r(2));
        assert_eq!(simplex_solve(&lp).unwrap().objective_value, r(2));
    }

    #[test]
    fn build_lp_rejects_unnormalized() {
        assert_eq!(build_lp(&inst(1, &[&[1, 1]])), Err(Error::NotNormalized(0)));
    }

    #[test]
    fn three_cycle_relaxation() {
        let (_, value) = solve_relaxation(&inst(3, &[&[-1, 2], &[-2, 3], &[-3, 1]])).unwrap();
        assert_eq!(value, q(3, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![r(1)], r(-1));
        assert_eq!(simplex_solve(&lp).unwrap().status, LpStatus::Infeasible);

        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1), r(-1)], r(3));
        lp.set_objective(vec![r(1), r(0)], r(0));
        assert_eq!(simplex_solve(&lp).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn phase_one_needed() {
        // x + y >= 2 written as -x - y <= -2, maximize -x - 2y, x,y in [0, 5]
        let mut lp = LinearProgram::new(2);
        lp.set_bounds(0, Some(r(0)), Some(r(5)));
        lp.set_bounds(1, Some(r(0)), Some(r(5)));
        lp.add_constraint(vec![r(-1), r(-1)], r(-2));
        lp.add_constraint(vec![r(1), r(0)], q(3, 2));
        lp.set_objective(vec![r(-1), r(-2)], r(0));
        let s = simplex_solve(&lp).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.values, vec![q(3, 2), q(1, 2)]);
        assert_eq!(s.objective_value, q(-5, 2));
    }

    #[test]
    fn free_variable() {
        // maximize -x with x free, x >= -3 from a row
        let mut lp = LinearProgram::new(1);
        lp.set_bounds(0, None, None);
        lp.add_constraint(vec![r(-1)], r(3));
        lp.set_objective(vec![r(-1)], r(0));
        let s = simplex_solve(&lp).unwrap();
        assert_eq!(s.values, vec![r(-3)]);
    }

    #[test]
    fn malformed() {
        let mut lp = LinearProgram::new(1);
        lp.set_bounds(0, Some(r(2)), Some(r(1)));
        assert!(matches!(simplex_solve(&lp), Err(Error::MalformedLp(_))));
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1)], r(0));
        assert!(matches!(simplex_solve(&lp), Err(Error::MalformedLp(_))));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's classic cycling LP, as a maximization with x >= 0.
        let mut lp = LinearProgram::new(4);
        lp.add_constraint(vec![q(1, 4), r(-60), q(-1, 25), r(9)], r(0));
        lp.add_constraint(vec![q(1, 2), r(-90), q(-1, 50), r(3)], r(0));
        lp.add_constraint(vec![r(0), r(0), r(1), r(0)], r(1));
        lp.set_objective(vec![q(3, 4), r(-150), q(1, 50), r(-6)], r(0));
        let s = simplex_solve(&lp).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.objective_value, q(1, 20));
    }

    #[test]
    fn dump_format() {
        let lp = build_lp(&inst(1, &[&[-1]])).unwrap();
        let text = lp.to_string();
        assert_eq!(
            text,
            "lp 2 1\nmax 0/1 1/2 const 1/2\nbound 1 -1/1 1/1\nbound 2 -1/1 1/1\nrow 1/1 1/1 <= 0/1\n"
        );
    }

    #[test]
    fn lp_value_matches_objective() {
        let i = inst(3, &[&[-1, 2], &[3], &[], &[-3, -2, 1]]);
        for code in 0..27u32 {
            let vals: Vec<i8> = (0..3).map(|k| (code / 3u32.pow(k) % 3) as i8 - 1).collect();
            let t = TernaryAssignment::new(vals).unwrap();
            assert_eq!(lp_value_at(&i, &t).unwrap(), objective_value(&i, &t).unwrap());
        }
    }
}
