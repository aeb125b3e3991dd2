//! Turning an LP optimum over `[-1, 1]ⁿ` into an equally good point of `{-1, 0, +1}ⁿ`.
//!
//! After flipping literal signs so that every coordinate is nonnegative, the
//! objective restricted to the region `0 ≤ c(v₁) ≤ … ≤ c(vₙ)` (for a fixed
//! order) is affine: each clause's minimum is attained at a literal that can be
//! picked from the order alone. The lowest group of equal fractional values can
//! then slide freely in both directions, so at an optimum its total coefficient
//! is zero and the group can be dropped to 0 for free. Repeating leaves only
//! 0s and 1s; undoing the flip gives the ternary assignment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::solve_relaxation;
use crate::model::{objective_value, Clause, Instance, Literal, TernaryAssignment};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignFlip {
    pub sigma: Vec<i8>,
}

/// Negate every variable with a negative value, together with each of its
/// literal occurrences, so the objective is unchanged.
pub fn flip_signs(inst: &Instance, c: &[Rational]) -> (Instance, SignFlip, Vec<Rational>) {
    let sigma: Vec<i8> = c.iter().map(|v| if v.is_negative() { -1 } else { 1 }).collect();
    let flipped_values = c.iter().map(Rational::abs).collect();
    let clauses = inst
        .clauses()
        .iter()
        .map(|cl| {
            Clause::new(
                cl.iter()
                    .map(|l| if sigma[l.var - 1] < 0 { Literal::new(l.var, l.sign.flipped()) } else { *l })
                    .collect(),
            )
        })
        .collect();
    let flipped = Instance::new(inst.num_vars(), clauses).expect("same variables");
    (flipped, SignFlip { sigma }, flipped_values)
}

/// Variable ids (1-based) by ascending value, ties by id.
pub fn sorted_order(c: &[Rational]) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=c.len()).collect();
    order.sort_by(|&a, &b| c[a - 1].cmp(&c[b - 1]).then(a.cmp(&b)));
    order
}

/// Inverse of an order: `rank[v - 1]` is the position of variable `v`.
pub fn ranks(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        rank[v - 1] = pos;
    }
    rank
}

/// Index of the literal attaining the clause minimum on the sorted region:
/// the highest-ranked negative literal if there is one, else the
/// lowest-ranked literal.
pub fn select_argmin(clause: &Clause, rank: &[usize]) -> Result<usize> {
    let by_rank = |&(_, l): &(usize, &Literal)| rank[l.var - 1];
    let negative = clause.iter().enumerate().filter(|(_, l)| l.sign.value() < 0).max_by_key(by_rank);
    negative
        .or_else(|| clause.iter().enumerate().min_by_key(by_rank))
        .map(|(j, _)| j)
        .ok_or(Error::EmptyClause)
}

/// `F(c) = constant + Σ_v coefficients[v]·c(v)`, valid on the sorted region of
/// the order it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    pub constant: Rational,
    pub coefficients: Vec<Rational>,
    /// Selected literal per clause; `None` for empty clauses.
    pub selector: Vec<Option<usize>>,
}

impl AffineForm {
    pub fn evaluate(&self, c: &[Rational]) -> Rational {
        self.coefficients.iter().zip(c).map(|(a, v)| a * v).sum::<Rational>() + &self.constant
    }
}

pub fn affine_form(inst: &Instance, order: &[usize]) -> Result<AffineForm> {
    let rank = ranks(order);
    let half = Rational::half();
    let mut constant = Rational::zero();
    let mut coefficients = vec![Rational::zero(); inst.num_vars()];
    let mut selector = Vec::with_capacity(inst.num_clauses());
    for clause in inst.clauses() {
        if clause.is_empty() {
            constant += Rational::one();
            selector.push(None);
            continue;
        }
        let j = select_argmin(clause, &rank)?;
        let lit = clause.literals[j];
        constant += &half;
        if lit.sign.value() > 0 {
            coefficients[lit.var - 1] += &half;
        } else {
            coefficients[lit.var - 1] -= &half;
        }
        selector.push(Some(j));
    }
    Ok(AffineForm { constant, coefficients, selector })
}

/// The objective `Σ ½ + ½·min` at a rational point.
pub fn relaxed_objective(inst: &Instance, c: &[Rational]) -> Rational {
    let half = Rational::half();
    inst.clauses()
        .iter()
        .map(|clause| {
            clause
                .iter()
                .map(|l| if l.sign.value() > 0 { c[l.var - 1].clone() } else { -&c[l.var - 1] })
                .min()
                .map_or_else(Rational::one, |m| &half + &half * &m)
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapse {
    /// Per variable, in `{0, 1}`.
    pub values: Vec<i8>,
    pub iterations: usize,
}

/// Repeatedly lower the smallest group of equal values in `(0, 1)` to 0.
///
/// `c` must be nonnegative, at most 1, and optimal for the (sign-flipped)
/// instance; otherwise a group with nonzero coefficient sum is reported.
pub fn collapse_blocks(c: &[Rational], inst: &Instance) -> Result<Collapse> {
    let one = Rational::one();
    if c.len() != inst.num_vars() {
        return Err(Error::LengthMismatch { got: c.len(), expected: inst.num_vars() });
    }
    if c.iter().any(|v| v.is_negative() || v > &one) {
        return Err(Error::Invariant("collapse input outside [0, 1]".into()));
    }
    let mut c = c.to_vec();
    let start = relaxed_objective(inst, &c);
    let mut iterations = 0;

    loop {
        let order = sorted_order(&c);
        // sorted and nonnegative by construction of `order`
        debug_assert!(order.windows(2).all(|w| c[w[0] - 1] <= c[w[1] - 1]));

        let Some(first) = order.iter().position(|&v| c[v - 1].is_positive()) else {
            break;
        };
        let value = c[order[first] - 1].clone();
        if value == one {
            break;
        }
        let block: Vec<usize> = order[first..].iter().copied().take_while(|&v| c[v - 1] == value).collect();

        let form = affine_form(inst, &order)?;
        if form.evaluate(&c) != relaxed_objective(inst, &c) {
            return Err(Error::Invariant("affine form disagrees with the objective".into()));
        }
        let sum: Rational = block.iter().map(|&v| &form.coefficients[v - 1]).sum();
        if !sum.is_zero() {
            return Err(Error::NonZeroBlockSum { value, size: block.len(), sum });
        }
        for &v in &block {
            c[v - 1] = Rational::zero();
        }
        iterations += 1;
        if iterations > inst.num_vars() {
            return Err(Error::Invariant("collapse did not terminate within n rounds".into()));
        }
        if relaxed_objective(inst, &c) != start {
            return Err(Error::Invariant("collapse changed the objective".into()));
        }
    }

    let values = c.iter().map(|v| if v.is_zero() { 0 } else { 1 }).collect();
    Ok(Collapse { values, iterations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfIntegral {
    pub assignment: TernaryAssignment,
    pub lp_value: Rational,
    /// Block collapses performed.
    pub collapses: usize,
}

/// Optimal ternary assignment of a normalized instance, through the LP.
pub fn half_integral_solve(inst: &Instance) -> Result<HalfIntegral> {
    let (point, lp_value) = solve_relaxation(inst)?;
    let c = &point[..inst.num_vars()];
    let (flipped, flip, nonneg) = flip_signs(inst, c);
    let collapse = collapse_blocks(&nonneg, &flipped)?;
    let values: Vec<i8> = collapse.values.iter().zip(&flip.sigma).map(|(v, s)| v * s).collect();
    let assignment = TernaryAssignment::new(values)?;
    if objective_value(inst, &assignment)? != lp_value {
        return Err(Error::Invariant("ternary assignment lost LP value".into()));
    }
    Ok(HalfIntegral { assignment, lp_value, collapses: collapse.iterations })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn flip_examples() {
        let i = inst(2, &[&[1, -2]]);
        let (fi, f, c) = flip_signs(&i, &[q(-1, 2), q(1, 4)]);
        assert_eq!(f.sigma, vec![-1, 1]);
        assert_eq!(c, vec![q(1, 2), q(1, 4)]);
        assert_eq!(fi.clauses()[0], Clause::from_signed(&[-1, -2]));

        let (fi, f, _) = flip_signs(&i, &[r(0), r(1)]);
        assert_eq!(f.sigma, vec![1, 1]);
        assert_eq!(fi, i);

        let i = inst(1, &[&[1]]);
        let (fi, _, c) = flip_signs(&i, &[r(-1)]);
        assert_eq!(fi.clauses()[0], Clause::from_signed(&[-1]));
        assert_eq!(c, vec![r(1)]);
        assert_eq!(relaxed_objective(&i, &[r(-1)]), r(0));
        assert_eq!(relaxed_objective(&fi, &c), r(0));
    }

    #[test]
    fn sorted_order_examples() {
        assert_eq!(sorted_order(&[q(1, 4), r(0), q(1, 4)]), vec![2, 1, 3]);
        assert_eq!(sorted_order(&vec![q(1, 3); 4]), vec![1, 2, 3, 4]);
        assert_eq!(sorted_order(&[r(1), r(0)]), vec![2, 1]);
        assert_eq!(ranks(&[2, 1, 3]), vec![1, 0, 2]);
    }

    #[test]
    fn select_argmin_examples() {
        let rank = ranks(&[1, 2]);
        assert_eq!(select_argmin(&Clause::from_signed(&[1, 2]), &rank).unwrap(), 0);
        assert_eq!(select_argmin(&Clause::from_signed(&[1, -2]), &rank).unwrap(), 1);
        assert_eq!(select_argmin(&Clause::from_signed(&[1, -2]), &ranks(&[2, 1])).unwrap(), 1);
        assert_eq!(select_argmin(&Clause::from_signed(&[-1, -2]), &rank).unwrap(), 1);
        assert_eq!(select_argmin(&Clause::from_signed(&[2, 1]), &rank).unwrap(), 1);
        assert_eq!(select_argmin(&Clause::new(vec![]), &rank), Err(Error::EmptyClause));
    }

    #[test]
    fn affine_form_examples() {
        let f = affine_form(&inst(1, &[&[1]]), &[1]).unwrap();
        assert_eq!(f.constant, q(1, 2));
        assert_eq!(f.coefficients, vec![q(1, 2)]);

        let i = inst(1, &[&[1], &[-1]]);
        let f = affine_form(&i, &[1]).unwrap();
        assert_eq!(f.constant, r(1));
        assert_eq!(f.coefficients, vec![r(0)]);
        for p in [r(0), q(1, 2), r(1)] {
            assert_eq!(f.evaluate(&[p.clone()]), relaxed_objective(&i, &[p]));
        }

        let i = inst(2, &[&[-1, 2]]);
        let f = affine_form(&i, &[1, 2]).unwrap();
        assert_eq!(f.constant, q(1, 2));
        assert_eq!(f.coefficients, vec![q(-1, 2), r(0)]);

        let i = inst(2, &[&[], &[1, 2]]);
        let f = affine_form(&i, &[2, 1]).unwrap();
        assert_eq!(f.constant, q(3, 2));
        assert_eq!(f.selector, vec![None, Some(1)]);
    }

    #[test]
    fn collapse_examples() {
        let i = inst(2, &[&[1, 2]]);
        let c = collapse_blocks(&[r(0), r(1)], &i).unwrap();
        assert_eq!(c.values, vec![0, 1]);
        assert_eq!(c.iterations, 0);

        let i = inst(1, &[&[1], &[-1]]);
        let c = collapse_blocks(&[q(1, 2)], &i).unwrap();
        assert_eq!(c.values, vec![0]);
        assert_eq!(relaxed_objective(&i, &[r(0)]), r(1));

        let i = inst(3, &[&[1], &[-2]]);
        let start = [q(1, 3), q(1, 3), r(1)];
        let c = collapse_blocks(&start, &i).unwrap();
        assert_eq!(c.values, vec![0, 0, 1]);
        assert_eq!(relaxed_objective(&i, &start), relaxed_objective(&i, &[r(0), r(0), r(1)]));
    }

    #[test]
    fn collapse_rejects_non_optimal() {
        let i = inst(1, &[&[1]]);
        assert!(matches!(collapse_blocks(&[q(1, 2)], &i), Err(Error::NonZeroBlockSum { .. })));
        assert!(collapse_blocks(&[q(-1, 2)], &i).is_err());
    }

    #[test]
    fn solve_examples() {
        let h = half_integral_solve(&inst(2, &[&[-1, 2]])).unwrap();
        assert_eq!(h.lp_value, r(1));
        assert_eq!(h.assignment.values(), &[-1, 1]);

        let h = half_integral_solve(&inst(1, &[&[1], &[-1]])).unwrap();
        assert_eq!(h.lp_value, r(1));

        let h = half_integral_solve(&inst(3, &[&[-1, 2], &[-2, 3], &[-3, 1]])).unwrap();
        assert_eq!(h.lp_value, q(3, 2));
        assert_eq!(objective_value(&inst(3, &[&[-1, 2], &[-2, 3], &[-3, 1]]), &h.assignment).unwrap(), q(3, 2));
    }
}
