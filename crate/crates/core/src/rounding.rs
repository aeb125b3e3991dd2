//! From a ternary assignment to a ±1 assignment: keep the ±1 entries and
//! resolve the zeros, either at random or by conditional expectations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half_integral::half_integral_solve;
use crate::model::{normalize, objective_value, weak_count, BoolAssignment, Instance, NormalizationReport, TernaryAssignment};
use crate::rational::Rational;

/// Cap on zero entries accepted by [`expected_weak_count`].
pub const DEFAULT_ZERO_CAP: usize = 20;

/// Name of the generator behind seeded rounding and the instance generators.
pub const PRNG_NAME: &str = "ChaCha8";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub assignment: BoolAssignment,
    pub weak_count: usize,
    pub lp_value: Rational,
    /// Promised strong optimum, when the caller knows it.
    pub promise_note: Option<usize>,
}

/// Zeros become ±1 with equal probability, from a seeded ChaCha8 stream.
pub fn randomized_round(t: &TernaryAssignment, seed: u64) -> BoolAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = t
        .values()
        .iter()
        .map(|&v| if v != 0 { v } else if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect();
    BoolAssignment::new(values).expect("values are ±1")
}

/// Exact expected weak count over all completions of the zeros in `t`.
///
/// Per clause: if some zero variable occurs an odd number of times the product
/// is a fair coin (½); otherwise the product is fixed. On a normalized
/// instance that is simply "½ if any zero variable occurs".
pub fn expected_weak_count(inst: &Instance, t: &TernaryAssignment, zero_cap: usize) -> Result<Rational> {
    if t.len() != inst.num_vars() {
        return Err(Error::LengthMismatch { got: t.len(), expected: inst.num_vars() });
    }
    let zeros = t.zero_count();
    if zeros > zero_cap {
        return Err(Error::CapExceeded { what: "zero entries", got: zeros, cap: zero_cap });
    }
    let mut halves = 0usize;
    let mut ones = 0usize;
    for clause in inst.clauses() {
        let mut odd_zero = std::collections::BTreeMap::<usize, bool>::new();
        let mut product = 1i8;
        for l in clause.iter() {
            if l.var == 0 || l.var > t.len() {
                return Err(Error::VarOutOfRange { var: l.var, n: t.len() });
            }
            match t.get(l.var) {
                0 => {
                    let e = odd_zero.entry(l.var).or_insert(false);
                    *e = !*e;
                    product *= l.sign.value();
                }
                v => product *= l.eval(v),
            }
        }
        if odd_zero.values().any(|&odd| odd) {
            halves += 1;
        } else if product == 1 {
            ones += 1;
        }
    }
    Ok(Rational::from(ones) + Rational::half() * Rational::from(halves))
}

/// Fix the zeros of `t` one at a time, in ascending variable order.
///
/// When variable `v` is fixed, the clauses in which it is the last unfixed
/// variable are fully determined by its sign; `v` takes the sign that makes the
/// majority of them even (ties go to `+1`). Every other clause still has a
/// free variable, so its conditional expectation stays ½ and the overall
/// expectation never drops.
pub fn derandomized_round(inst: &Instance, t: &TernaryAssignment) -> Result<Solution> {
    inst.require_normalized()?;
    if t.len() != inst.num_vars() {
        return Err(Error::LengthMismatch { got: t.len(), expected: inst.num_vars() });
    }
    let n = inst.num_vars();
    let mut values: Vec<i8> = t.values().to_vec();

    // Clauses grouped by their highest-numbered free variable.
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (ci, clause) in inst.clauses().iter().enumerate() {
        if let Some(last) = clause.iter().filter(|l| t.get(l.var) == 0).map(|l| l.var).max() {
            closing[last].push(ci);
        }
    }

    for v in 1..=n {
        if values[v - 1] != 0 {
            continue;
        }
        let mut votes: i64 = 0;
        for &ci in &closing[v] {
            // Sign for v that makes the product +1.
            let mut wanted = 1i8;
            for l in inst.clauses()[ci].iter() {
                wanted *= if l.var == v { l.sign.value() } else { l.eval(values[l.var - 1]) };
            }
            votes += wanted as i64;
        }
        values[v - 1] = if votes >= 0 { 1 } else { -1 };
    }

    let assignment = BoolAssignment::new(values)?;
    Ok(Solution {
        weak_count: weak_count(inst, &assignment)?,
        lp_value: objective_value(inst, t)?,
        assignment,
        promise_note: None,
    })
}

/// Full Max-And-Even pipeline with bookkeeping about normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxAndEven {
    pub solution: Solution,
    pub ternary: TernaryAssignment,
    pub normalization: NormalizationReport,
    /// Weak count over the kept (normalized) clauses only.
    pub kept_weak_count: usize,
}

/// Normalize, solve the ternary LP, then derandomize. The reported
/// `weak_count` is over all original clauses, tautologies included.
pub fn solve_max_and_even(inst: &Instance) -> Result<MaxAndEven> {
    let (normalized, normalization) = normalize(inst);
    let half = half_integral_solve(&normalized)?;
    let kept = derandomized_round(&normalized, &half.assignment)?;
    let total = weak_count(inst, &kept.assignment)?;
    if Rational::from(kept.weak_count) < half.lp_value || total < kept.weak_count {
        return Err(Error::Invariant("rounding fell below the LP value".into()));
    }
    Ok(MaxAndEven {
        solution: Solution {
            assignment: kept.assignment,
            weak_count: total,
            lp_value: half.lp_value,
            promise_note: None,
        },
        ternary: half.assignment,
        normalization,
        kept_weak_count: kept.weak_count,
    })
}
