//! Brute-force references. Deliberately naive, with their own evaluation code,
//! so they share nothing with the solve path beyond the input types.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::model::Instance;
use crate::rational::Rational;

pub const DEFAULT_BOOL_CAP: usize = 20;
pub const DEFAULT_TERNARY_CAP: usize = 13;

/// Best value and the first assignment reaching it, in counting order
/// (binary with variable 1 as the low bit, or base 3 with digits `-1, 0, +1`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimum<T> {
    pub value: T,
    pub witness: Vec<i8>,
}

fn check_cap(what: &'static str, got: usize, cap: usize) -> Result<()> {
    if got > cap {
        return Err(Error::CapExceeded { what, got, cap });
    }
    Ok(())
}

fn bool_point(n: usize, mask: u64) -> Vec<i8> {
    (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect()
}

fn literal_values<'a>(inst: &'a Instance, point: &[i8]) -> impl Iterator<Item = Vec<i8>> + 'a {
    let point = point.to_vec();
    inst.clauses()
        .iter()
        .map(move |c| c.iter().map(|l| l.sign.value() * point[l.var - 1]).collect())
}

fn maximize_bool(n: usize, cap: usize, score: impl Fn(&[i8]) -> usize) -> Result<Optimum<usize>> {
    check_cap("variables", n, cap)?;
    let mut best = Optimum { value: 0, witness: bool_point(n, 0) };
    let mut first = true;
    for mask in 0u64..(1u64 << n) {
        let p = bool_point(n, mask);
        let s = score(&p);
        if first || s > best.value {
            best = Optimum { value: s, witness: p };
            first = false;
        }
    }
    Ok(best)
}

/// Most clauses with no false literal, over all `2ⁿ` assignments.
pub fn brute_strong_opt(inst: &Instance, cap: usize) -> Result<Optimum<usize>> {
    maximize_bool(inst.num_vars(), cap, |p| {
        literal_values(inst, p).filter(|vals| vals.iter().all(|&v| v == 1)).count()
    })
}

/// Most clauses with an even number of false literals.
pub fn brute_weak_opt(inst: &Instance, cap: usize) -> Result<Optimum<usize>> {
    maximize_bool(inst.num_vars(), cap, |p| {
        literal_values(inst, p)
            .filter(|vals| vals.iter().filter(|&&v| v == -1).count() % 2 == 0)
            .count()
    })
}

/// Maximum over `{-1, 0, +1}ⁿ` of `Σ ½ + ½·min` (empty clauses count 1).
pub fn brute_ternary_opt(inst: &Instance, cap: usize) -> Result<Optimum<Rational>> {
    let n = inst.num_vars();
    check_cap("variables", n, cap)?;
    let total = 3u64.pow(n as u32);
    let mut best_doubled = i64::MIN;
    let mut witness = vec![-1; n];
    let mut point = vec![-1i8; n];
    for code in 0..total {
        let mut c = code;
        for p in point.iter_mut() {
            *p = (c % 3) as i8 - 1;
            c /= 3;
        }
        let doubled: i64 = literal_values(inst, &point)
            .map(|vals| vals.iter().min().map_or(2, |&m| 1 + m as i64))
            .sum();
        if doubled > best_doubled {
            best_doubled = doubled;
            witness.clone_from(&point);
        }
    }
    Ok(Optimum { value: Rational::new(best_doubled, 2)?, witness })
}

/// Most arcs from side `-1` to side `+1` over all bipartitions.
pub fn brute_max_dicut(g: &Digraph, cap: usize) -> Result<Optimum<usize>> {
    maximize_bool(g.num_vertices(), cap, |side| {
        g.arcs().iter().filter(|&&(u, v)| side[u - 1] == -1 && side[v - 1] == 1).count()
    })
}

/// Most arcs with endpoints on different sides; loops never count.
pub fn brute_max_cut(g: &Digraph, cap: usize) -> Result<Optimum<usize>> {
    maximize_bool(g.num_vertices(), cap, |side| {
        g.arcs().iter().filter(|&&(u, v)| u != v && side[u - 1] != side[v - 1]).count()
    })
}

/// Whether the selected arcs admit a topological order (Kahn's algorithm).
pub fn check_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indegree = vec![0usize; n + 1];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(u, v) in arcs {
        out[u].push(v);
        indegree[v] += 1;
    }
    let mut stack: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                stack.push(v);
            }
        }
    }
    removed == n
}

/// Arcs of `g` at the given indices.
pub fn kept_subgraph(g: &Digraph, kept: &[usize]) -> Vec<(usize, usize)> {
    kept.iter().map(|&i| g.arcs()[i]).collect()
}
