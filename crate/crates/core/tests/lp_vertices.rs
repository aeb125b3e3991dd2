//! Simplex against brute-force vertex enumeration on small bounded LPs.

use maxeven::lp::{simplex_solve, LinearProgram, LpStatus};
use maxeven::Rational;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Solve the square system `rows · x = rhs` by Gauss-Jordan; `None` if singular.
fn solve_square(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rows.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, p);
        rhs.swap(col, p);
        let inv = rows[col][col].recip().unwrap();
        for v in rows[col].iter_mut() {
            *v = &*v * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..n {
                    rows[r][c] = &rows[r][c] - &(&f * &rows[col][c]);
                }
                rhs[r] = &rhs[r] - &(&f * &rhs[col]);
            }
        }
    }
    Some(rhs)
}

/// Best objective over all basic feasible points; bounds must be finite.
fn vertex_optimum(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.num_vars;
    let mut halfspaces: Vec<(Vec<Rational>, Rational)> =
        lp.constraints.iter().map(|c| (c.coeffs.clone(), c.rhs.clone())).collect();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        halfspaces.push((e.clone(), lp.upper[j].clone().unwrap()));
        halfspaces.push((e.iter().map(|v| -v).collect(), -lp.lower[j].clone().unwrap()));
    }
    let k = halfspaces.len();
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        let rows = pick.iter().map(|&i| halfspaces[i].0.clone()).collect();
        let rhs = pick.iter().map(|&i| halfspaces[i].1.clone()).collect();
        if let Some(x) = solve_square(rows, rhs) {
            if lp.is_feasible(&x) {
                let v = lp.evaluate(&x);
                if best.as_ref().map_or(true, |b| &v > b) {
                    best = Some(v);
                }
            }
        }
        // next n-subset of 0..k
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] < k - n + i {
                pick[i] += 1;
                for t in i + 1..n {
                    pick[t] = pick[t - 1] + 1;
                }
                break;
            }
        }
    }
}

fn small_lp() -> impl Strategy<Value = LinearProgram> {
    (1usize..4, 0usize..5).prop_flat_map(|(n, m)| {
        let frac = (-6i64..=6, 1i64..=3).prop_map(|(a, b)| q(a, b));
        (
            prop::collection::vec((-3i64..=0, 0i64..=3), n),
            prop::collection::vec(frac.clone(), n),
            prop::collection::vec((prop::collection::vec(frac.clone(), n), -4i64..=4), m),
        )
            .prop_map(move |(bounds, obj, rows)| {
                let mut lp = LinearProgram::new(n);
                for (j, (lo, hi)) in bounds.into_iter().enumerate() {
                    lp.set_bounds(j, Some(Rational::from(lo)), Some(Rational::from(hi)));
                }
                for (coeffs, b) in rows {
                    lp.add_constraint(coeffs, Rational::from(b));
                }
                lp.set_objective(obj, Rational::zero());
                lp
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn simplex_matches_vertex_enumeration(lp in small_lp()) {
        let sol = simplex_solve(&lp).unwrap();
        match vertex_optimum(&lp) {
            None => prop_assert_eq!(sol.status, LpStatus::Infeasible),
            Some(best) => {
                prop_assert_eq!(sol.status, LpStatus::Optimal);
                prop_assert!(lp.is_feasible(&sol.values));
                prop_assert_eq!(&sol.objective_value, &lp.evaluate(&sol.values));
                prop_assert_eq!(sol.objective_value, best);
            }
        }
    }
}

#[test]
fn enumeration_oracle_sanity() {
    // maximize x + y with x + y <= 3/2 in the unit box
    let mut lp = LinearProgram::new(2);
    lp.set_bounds(0, Some(Rational::zero()), Some(Rational::one()));
    lp.set_bounds(1, Some(Rational::zero()), Some(Rational::one()));
    lp.add_constraint(vec![Rational::one(), Rational::one()], q(3, 2));
    lp.set_objective(vec![Rational::one(), Rational::one()], Rational::zero());
    assert_eq!(vertex_optimum(&lp), Some(q(3, 2)));
}
