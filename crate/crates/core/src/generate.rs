//! Seeded random instances and digraphs. Output is deterministic for a given
//! seed within a build; the stream is ChaCha8.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Digraph;
use crate::model::{Clause, Instance, Literal, Sign};

/// `m` clauses over `n` variables, sizes uniform in `kmin..=kmax`, variables
/// drawn with replacement (so repeats and complementary pairs occur) and
/// signs uniform.
pub fn gen_instance(n: usize, m: usize, kmin: usize, kmax: usize, seed: u64) -> Instance {
    assert!(n >= 1 || kmax == 0, "clauses need variables");
    assert!(kmin <= kmax, "kmin must not exceed kmax");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..m)
        .map(|_| {
            let k = rng.gen_range(kmin..=kmax);
            Clause::new(
                (0..k)
                    .map(|_| {
                        let var = rng.gen_range(1..=n);
                        Literal::new(var, if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg })
                    })
                    .collect(),
            )
        })
        .collect();
    Instance::new(n, clauses).expect("variables drawn in range")
}

/// A generated digraph and, when planted, the forward-crossing arc count of
/// the planted bipartition (a lower bound on the maximum directed cut).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedDigraph {
    pub graph: Digraph,
    pub planted_dicut: Option<usize>,
    /// `-1` / `+1` per vertex for the planted bipartition.
    pub planted_side: Option<Vec<i8>>,
}

/// `m` arcs on `n` vertices. Without `planted`, endpoints are uniform (loops
/// and parallel arcs included). With `planted = Some(density)`, a random
/// bipartition is drawn and each arc is, with probability `density`, a
/// forward arc across it; the rest are uniform noise.
pub fn gen_digraph(n: usize, m: usize, seed: u64, planted: Option<f64>) -> GeneratedDigraph {
    assert!(n >= 1 || m == 0, "arcs need vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Option<Vec<i8>> = planted.map(|_| (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect());
    let sources: Vec<usize> = side.as_ref().map_or_else(Vec::new, |s| (1..=n).filter(|&v| s[v - 1] < 0).collect());
    let sinks: Vec<usize> = side.as_ref().map_or_else(Vec::new, |s| (1..=n).filter(|&v| s[v - 1] > 0).collect());
    let density = planted.unwrap_or(0.0).clamp(0.0, 1.0);

    let arcs: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            if !sources.is_empty() && !sinks.is_empty() && rng.gen_bool(density) {
                (*sources.choose(&mut rng).unwrap(), *sinks.choose(&mut rng).unwrap())
            } else {
                (rng.gen_range(1..=n), rng.gen_range(1..=n))
            }
        })
        .collect();
    let graph = Digraph::new(n, arcs).expect("endpoints drawn in range");
    let planted_dicut = side.as_ref().map(|s| graph.dicut_value(s));
    GeneratedDigraph { graph, planted_dicut, planted_side: side }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(gen_instance(5, 10, 1, 4, 3), gen_instance(5, 10, 1, 4, 3));
        assert_ne!(gen_instance(5, 10, 1, 4, 3), gen_instance(5, 10, 1, 4, 4));
        assert_eq!(gen_digraph(6, 12, 9, Some(0.7)), gen_digraph(6, 12, 9, Some(0.7)));
    }

    #[test]
    fn shapes() {
        let i = gen_instance(4, 30, 2, 3, 0);
        assert_eq!(i.num_clauses(), 30);
        assert!(i.clauses().iter().all(|c| (2..=3).contains(&c.len())));
        let g = gen_digraph(5, 20, 1, None).graph;
        assert_eq!(g.num_arcs(), 20);
    }

    #[test]
    fn planted_bound_holds() {
        for seed in 0..20 {
            let gd = gen_digraph(6, 15, seed, Some(0.8));
            let side = gd.planted_side.unwrap();
            assert_eq!(gd.graph.dicut_value(&side), gd.planted_dicut.unwrap());
        }
        let full = gen_digraph(4, 10, 5, Some(1.0));
        let side = full.planted_side.unwrap();
        if side.contains(&1) && side.contains(&-1) {
            assert_eq!(full.planted_dicut, Some(10));
        }
    }
}
