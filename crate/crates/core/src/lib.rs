//! Solvers for three promise problems over signed-literal clauses and digraphs:
//!
//! * **Max-And-Even**: given clauses of which `ρ` can be strongly satisfied
//!   (no literal false), find a ±1 assignment weakly satisfying (an even number
//!   of literals false) at least `ρ` of them.
//! * **Max-DiCut-Cut**: given a digraph with a directed cut of value `ρ`, find
//!   an undirected cut of value at least `ρ`.
//! * **Max-DiCut-Acyclic**: under the same promise, find an acyclic subgraph
//!   with at least `ρ` arcs.
//!
//! The pipeline is: [`model::normalize`] → [`lp::build_lp`] →
//! [`lp::simplex_solve`] (exact rationals, bounded variables, Bland's rule) →
//! [`half_integral::half_integral_solve`] (collapse to `{-1, 0, +1}`) →
//! [`rounding::derandomized_round`] or [`graph::candidate_orderings`].
//!
//! Everything is exact; there are no floating-point tolerances on the solve path.
//! The [`oracle`] module holds brute-force references used by tests and the
//! `verify` command.

pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod half_integral;
pub mod lp;
pub mod model;
pub mod oracle;
pub mod rational;
pub mod rounding;

pub use error::{Error, Result};
pub use graph::{solve_dicut_acyclic, solve_dicut_cut, AcyclicResult, CutResult, Digraph, VertexOrdering};
pub use half_integral::{half_integral_solve, HalfIntegral};
pub use model::{BoolAssignment, Clause, Instance, Literal, Sign, TernaryAssignment};
pub use rational::Rational;
pub use rounding::{solve_max_and_even, Solution};
