//! `maxeven`: command-line front end for the Max-And-Even, Max-DiCut-Cut and
//! Max-DiCut-Acyclic solvers.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 oracle cap
//! exceeded, 4 guarantee violated or internal invariant broken.

mod report;
mod verify;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use maxeven::format::{detect_kind, parse_digraph, parse_instance, render_digraph, render_instance, FileKind, ParseError};
use maxeven::generate::{gen_digraph, gen_instance};
use maxeven::half_integral::half_integral_solve;
use maxeven::lp::build_lp;
use maxeven::model::{normalize, objective_value, weak_count};
use maxeven::oracle::{check_acyclic, kept_subgraph, DEFAULT_BOOL_CAP};
use maxeven::rounding::{randomized_round, PRNG_NAME};
use maxeven::{solve_dicut_acyclic, solve_dicut_cut, solve_max_and_even, Rational};

use report::RunReport;
use verify::{Check, Outcome};

#[derive(Parser, Debug)]
#[command(name = "maxeven", version, about = "Exact LP-based solvers for Max-And-Even and directed-cut promise problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    /// Also print values divided by the number of clauses/arcs.
    #[arg(long)]
    fraction: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a Max-And-Even instance (`p mae` file, `-` for stdin).
    Solve {
        file: PathBuf,
        /// Round zeros at random with this seed instead of derandomizing.
        #[arg(long)]
        seed: Option<u64>,
        /// Print the LP in the plain-text dump format and exit.
        #[arg(long)]
        dump_lp: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Undirected cut at least as large as the maximum directed cut (`p dg` file).
    Cut {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Acyclic subgraph at least as large as the maximum directed cut (`p dg` file).
    Acyclic {
        file: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a random `p mae` instance.
    GenInstance {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        kmin: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a random `p dg` digraph, optionally with a planted directed cut.
    GenDigraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability that an arc is a forward arc across the planted bipartition.
        #[arg(long)]
        planted: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run solvers and brute-force oracles and check the guarantees.
    Verify {
        files: Vec<PathBuf>,
        /// Largest variable/vertex count the oracles will enumerate.
        #[arg(long, default_value_t = DEFAULT_BOOL_CAP)]
        oracle_cap: usize,
        /// Additionally check this many generated instance/digraph pairs.
        #[arg(long, default_value_t = 0)]
        trials: u64,
        /// Base seed for generated trials.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}: unrecognized file header (expected 'p mae' or 'p dg')")]
    UnknownFormat(String),
    #[error("invalid argument: {0}")]
    Usage(String),
    #[error("{0}")]
    Solver(maxeven::Error),
    #[error("verification finished with status {0}")]
    Verify(u8),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::UnknownFormat(_) | CliError::Usage(_) => 2,
            CliError::Solver(maxeven::Error::CapExceeded { .. }) => 3,
            CliError::Solver(_) => 4,
            CliError::Verify(code) => *code,
        }
    }
}

impl From<maxeven::Error> for CliError {
    fn from(e: maxeven::Error) -> Self {
        CliError::Solver(e)
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn parse_err(path: &Path) -> impl Fn(ParseError) -> CliError + '_ {
    move |source| CliError::Parse { path: path.display().to_string(), source }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(report: &RunReport, out: &OutputArgs) {
    if out.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn fraction(value: &Rational, total: usize) -> Value {
    match Rational::from(total).recip() {
        Ok(inv) => (value * &inv).to_string().into(),
        Err(_) => Value::Null,
    }
}

fn elapsed_ms(start: Instant) -> Value {
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    Value::from((ms * 1000.0).round() / 1000.0)
}

fn cmd_solve(file: &Path, seed: Option<u64>, dump_lp: bool, out: &OutputArgs) -> Result<(), CliError> {
    let inst = parse_instance(&read_input(file)?).map_err(parse_err(file))?;
    if dump_lp {
        print!("{}", build_lp(&normalize(&inst).0)?);
        return Ok(());
    }
    let start = Instant::now();
    let (normalized, norm) = normalize(&inst);
    let (assignment, ternary) = match seed {
        None => {
            let solved = solve_max_and_even(&inst)?;
            (solved.solution.assignment, solved.ternary)
        }
        Some(s) => {
            let half = half_integral_solve(&normalized)?;
            (randomized_round(&half.assignment, s), half.assignment)
        }
    };
    let elapsed = elapsed_ms(start);

    // Everything below is recomputed from the returned assignments.
    let lp_value = objective_value(&normalized, &ternary)?;
    let weak = weak_count(&inst, &assignment)?;
    let m = inst.num_clauses();

    let mut r = RunReport::new("solve");
    r.push("variables", inst.num_vars());
    r.push("clauses", m);
    r.push("kept_clauses", norm.kept.len());
    r.push("excluded_tautologies", norm.excluded_tautologies.len());
    r.push("empty_after_normalization", norm.empty_clauses.len());
    r.push("lp_value", lp_value.to_string());
    r.push("weak_count", weak);
    r.push("guarantee", format!("weak_count >= ceil(lp_value) = {}", lp_value.ceil_i64()));
    if out.fraction {
        r.push("lp_fraction", fraction(&lp_value, m));
        r.push("weak_fraction", fraction(&Rational::from(weak), m));
    }
    r.push("rounding", if seed.is_some() { "randomized" } else { "derandomized" });
    r.push("prng", PRNG_NAME);
    r.push("seed", seed.map_or(Value::Null, Value::from));
    r.push("ternary", ternary.values().to_vec());
    r.push("assignment", assignment.values().to_vec());
    r.push("elapsed_ms", elapsed);
    emit(&r, out);
    Ok(())
}

fn read_digraph(file: &Path) -> Result<maxeven::Digraph, CliError> {
    parse_digraph(&read_input(file)?).map_err(parse_err(file))
}

fn cmd_cut(file: &Path, out: &OutputArgs) -> Result<(), CliError> {
    let g = read_digraph(file)?;
    let start = Instant::now();
    let res = solve_dicut_cut(&g)?;
    let elapsed = elapsed_ms(start);
    let value = g.cut_value(&res.side);

    let mut r = RunReport::new("cut");
    r.push("vertices", g.num_vertices());
    r.push("arcs", g.num_arcs());
    r.push("loops", g.num_loops());
    r.push("lp_value", res.lp_value.to_string());
    r.push("cut_value", value);
    r.push("directed_cut_of_side", g.dicut_value(&res.side));
    if out.fraction {
        r.push("lp_fraction", fraction(&res.lp_value, g.num_arcs()));
        r.push("cut_fraction", fraction(&Rational::from(value), g.num_arcs()));
    }
    r.push("ternary", res.ternary.values().to_vec());
    r.push("side", res.side.clone());
    r.push("elapsed_ms", elapsed);
    emit(&r, out);
    Ok(())
}

fn cmd_acyclic(file: &Path, out: &OutputArgs) -> Result<(), CliError> {
    let g = read_digraph(file)?;
    let start = Instant::now();
    let res = solve_dicut_acyclic(&g)?;
    let elapsed = elapsed_ms(start);
    let kept = kept_subgraph(&g, &res.kept_arcs);
    let (neg, zero, pos) = res.partition_sizes;

    let mut r = RunReport::new("acyclic");
    r.push("vertices", g.num_vertices());
    r.push("arcs", g.num_arcs());
    r.push("loops", g.num_loops());
    r.push("lp_value", res.lp_value.to_string());
    r.push("acyclic_value", kept.len());
    r.push("acyclic_check", if check_acyclic(g.num_vertices(), &kept) { "ok" } else { "FAILED" });
    if out.fraction {
        r.push("lp_fraction", fraction(&res.lp_value, g.num_arcs()));
        r.push("acyclic_fraction", fraction(&Rational::from(kept.len()), g.num_arcs()));
    }
    r.push("partition_sizes", vec![neg, zero, pos]);
    r.push("candidate_values", vec![res.candidate_values.0, res.candidate_values.1]);
    r.push("ternary", res.ternary.values().to_vec());
    r.push("ordering", res.ordering.order().to_vec());
    // 1-based, matching arc lines in the input file
    r.push("kept_arcs", res.kept_arcs.iter().map(|i| i + 1).collect::<Vec<_>>());
    r.push("elapsed_ms", elapsed);
    emit(&r, out);
    Ok(())
}

fn cmd_verify(files: &[PathBuf], cap: usize, trials: u64, seed: u64) -> Result<(), CliError> {
    let mut checks: Vec<Check> = Vec::new();
    for file in files {
        let text = read_input(file)?;
        let label = file.display().to_string();
        let check = match detect_kind(&text) {
            Some(FileKind::Instance) => {
                verify::verify_instance(label, &parse_instance(&text).map_err(parse_err(file))?, cap)
            }
            Some(FileKind::Digraph) => {
                verify::verify_digraph(label, &parse_digraph(&text).map_err(parse_err(file))?, cap)
            }
            None => return Err(CliError::UnknownFormat(label)),
        };
        checks.push(check);
    }
    // par_iter keeps trial order in the collected output
    let trial_checks: Vec<Vec<Check>> = (0..trials).into_par_iter().map(|i| verify::run_trial(i, seed, cap)).collect();
    checks.extend(trial_checks.into_iter().flatten());

    for c in &checks {
        println!("{}", c.line());
    }
    let count = |o: Outcome| checks.iter().filter(|c| c.outcome == o).count();
    let (pass, capped, failed) = (count(Outcome::Pass), count(Outcome::CapExceeded), count(Outcome::Violation));
    println!("summary: {pass} passed, {capped} over oracle cap, {failed} violated");
    if failed > 0 {
        Err(CliError::Verify(4))
    } else if capped > 0 {
        Err(CliError::Verify(3))
    } else {
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { file, seed, dump_lp, out } => cmd_solve(&file, seed, dump_lp, &out),
        Command::Cut { file, out } => cmd_cut(&file, &out),
        Command::Acyclic { file, out } => cmd_acyclic(&file, &out),
        Command::GenInstance { n, m, kmin, kmax, seed, output } => {
            if kmin > kmax || (n == 0 && kmax > 0 && m > 0) {
                return Err(CliError::Usage("need kmin <= kmax and n >= 1 for nonempty clauses".into()));
            }
            let inst = gen_instance(n, m, kmin, kmax, seed);
            let comments = vec![format!("gen-instance n={n} m={m} kmin={kmin} kmax={kmax} seed={seed} prng={PRNG_NAME}")];
            write_output(&output, &render_instance(&inst, &comments))
        }
        Command::GenDigraph { n, m, seed, planted, output } => {
            if n == 0 && m > 0 {
                return Err(CliError::Usage("arcs need at least one vertex".into()));
            }
            if planted.is_some_and(|d| !(0.0..=1.0).contains(&d)) {
                return Err(CliError::Usage("--planted must lie in [0, 1]".into()));
            }
            let gd = gen_digraph(n, m, seed, planted);
            let mut comments = vec![format!("gen-digraph n={n} m={m} seed={seed} prng={PRNG_NAME}")];
            if let (Some(d), Some(bound)) = (planted, gd.planted_dicut) {
                comments.push(format!("planted density={d} dicut >= {bound}"));
            }
            write_output(&output, &render_digraph(&gd.graph, &comments))
        }
        Command::Verify { files, oracle_cap, trials, seed } => cmd_verify(&files, oracle_cap, trials, seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verify(_)) {
                eprintln!("maxeven: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
