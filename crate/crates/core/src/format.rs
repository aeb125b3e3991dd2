//! Text formats.
//!
//! Clause instances (`mae`):
//!
//! ```text
//! c optional comment lines
//! p mae <n> <m>
//! <lit> <lit> ... 0        (m lines, DIMACS-style signed literals; "0" alone is the empty clause)
//! ```
//!
//! Digraphs (`dg`):
//!
//! ```text
//! p dg <n> <m>
//! a <u> <v>                (m lines, 1-based endpoints; loops and repeats allowed)
//! ```
//!
//! Repeated literals and repeated arcs are meaningful and preserved.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::Digraph;
use crate::model::{Clause, Instance, Literal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is at end of input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing 'p {0} <n> <m>' header")]
    MissingHeader(&'static str),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("invalid token {0:?}")]
    BadToken(String),
    #[error("literal 0 inside clause body")]
    ZeroInClause,
    #[error("clause is missing its terminating 0")]
    MissingTerminator,
    #[error("variable {var} out of range 1..={n}")]
    VarOutOfRange { var: u64, n: usize },
    #[error("expected 'a <u> <v>'")]
    MalformedArc,
    #[error("header announces {expected} items but {found} were given")]
    CountMismatch { expected: usize, found: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ") || line.starts_with("c\t")
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !is_comment(l))
}

fn parse_header(line_no: usize, line: &str, kind: &'static str) -> Result<(usize, usize), ParseError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.first() != Some(&"p") {
        return Err(err(line_no, ParseErrorKind::MissingHeader(kind)));
    }
    if toks.len() != 4 || toks[1] != kind {
        return Err(err(line_no, ParseErrorKind::MalformedHeader(line.to_string())));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| err(line_no, ParseErrorKind::MalformedHeader(line.to_string())));
    Ok((num(toks[2])?, num(toks[3])?))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader("mae")))?;
    let (n, m) = parse_header(line_no, header, "mae")?;

    let mut clauses = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut lits = Vec::new();
        let mut terminated = false;
        for tok in line.split_whitespace() {
            if terminated {
                return Err(err(line_no, ParseErrorKind::ZeroInClause));
            }
            let v: i64 = tok.parse().map_err(|_| err(line_no, ParseErrorKind::BadToken(tok.to_string())))?;
            match Literal::from_signed(v) {
                None => terminated = true,
                Some(l) if l.var > n => {
                    return Err(err(line_no, ParseErrorKind::VarOutOfRange { var: v.unsigned_abs(), n }))
                }
                Some(l) => lits.push(l),
            }
        }
        if !terminated {
            return Err(err(line_no, ParseErrorKind::MissingTerminator));
        }
        if clauses.len() == m {
            return Err(err(line_no, ParseErrorKind::CountMismatch { expected: m, found: m + 1 }));
        }
        clauses.push(Clause::new(lits));
    }
    if clauses.len() != m {
        return Err(err(0, ParseErrorKind::CountMismatch { expected: m, found: clauses.len() }));
    }
    Ok(Instance::new(n, clauses).expect("ranges checked while parsing"))
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader("dg")))?;
    let (n, m) = parse_header(line_no, header, "dg")?;

    let mut arcs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "a" {
            return Err(err(line_no, ParseErrorKind::MalformedArc));
        }
        let mut ends = [0usize; 2];
        for (k, tok) in toks[1..].iter().enumerate() {
            let v: u64 = tok.parse().map_err(|_| err(line_no, ParseErrorKind::BadToken(tok.to_string())))?;
            if v == 0 || v > n as u64 {
                return Err(err(line_no, ParseErrorKind::VarOutOfRange { var: v, n }));
            }
            ends[k] = v as usize;
        }
        if arcs.len() == m {
            return Err(err(line_no, ParseErrorKind::CountMismatch { expected: m, found: m + 1 }));
        }
        arcs.push((ends[0], ends[1]));
    }
    if arcs.len() != m {
        return Err(err(0, ParseErrorKind::CountMismatch { expected: m, found: arcs.len() }));
    }
    Ok(Digraph::new(n, arcs).expect("ranges checked while parsing"))
}

/// Which format a text is in, judged by its header line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Instance,
    Digraph,
}

pub fn detect_kind(text: &str) -> Option<FileKind> {
    let (_, header) = content_lines(text).next()?;
    match header.split_whitespace().nth(1)? {
        "mae" => Some(FileKind::Instance),
        "dg" => Some(FileKind::Digraph),
        _ => None,
    }
}

pub fn render_instance(inst: &Instance, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p mae {} {}", inst.num_vars(), inst.num_clauses()).unwrap();
    for clause in inst.clauses() {
        for l in clause.iter() {
            write!(out, "{} ", l.to_signed()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

pub fn render_digraph(g: &Digraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p dg {} {}", g.num_vertices(), g.num_arcs()).unwrap();
    for &(u, v) in g.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}
