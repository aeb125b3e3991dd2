//! Instances of signed-literal clauses and their three evaluation semantics:
//! strong (no literal false), weak (even number of literals false), and the
//! ternary objective `Σ ½ + ½·min` over assignments into `{-1, 0, +1}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i8) -> Self {
        if v < 0 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A variable (1-based) with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub sign: Sign,
}

impl Literal {
    pub fn new(var: usize, sign: Sign) -> Self {
        debug_assert!(var >= 1, "variables are 1-based");
        Literal { var, sign }
    }

    pub fn pos(var: usize) -> Self {
        Literal::new(var, Sign::Pos)
    }

    pub fn neg(var: usize) -> Self {
        Literal::new(var, Sign::Neg)
    }

    /// DIMACS-style signed id; `0` is not a literal.
    pub fn from_signed(v: i64) -> Option<Self> {
        if v == 0 {
            return None;
        }
        let var = usize::try_from(v.unsigned_abs()).ok()?;
        Some(Literal::new(var, if v < 0 { Sign::Neg } else { Sign::Pos }))
    }

    pub fn to_signed(self) -> i64 {
        self.sign.value() as i64 * self.var as i64
    }

    /// `sign · value`
    pub fn eval(self, value: i8) -> i8 {
        self.sign.value() * value
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "+x{}", self.var),
            Sign::Neg => write!(f, "-x{}", self.var),
        }
    }
}

/// Multiset of literals; order and repetitions are kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    /// Build from DIMACS-style signed ids. Panics on `0`.
    pub fn from_signed(lits: &[i64]) -> Self {
        Clause::new(
            lits.iter()
                .map(|&v| Literal::from_signed(v).expect("0 is not a literal"))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    /// Each variable occurs at most once.
    pub fn has_distinct_vars(&self) -> bool {
        let mut vars: Vec<usize> = self.literals.iter().map(|l| l.var).collect();
        vars.sort_unstable();
        vars.windows(2).all(|w| w[0] != w[1])
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.literals.iter().find(|l| l.var == 0 || l.var > n) {
            Some(l) => Err(Error::VarOutOfRange { var: l.var, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Instance {
    n: usize,
    clauses: Vec<Clause>,
}

impl Instance {
    pub fn new(n: usize, clauses: Vec<Clause>) -> Result<Self> {
        for c in &clauses {
            c.check_range(n)?;
        }
        Ok(Instance { n, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn is_normalized(&self) -> bool {
        self.clauses.iter().all(Clause::has_distinct_vars)
    }

    /// First clause repeating a variable, as an error.
    pub fn require_normalized(&self) -> Result<()> {
        match self.clauses.iter().position(|c| !c.has_distinct_vars()) {
            Some(i) => Err(Error::NotNormalized(i)),
            None => Ok(()),
        }
    }
}

fn check_values(values: &[i8], allowed: &[i8]) -> Result<()> {
    match values.iter().find(|v| !allowed.contains(v)) {
        Some(&v) => Err(Error::BadValue(v as i64)),
        None => Ok(()),
    }
}

/// Map from variables into `{-1, 0, +1}`; index `v - 1` holds variable `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TernaryAssignment(Vec<i8>);

impl TernaryAssignment {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        check_values(&values, &[-1, 0, 1])?;
        Ok(TernaryAssignment(values))
    }

    pub fn zeros(n: usize) -> Self {
        TernaryAssignment(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of 1-based variable `var`.
    pub fn get(&self, var: usize) -> i8 {
        self.0[var - 1]
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&v| v == 0).count()
    }
}

/// Map from variables into `{-1, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoolAssignment(Vec<i8>);

impl BoolAssignment {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        check_values(&values, &[-1, 1])?;
        Ok(BoolAssignment(values))
    }

    /// Bit `i` of `mask` set means variable `i + 1` is `+1`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        BoolAssignment((0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> i8 {
        self.0[var - 1]
    }

    pub fn values(&self) -> &[i8] {
        &self.0
    }
}

impl From<&BoolAssignment> for TernaryAssignment {
    fn from(a: &BoolAssignment) -> Self {
        TernaryAssignment(a.0.clone())
    }
}

fn check_len(got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(Error::LengthMismatch { got, expected });
    }
    Ok(())
}

pub fn strong_satisfied(clause: &Clause, a: &BoolAssignment) -> Result<bool> {
    clause.check_range(a.len())?;
    Ok(clause.iter().all(|l| l.eval(a.get(l.var)) == 1))
}

pub fn weak_satisfied(clause: &Clause, a: &BoolAssignment) -> Result<bool> {
    clause.check_range(a.len())?;
    let false_literals = clause.iter().filter(|l| l.eval(a.get(l.var)) == -1).count();
    Ok(false_literals % 2 == 0)
}

/// `min_j s_j · t(x_j)`. The empty clause has no minimum and is an error;
/// callers treat it as a constant contribution of 1.
pub fn clause_min(clause: &Clause, t: &TernaryAssignment) -> Result<i8> {
    clause.check_range(t.len())?;
    clause
        .iter()
        .map(|l| l.eval(t.get(l.var)))
        .min()
        .ok_or(Error::EmptyClause)
}

/// `Σ_i ½ + ½·clause_min_i`, empty clauses contributing 1.
pub fn objective_value(inst: &Instance, t: &TernaryAssignment) -> Result<Rational> {
    check_len(t.len(), inst.n)?;
    // Twice the objective, kept integral until the end.
    let mut doubled: i64 = 0;
    for c in &inst.clauses {
        doubled += if c.is_empty() { 2 } else { 1 + clause_min(c, t)? as i64 };
    }
    Rational::new(doubled, 2)
}

pub fn strong_count(inst: &Instance, a: &BoolAssignment) -> Result<usize> {
    check_len(a.len(), inst.n)?;
    let mut count = 0;
    for c in &inst.clauses {
        count += strong_satisfied(c, a)? as usize;
    }
    Ok(count)
}

pub fn weak_count(inst: &Instance, a: &BoolAssignment) -> Result<usize> {
    check_len(a.len(), inst.n)?;
    let mut count = 0;
    for c in &inst.clauses {
        count += weak_satisfied(c, a)? as usize;
    }
    Ok(count)
}

/// What [`normalize`] did, by original clause index.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NormalizationReport {
    /// Original indices of retained clauses; normalized clause `i` comes from `kept[i]`.
    pub kept: Vec<usize>,
    /// Clauses containing both `x` and `-x`.
    pub excluded_tautologies: Vec<usize>,
    /// Number of identical-literal pairs deleted, per original clause.
    pub pair_removals: Vec<usize>,
    /// Kept clauses that cancelled down to nothing.
    pub empty_clauses: Vec<usize>,
}

/// Make every variable occur at most once per clause.
///
/// Identical literals cancel in pairs, which leaves parity (weak satisfaction)
/// unchanged. Clauses with complementary literals are dropped.
pub fn normalize(inst: &Instance) -> (Instance, NormalizationReport) {
    let mut report = NormalizationReport {
        pair_removals: vec![0; inst.clauses.len()],
        ..Default::default()
    };
    let mut clauses = Vec::new();

    for (idx, clause) in inst.clauses.iter().enumerate() {
        let mut signs: BTreeMap<usize, Sign> = BTreeMap::new();
        let mut tautology = false;
        for l in clause.iter() {
            match signs.insert(l.var, l.sign) {
                Some(s) if s != l.sign => tautology = true,
                _ => {}
            }
        }
        if tautology {
            report.excluded_tautologies.push(idx);
            continue;
        }

        let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
        for l in clause.iter() {
            *multiplicity.entry(l.var).or_default() += 1;
        }
        let mut seen = std::collections::BTreeSet::new();
        let literals: Vec<Literal> = clause
            .iter()
            .filter(|l| multiplicity[&l.var] % 2 == 1 && seen.insert(l.var))
            .copied()
            .collect();
        report.pair_removals[idx] = multiplicity.values().map(|m| m / 2).sum();
        if literals.is_empty() {
            report.empty_clauses.push(idx);
        }
        report.kept.push(idx);
        clauses.push(Clause::new(literals));
    }

    (Instance { n: inst.n, clauses }, report)
}
