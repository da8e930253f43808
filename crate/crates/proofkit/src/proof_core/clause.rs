//! Literals, clauses, and the single resolution step.
//!
//! Clauses are kept in a normal form throughout the crate: literals sorted by
//! variable, duplicates merged, and never both polarities of one variable.
//! That last invariant (no tautological clauses) is what lets every algorithm
//! here treat "contains the pivot variable" and "contains the pivot literal
//! with a known polarity" as the same cheap query.

use std::fmt;
use thiserror::Error;

/// A propositional variable, numbered from 1 as in DIMACS.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(u32);

impl Var {
    /// Creates a variable. Panics on 0, which DIMACS reserves as a terminator.
    pub fn new(n: u32) -> Var {
        assert!(n > 0, "variable numbers start at 1");
        Var(n)
    }

    /// The variable number, 1-based.
    pub fn number(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A literal: a variable together with a polarity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Literal {
    var: Var,
    positive: bool,
}

impl Literal {
    pub fn new(var: Var, positive: bool) -> Literal {
        Literal { var, positive }
    }

    pub fn positive(var: Var) -> Literal {
        Literal { var, positive: true }
    }

    pub fn negative(var: Var) -> Literal {
        Literal { var, positive: false }
    }

    pub fn var(self) -> Var {
        self.var
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    /// The complementary literal over the same variable.
    pub fn negated(self) -> Literal {
        Literal { var: self.var, positive: !self.positive }
    }

    /// Parses a signed DIMACS integer; 0 is rejected.
    pub fn from_dimacs(n: i32) -> Result<Literal, ClauseError> {
        if n == 0 {
            return Err(ClauseError::ZeroLiteral);
        }
        Ok(Literal { var: Var::new(n.unsigned_abs()), positive: n > 0 })
    }

    pub fn to_dimacs(self) -> i32 {
        let n = self.var.number() as i32;
        if self.positive {
            n
        } else {
            -n
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// Errors raised while building clauses or resolving them.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClauseError {
    #[error("clause contains both polarities of variable {0}")]
    Tautology(Var),
    #[error("literal 0 is not a valid literal")]
    ZeroLiteral,
    #[error("pivot {pivot} missing from the {side} antecedent")]
    MissingPivot { pivot: Var, side: &'static str },
    #[error("resolvent is tautological on variable {0}")]
    TautologicalResolvent(Var),
    #[error("antecedents have no complementary pair")]
    NoPivot,
    #[error("antecedents clash on more than one variable ({0} and {1})")]
    AmbiguousPivot(Var, Var),
}

/// A clause in normal form: sorted by variable, one polarity per variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    /// The empty clause ⊥.
    pub fn empty() -> Clause {
        Clause { lits: Vec::new() }
    }

    /// Builds a clause from arbitrary literals: sorts, merges duplicates, and
    /// rejects tautologies.
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Result<Clause, ClauseError> {
        let mut v: Vec<Literal> = lits.into_iter().collect();
        v.sort_unstable();
        let mut out: Vec<Literal> = Vec::with_capacity(v.len());
        for lit in v {
            match out.last() {
                Some(last) if last.var() == lit.var() => {
                    if last.is_positive() != lit.is_positive() {
                        return Err(ClauseError::Tautology(lit.var()));
                    }
                    // duplicate literal: merge silently
                }
                _ => out.push(lit),
            }
        }
        Ok(Clause { lits: out })
    }

    /// Builds a clause from signed DIMACS integers (without the trailing 0).
    pub fn from_dimacs(ints: &[i32]) -> Result<Clause, ClauseError> {
        Clause::new(
            ints.iter()
                .map(|&n| Literal::from_dimacs(n))
                .collect::<Result<Vec<_>, _>>()?,
        )
    }

    /// Internal constructor for literal vectors already in normal form.
    pub(crate) fn from_normal_form(lits: Vec<Literal>) -> Clause {
        debug_assert!(lits.windows(2).all(|w| w[0].var() < w[1].var()));
        Clause { lits }
    }

    pub fn lits(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// The polarity with which `var` occurs, if it occurs at all.
    pub fn polarity_of(&self, var: Var) -> Option<bool> {
        self.lits
            .binary_search_by_key(&var, |l| l.var())
            .ok()
            .map(|i| self.lits[i].is_positive())
    }

    pub fn contains(&self, lit: Literal) -> bool {
        self.polarity_of(lit.var()) == Some(lit.is_positive())
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.polarity_of(var).is_some()
    }

    /// Returns the sole literal of a unit clause.
    pub fn unit(&self) -> Option<Literal> {
        match self.lits.as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    /// Set inclusion: every literal of `self` occurs in `other`.
    pub fn subsumes(&self, other: &Clause) -> bool {
        if self.lits.len() > other.lits.len() {
            return false;
        }
        self.lits.iter().all(|&l| other.contains(l))
    }

    /// The clause restricted to the variables accepted by `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(Var) -> bool) -> Clause {
        Clause::from_normal_form(self.lits.iter().copied().filter(|l| keep(l.var())).collect())
    }

    pub fn max_var(&self) -> Option<Var> {
        self.lits.last().map(|l| l.var())
    }

    pub fn iter(&self) -> impl Iterator<Item = Literal> + '_ {
        self.lits.iter().copied()
    }

    pub fn to_dimacs(&self) -> Vec<i32> {
        self.lits.iter().map(|l| l.to_dimacs()).collect()
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lits.is_empty() {
            return write!(f, "[]");
        }
        for (i, lit) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}

/// Resolves `pos` (containing the positive pivot literal) with `neg`
/// (containing the negative one): the union of both clauses minus the pivot.
///
/// Fails if a pivot polarity is missing or if the resolvent would be
/// tautological, so an illegal step can never produce a clause.
pub fn resolve(pos: &Clause, neg: &Clause, pivot: Var) -> Result<Clause, ClauseError> {
    if pos.polarity_of(pivot) != Some(true) {
        return Err(ClauseError::MissingPivot { pivot, side: "positive" });
    }
    if neg.polarity_of(pivot) != Some(false) {
        return Err(ClauseError::MissingPivot { pivot, side: "negative" });
    }
    let (a, b) = (pos.lits(), neg.lits());
    let mut out = Vec::with_capacity(a.len() + b.len() - 2);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let la = a.get(i).copied();
        let lb = b.get(j).copied();
        let next = match (la, lb) {
            (Some(x), Some(y)) if x.var() == y.var() => {
                i += 1;
                j += 1;
                if x.var() == pivot {
                    continue;
                }
                if x.is_positive() != y.is_positive() {
                    return Err(ClauseError::TautologicalResolvent(x.var()));
                }
                x
            }
            (Some(x), Some(y)) if x.var() < y.var() => {
                i += 1;
                x
            }
            (Some(_), Some(y)) => {
                j += 1;
                y
            }
            (Some(x), None) => {
                i += 1;
                x
            }
            (None, Some(y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        if next.var() == pivot {
            continue;
        }
        out.push(next);
    }
    Ok(Clause { lits: out })
}

/// Finds the unique variable on which `c1` and `c2` clash.
pub fn find_pivot(c1: &Clause, c2: &Clause) -> Result<Var, ClauseError> {
    let mut found: Option<Var> = None;
    for lit in c1.iter() {
        if c2.contains(lit.negated()) {
            match found {
                None => found = Some(lit.var()),
                Some(v) if v != lit.var() => {
                    return Err(ClauseError::AmbiguousPivot(v, lit.var()))
                }
                _ => {}
            }
        }
    }
    found.ok_or(ClauseError::NoPivot)
}
