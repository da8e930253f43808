//! DIMACS CNF reading and writing.

use thiserror::Error;

use crate::proof_core::{Clause, ClauseError, Literal, Var};

/// A CNF formula: a declared variable count plus clauses in input order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// A formula over variables `1..=num_vars`. Panics if a clause mentions
    /// a variable beyond that range.
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> CnfFormula {
        for c in &clauses {
            if let Some(v) = c.max_var() {
                assert!(
                    v.number() <= num_vars,
                    "clause variable {v} exceeds declared count {num_vars}"
                );
            }
        }
        CnfFormula { num_vars, clauses }
    }

    /// A formula whose variable count is the largest variable mentioned.
    pub fn from_clauses(clauses: Vec<Clause>) -> CnfFormula {
        let num_vars = clauses
            .iter()
            .filter_map(Clause::max_var)
            .map(Var::number)
            .max()
            .unwrap_or(0);
        CnfFormula { num_vars, clauses }
    }

    pub fn empty(num_vars: u32) -> CnfFormula {
        CnfFormula { num_vars, clauses: Vec::new() }
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter()
    }

    /// Appends a clause, widening the variable range if needed.
    pub fn push(&mut self, clause: Clause) {
        if let Some(v) = clause.max_var() {
            self.num_vars = self.num_vars.max(v.number());
        }
        self.clauses.push(clause);
    }

    /// Removes duplicate clauses, keeping first occurrences. Deduplication
    /// is never applied implicitly: clause indices are part of several file
    /// formats.
    pub fn dedup(&mut self) {
        let mut seen = std::collections::HashSet::new();
        self.clauses.retain(|c| seen.insert(c.clone()));
    }

    /// Evaluates the formula under a total assignment (`model[i]` gives the
    /// value of variable `i + 1`).
    pub fn satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|l| model[(l.var().number() - 1) as usize] == l.is_positive())
        })
    }
}

/// A fatal defect in a DIMACS file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: literal {literal} exceeds the declared variable count {num_vars}")]
    LiteralOutOfRange { line: usize, literal: i32, num_vars: u32 },
}

fn syntax(line: usize, msg: impl Into<String>) -> DimacsError {
    DimacsError::Syntax { line, msg: msg.into() }
}

/// Parses DIMACS CNF text. Returns the formula plus non-fatal warnings
/// (missing header, clause-count mismatch). Clauses may span lines and
/// share lines; comment lines start with `c`; a line starting with `%`
/// ends the input.
pub fn parse_dimacs(text: &str) -> Result<(CnfFormula, Vec<String>), DimacsError> {
    let mut warnings = Vec::new();
    let mut header: Option<(u32, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut pending_line = 0;
    let mut inferred_vars: u32 = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(syntax(lineno, "duplicate header"));
            }
            if !clauses.is_empty() || !pending.is_empty() {
                return Err(syntax(lineno, "header after clause data"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", v, c] => v
                    .parse::<u32>()
                    .ok()
                    .zip(c.parse::<usize>().ok()),
                _ => None,
            };
            match parsed {
                Some(h) => header = Some(h),
                None => return Err(syntax(lineno, format!("malformed header `{line}`"))),
            }
            continue;
        }
        for token in line.split_whitespace() {
            let n: i32 = token
                .parse()
                .map_err(|_| syntax(lineno, format!("bad token `{token}`")))?;
            if n == 0 {
                if pending.is_empty() {
                    pending_line = lineno;
                }
                let clause = Clause::new(pending.drain(..)).map_err(|e| match e {
                    ClauseError::Tautology(v) => syntax(
                        pending_line,
                        format!("tautological clause on variable {v}"),
                    ),
                    other => syntax(lineno, other.to_string()),
                })?;
                clauses.push(clause);
                continue;
            }
            if let Some((num_vars, _)) = header {
                if n.unsigned_abs() > num_vars {
                    return Err(DimacsError::LiteralOutOfRange { line: lineno, literal: n, num_vars });
                }
            }
            inferred_vars = inferred_vars.max(n.unsigned_abs());
            if pending.is_empty() {
                pending_line = lineno;
            }
            pending.push(Literal::from_dimacs(n).map_err(|e| syntax(lineno, e.to_string()))?);
        }
    }
    if !pending.is_empty() {
        return Err(syntax(pending_line, "unterminated clause at end of input"));
    }

    let num_vars = match header {
        Some((v, declared)) => {
            if declared != clauses.len() {
                warnings.push(format!(
                    "header declares {declared} clauses, found {}",
                    clauses.len()
                ));
            }
            v
        }
        None => {
            warnings.push("missing `p cnf` header; variable count inferred".to_string());
            inferred_vars
        }
    };
    Ok((CnfFormula::new(num_vars, clauses), warnings))
}

/// Renders a formula as DIMACS text (LF line endings).
pub fn write_dimacs(formula: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", formula.num_vars(), formula.len());
    for clause in formula.clauses() {
        for n in clause.to_dimacs() {
            out.push_str(&n.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
