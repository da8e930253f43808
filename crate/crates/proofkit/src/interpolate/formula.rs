//! Interpolant formulas: flat and/or trees over literals and constants.
//!
//! The two simplifications applied — constant folding and flattening of
//! nested same-connective children — are *shape-preserving*: they never turn
//! a non-clausal formula into a clausal one or vice versa, which keeps the
//! [`formula_shape`] classification an honest statement about what the
//! interpolation systems produced. No equivalence-preserving minimization is
//! performed.

use std::collections::BTreeSet;
use std::fmt;

use crate::proof_core::{Clause, Literal, Var};
use crate::proof_io::CnfFormula;
use crate::sat_engine::{literal_word, SemanticFormula};

/// A propositional formula in negation normal form with n-ary connectives.
///
/// Values built through [`InterpolantFormula::and`] and
/// [`InterpolantFormula::or`] are *normalized*: connective children are never
/// constants, never the same connective, and never fewer than two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InterpolantFormula {
    True,
    False,
    Lit(Literal),
    And(Vec<InterpolantFormula>),
    Or(Vec<InterpolantFormula>),
}

impl InterpolantFormula {
    /// The conjunction of `children`, folded and flattened: `false` children
    /// absorb, `true` children vanish, nested conjunctions are spliced, and
    /// zero or one survivors collapse to `true` or the survivor itself.
    pub fn and(children: impl IntoIterator<Item = InterpolantFormula>) -> InterpolantFormula {
        let mut flat = Vec::new();
        for child in children {
            match child {
                InterpolantFormula::True => {}
                InterpolantFormula::False => return InterpolantFormula::False,
                InterpolantFormula::And(grandchildren) => flat.extend(grandchildren),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => InterpolantFormula::True,
            1 => flat.pop().expect("one element"),
            _ => InterpolantFormula::And(flat),
        }
    }

    /// The disjunction of `children`; dual of [`InterpolantFormula::and`].
    pub fn or(children: impl IntoIterator<Item = InterpolantFormula>) -> InterpolantFormula {
        let mut flat = Vec::new();
        for child in children {
            match child {
                InterpolantFormula::False => {}
                InterpolantFormula::True => return InterpolantFormula::True,
                InterpolantFormula::Or(grandchildren) => flat.extend(grandchildren),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => InterpolantFormula::False,
            1 => flat.pop().expect("one element"),
            _ => InterpolantFormula::Or(flat),
        }
    }

    /// Rebuilds `self` through the normalizing constructors; the identity on
    /// formulas they produced.
    pub fn simplified(&self) -> InterpolantFormula {
        match self {
            InterpolantFormula::And(children) => {
                InterpolantFormula::and(children.iter().map(|c| c.simplified()))
            }
            InterpolantFormula::Or(children) => {
                InterpolantFormula::or(children.iter().map(|c| c.simplified()))
            }
            other => other.clone(),
        }
    }

    /// The restriction `C|keep` of a clause: the disjunction of its literals
    /// whose variable satisfies `keep`. Empty restrictions are `false`.
    pub fn restriction(clause: &Clause, keep: impl FnMut(Var) -> bool) -> InterpolantFormula {
        InterpolantFormula::or(clause.restrict(keep).iter().map(InterpolantFormula::Lit))
    }

    /// The negated restriction `¬(C|keep)`: the conjunction of the negated
    /// kept literals. Empty restrictions negate to `true`.
    pub fn negated_restriction(
        clause: &Clause,
        keep: impl FnMut(Var) -> bool,
    ) -> InterpolantFormula {
        InterpolantFormula::and(
            clause.restrict(keep).iter().map(|lit| InterpolantFormula::Lit(lit.negated())),
        )
    }

    /// Every variable mentioned anywhere in the formula.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            InterpolantFormula::True | InterpolantFormula::False => {}
            InterpolantFormula::Lit(lit) => {
                out.insert(lit.var());
            }
            InterpolantFormula::And(children) | InterpolantFormula::Or(children) => {
                for child in children {
                    child.collect_vars(out);
                }
            }
        }
    }

    /// The formula as a CNF clause list, when its shape permits: constants,
    /// literals, clauses, cubes, and conjunctions of clauses convert; other
    /// shapes — and clauses whose literal multiset no [`Clause`] can carry —
    /// return `None`.
    pub fn to_cnf(&self) -> Option<CnfFormula> {
        let clause_of = |f: &InterpolantFormula| -> Option<Clause> {
            match f {
                InterpolantFormula::Lit(lit) => Clause::new([*lit]).ok(),
                InterpolantFormula::Or(children) => {
                    let lits: Option<Vec<Literal>> = children
                        .iter()
                        .map(|c| match c {
                            InterpolantFormula::Lit(lit) => Some(*lit),
                            _ => None,
                        })
                        .collect();
                    Clause::new(lits?).ok()
                }
                _ => None,
            }
        };
        let clauses = match self {
            InterpolantFormula::True => Some(Vec::new()),
            InterpolantFormula::False => Some(vec![Clause::empty()]),
            InterpolantFormula::And(children) => {
                children.iter().map(clause_of).collect::<Option<Vec<_>>>()
            }
            lit_or_or => clause_of(lit_or_or).map(|c| vec![c]),
        };
        clauses.map(CnfFormula::from_clauses)
    }
}

impl fmt::Display for InterpolantFormula {
    /// Nested prefix text: `and(or(1,-2),3)`, with `true`/`false` constants
    /// and bare integers for literals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpolantFormula::True => write!(f, "true"),
            InterpolantFormula::False => write!(f, "false"),
            InterpolantFormula::Lit(lit) => write!(f, "{}", lit.to_dimacs()),
            InterpolantFormula::And(children) | InterpolantFormula::Or(children) => {
                let name = if matches!(self, InterpolantFormula::And(_)) { "and" } else { "or" };
                write!(f, "{name}(")?;
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{child}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl SemanticFormula for InterpolantFormula {
    fn max_var_number(&self) -> u32 {
        self.vars().iter().map(|v| v.number()).max().unwrap_or(0)
    }

    fn eval_word(&self, w: usize) -> u64 {
        match self {
            InterpolantFormula::True => !0,
            InterpolantFormula::False => 0,
            InterpolantFormula::Lit(lit) => literal_word(*lit, w),
            InterpolantFormula::And(children) => {
                children.iter().fold(!0, |acc, c| acc & c.eval_word(w))
            }
            InterpolantFormula::Or(children) => {
                children.iter().fold(0, |acc, c| acc | c.eval_word(w))
            }
        }
    }
}

/// The syntactic class of a normalized formula, most specific first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormulaShape {
    Constant,
    Literal,
    /// A flat disjunction of literals.
    Clause,
    /// A flat conjunction of literals.
    Cube,
    /// A conjunction whose children are literals or clauses.
    Cnf,
    /// A disjunction whose children are literals or cubes.
    Dnf,
    Other,
}

impl FormulaShape {
    /// Every shape up to `Cnf` is a conjunction of clauses, degenerate cases
    /// included (a cube is a conjunction of unit clauses).
    pub fn is_cnf(self) -> bool {
        !matches!(self, FormulaShape::Dnf | FormulaShape::Other)
    }

    /// Dual of [`is_cnf`](FormulaShape::is_cnf): a clause is a disjunction
    /// of unit cubes.
    pub fn is_dnf(self) -> bool {
        !matches!(self, FormulaShape::Cnf | FormulaShape::Other)
    }
}

impl fmt::Display for FormulaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FormulaShape::Constant => "constant",
            FormulaShape::Literal => "literal",
            FormulaShape::Clause => "clause",
            FormulaShape::Cube => "cube",
            FormulaShape::Cnf => "CNF",
            FormulaShape::Dnf => "DNF",
            FormulaShape::Other => "other",
        };
        write!(f, "{name}")
    }
}

/// Classifies a formula after normalization (see [`InterpolantFormula`]'s
/// constructor invariants; arbitrary trees are re-normalized first).
pub fn formula_shape(formula: &InterpolantFormula) -> FormulaShape {
    fn is_lit(f: &InterpolantFormula) -> bool {
        matches!(f, InterpolantFormula::Lit(_))
    }
    fn is_clause(f: &InterpolantFormula) -> bool {
        match f {
            InterpolantFormula::Lit(_) => true,
            InterpolantFormula::Or(children) => children.iter().all(is_lit),
            _ => false,
        }
    }
    fn is_cube(f: &InterpolantFormula) -> bool {
        match f {
            InterpolantFormula::Lit(_) => true,
            InterpolantFormula::And(children) => children.iter().all(is_lit),
            _ => false,
        }
    }
    match formula.simplified() {
        InterpolantFormula::True | InterpolantFormula::False => FormulaShape::Constant,
        InterpolantFormula::Lit(_) => FormulaShape::Literal,
        InterpolantFormula::And(children) => {
            if children.iter().all(is_lit) {
                FormulaShape::Cube
            } else if children.iter().all(is_clause) {
                FormulaShape::Cnf
            } else {
                FormulaShape::Other
            }
        }
        InterpolantFormula::Or(children) => {
            if children.iter().all(is_lit) {
                FormulaShape::Clause
            } else if children.iter().all(is_cube) {
                FormulaShape::Dnf
            } else {
                FormulaShape::Other
            }
        }
    }
}
