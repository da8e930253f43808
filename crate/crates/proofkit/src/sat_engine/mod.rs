//! Proof producers and semantic oracles: a CDCL solver that logs
//! resolution proofs, exhaustive truth-table checks, and a brute-force
//! saturation refuter for cross-checking. [`corpus`] generates the seeded
//! random instances the test batteries run on.

pub mod corpus;
mod oracle;
mod solver;

use thiserror::Error;

pub use oracle::{
    conjunction_unsat, implies_oracle, literal_word, satisfiable_oracle, saturation_refute,
    saturation_refute_limited, var_word, SemanticFormula, TooManyVariables, ORACLE_VAR_LIMIT,
    SATURATION_CLAUSE_LIMIT,
};
pub use solver::{solve_with_proof, SolveResult, Solver, SolverConfig};

/// A configurable budget (conflicts, kept clauses, …) was exhausted.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("resource limit exceeded: {0}")]
pub struct ResourceLimit(pub String);
