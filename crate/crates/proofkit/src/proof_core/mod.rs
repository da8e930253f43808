//! Clauses and resolution-proof DAGs: the data model everything else
//! operates on.

pub mod clause;
pub mod proof;

pub use clause::{find_pivot, resolve, Clause, ClauseError, Literal, Var};
pub use proof::{
    isomorphic, Direction, LegalityReport, NodeId, NodeKind, ProofError, ProofNode,
    ResolutionProof, Side, Violation,
};
