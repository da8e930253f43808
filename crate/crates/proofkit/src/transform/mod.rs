//! The local transformation framework: contexts, rewriting rules,
//! subsumption propagation, and the traversal that ties them together.

mod context;
mod propagate;
mod reconstruct;
mod rules;
mod strategy;

pub use context::{
    classify, detect_contexts, s1_prime_match, RuleContext, RuleKind, S1PrimeMatch,
};
pub use propagate::subsumption_propagation;
pub use reconstruct::{reduce_and_expose, transform_and_reconstruct};
pub use rules::{apply_rule, ApplyOutcome, RuleError};
pub use strategy::{CompressionStrategy, Decision, ReorderingStrategy, RuleStrategy, SkipAll};

pub(crate) use propagate::{choose_substitute, repair_step};
