//! Engineering toolkit for propositional resolution refutations.
//!
//! The crate revolves around one data structure — the resolution-proof DAG of
//! [`proof_core`] — and four activities on it:
//!
//! * **Checking** ([`proof_core::ResolutionProof::check_legal`]): every step
//!   really is a resolution step, links are consistent, nothing dangles.
//! * **I/O** ([`proof_io`]): DIMACS CNF for inputs, TraceCheck for proofs,
//!   GraphViz for pictures, and a CSV schema for benchmark metrics.
//! * **Compression** ([`transform`], [`compress`]): a local-rewriting
//!   framework built on two-step rule contexts, plus the classic global
//!   passes — pivot recycling, unit pushdown, structural hashing — and a
//!   pipeline runner that combines them under a time budget.
//! * **Interpolation** ([`interpolate`]): variable labelings for an (A, B)
//!   split, interpolants in the two standard systems, and proof
//!   transformations that reorder pivots or extract mixed subproofs so the
//!   interpolant comes out in clausal or dual-clausal shape.
//!
//! A small CDCL solver and two independent oracles live in [`sat_engine`] so
//! the toolkit can produce its own proofs and cross-check everything else.

pub mod cli;
pub mod compress;
pub mod gallery;
pub mod interpolate;
pub mod proof_core;
pub mod proof_io;
pub mod sat_engine;
pub mod transform;

pub use proof_core::{Clause, ClauseError, Literal, NodeId, ResolutionProof, Var};
