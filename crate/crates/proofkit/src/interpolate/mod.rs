//! Craig interpolation from resolution refutations.
//!
//! Given an unsatisfiable conjunction split into two CNF partitions `A` and
//! `B`, a Craig interpolant is a formula `I` over their shared variables with
//! `A ⇒ I` and `I ∧ B` unsatisfiable. This module derives interpolants from a
//! refutation of `A ∧ B` by a single bottom-up pass ([`itp_mcmillan`],
//! [`itp_mcmillan_prime`]) and provides the proof transformations that shape
//! the result:
//!
//! * [`label_variables`] classifies variables as local to one partition or
//!   common to both, the input every interpolation step depends on;
//! * [`pivot_reordering`] rewrites the proof so that a chosen set of "light"
//!   pivots is resolved closer to the leaves than the remaining "heavy"
//!   ones — with light = A-local the McMillan interpolant of the reordered
//!   proof is in CNF, with light = B-local the McMillan' interpolant is in
//!   DNF ([`VariableLabeling::light_for_cnf`],
//!   [`VariableLabeling::light_for_dnf`]);
//! * [`extract_ab_mixed`] removes maximal subproofs whose inner steps all
//!   resolve on designated mixed variables, demoting their roots to theory
//!   lemmas so the remainder mentions no mixed variable at all.
//!
//! Interpolants are built as [`InterpolantFormula`] trees; [`formula_shape`]
//! classifies a result as CNF, DNF, or neither, and [`verify_interpolant`]
//! checks the interpolant contract semantically for small variable counts.

mod formula;
mod itp;
mod labeling;
mod reorder;

pub use formula::{formula_shape, FormulaShape, InterpolantFormula};
pub use itp::{itp_mcmillan, itp_mcmillan_prime, verify_interpolant, InterpolationError};
pub use labeling::{
    label_variables, label_variables_with_mixed, UnknownVariable, VarClass, VariableLabeling,
};
pub use reorder::{
    extract_ab_mixed, pivot_reordering, pivot_reordering_with, scan_unordered, MixedResidue,
    OrderedContextReport, UnorderedContext,
};
