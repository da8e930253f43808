//! The two standard propositional interpolation systems, and the oracle
//! check that their outputs really are interpolants.
//!
//! Both systems walk the refutation antecedents-first, attach a partial
//! interpolant to every node, and return the root's. They differ only in the
//! leaf seed and in which pivot classes introduce a disjunction:
//!
//! | | leaf `C ∈ A` | leaf `C ∈ B` | pivot `∨` | pivot `∧` |
//! |---|---|---|---|---|
//! | [`itp_mcmillan`] | `C\|_AB` | `true` | A-local | B-local, common |
//! | [`itp_mcmillan_prime`] | `false` | `¬(C\|_AB)` | A-local, common | B-local |
//!
//! Leaves tagged theory-lemma count as B-clauses: their shape is constrained
//! by the B-side theory they came from, and the convention keeps A's share
//! of the interpolant purely propositional. Reports should flag interpolants
//! derived over such leaves.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::interpolate::formula::InterpolantFormula;
use crate::interpolate::labeling::{UnknownVariable, VarClass, VariableLabeling};
use crate::proof_core::{Direction, NodeId, NodeKind, ResolutionProof, Var};
use crate::proof_io::CnfFormula;
use crate::sat_engine::{
    conjunction_unsat, implies_oracle, SemanticFormula, TooManyVariables, ORACLE_VAR_LIMIT,
};

/// Why no interpolant could be computed from a proof.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum InterpolationError {
    /// The proof still mentions a mixed variable; extract mixed subproofs
    /// first.
    #[error("proof mentions AB-mixed variable {}; extract mixed subproofs first", .0.number())]
    MixedVariablePresent(Var),
    /// A leaf clause belongs to neither partition and is not a theory lemma.
    #[error("leaf node {} belongs to neither partition and is not a theory lemma", .0.index())]
    UntaggedLeaf(NodeId),
    /// A variable in the proof occurs in neither partition.
    #[error(transparent)]
    UnknownVariable(#[from] UnknownVariable),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum System {
    McMillan,
    McMillanPrime,
}

/// McMillan's system: A-leaves seed their common-variable restriction,
/// B-leaves seed `true`, and only A-local pivots disjoin.
pub fn itp_mcmillan(
    proof: &ResolutionProof,
    labeling: &VariableLabeling,
) -> Result<InterpolantFormula, InterpolationError> {
    interpolant(proof, labeling, System::McMillan)
}

/// The dual system: A-leaves seed `false`, B-leaves the negated restriction,
/// and only B-local pivots conjoin.
pub fn itp_mcmillan_prime(
    proof: &ResolutionProof,
    labeling: &VariableLabeling,
) -> Result<InterpolantFormula, InterpolationError> {
    interpolant(proof, labeling, System::McMillanPrime)
}

fn interpolant(
    proof: &ResolutionProof,
    labeling: &VariableLabeling,
    system: System,
) -> Result<InterpolantFormula, InterpolationError> {
    let order = proof.topological(Direction::TopDown).expect("interpolation needs a legal proof");
    let mut partial: HashMap<NodeId, InterpolantFormula> = HashMap::with_capacity(order.len());
    for n in order {
        let node = proof.node(n);
        for lit in node.clause().iter() {
            let var = lit.var();
            if labeling.is_mixed(var) {
                return Err(InterpolationError::MixedVariablePresent(var));
            }
            labeling.require_class(var)?;
        }
        let formula = match *node.kind() {
            NodeKind::Leaf { theory_lemma } => {
                let clause = node.clause();
                let common = |v: Var| labeling.is_common(v);
                let in_a = labeling.in_a(clause);
                if !in_a && !labeling.in_b(clause) && !theory_lemma {
                    return Err(InterpolationError::UntaggedLeaf(n));
                }
                match (system, in_a) {
                    (System::McMillan, true) => InterpolantFormula::restriction(clause, common),
                    (System::McMillan, false) => InterpolantFormula::True,
                    (System::McMillanPrime, true) => InterpolantFormula::False,
                    (System::McMillanPrime, false) => {
                        InterpolantFormula::negated_restriction(clause, common)
                    }
                }
            }
            NodeKind::Inner { pivot, pos, neg } => {
                if labeling.is_mixed(pivot) {
                    return Err(InterpolationError::MixedVariablePresent(pivot));
                }
                let class = labeling.require_class(pivot)?;
                let disjoin = match system {
                    System::McMillan => class == VarClass::ALocal,
                    System::McMillanPrime => class != VarClass::BLocal,
                };
                let i1 = partial.get(&pos).expect("antecedents first").clone();
                let i2 = partial.get(&neg).expect("antecedents first").clone();
                if disjoin {
                    InterpolantFormula::or([i1, i2])
                } else {
                    InterpolantFormula::and([i1, i2])
                }
            }
        };
        partial.insert(n, formula);
    }
    Ok(partial.remove(&proof.root()).expect("root is live"))
}

/// Checks the three-part interpolant contract by exhaustive enumeration:
/// `A ⟹ I`, `I ∧ B` unsatisfiable, and `I` mentions only variables common
/// to both partitions.
///
/// Refuses problems over more than [`ORACLE_VAR_LIMIT`] variables.
pub fn verify_interpolant(
    a: &CnfFormula,
    b: &CnfFormula,
    i: &InterpolantFormula,
) -> Result<bool, TooManyVariables> {
    let total = a.max_var_number().max(b.max_var_number()).max(i.max_var_number());
    if total > ORACLE_VAR_LIMIT {
        return Err(TooManyVariables(total));
    }
    let vars_of = |f: &CnfFormula| -> BTreeSet<Var> {
        f.clauses().iter().flat_map(|c| c.iter()).map(|lit| lit.var()).collect()
    };
    let common: BTreeSet<Var> = vars_of(a).intersection(&vars_of(b)).copied().collect();
    if !i.vars().is_subset(&common) {
        return Ok(false);
    }
    Ok(implies_oracle(a, i)? && conjunction_unsat(i, b)?)
}
