//! Variable labelings for an (A, B) split of the refuted formula.
//!
//! A [`VariableLabeling`] answers two questions the interpolation systems
//! keep asking: which side(s) of the split does a variable occur in, and
//! which partition does a leaf clause belong to. It also carries the set of
//! variables flagged *mixed* — placeholders introduced outside both
//! partitions (by theory-lemma instantiation) that no interpolant may
//! mention and that [`extract_ab_mixed`](crate::interpolate::extract_ab_mixed)
//! confines into subproofs.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::proof_core::{Clause, Var};
use crate::proof_io::CnfFormula;

/// Which side(s) of the (A, B) split a variable occurs in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarClass {
    /// Occurs in A only.
    ALocal,
    /// Occurs in B only.
    BLocal,
    /// Occurs in both partitions.
    AbCommon,
}

/// A variable that occurs in neither partition and is not flagged mixed has
/// no place in an interpolation problem.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("variable {} occurs in neither partition and is not flagged mixed", .0.number())]
pub struct UnknownVariable(pub Var);

/// Per-variable classes for an (A, B) split, the two partitions' clause sets
/// (used to tag proof leaves), and the variables flagged mixed.
#[derive(Clone, Debug, Default)]
pub struct VariableLabeling {
    classes: HashMap<Var, VarClass>,
    mixed: BTreeSet<Var>,
    a_clauses: HashSet<Clause>,
    b_clauses: HashSet<Clause>,
}

/// Labels every variable of `a` and `b` by the side(s) it occurs in.
pub fn label_variables(a: &CnfFormula, b: &CnfFormula) -> VariableLabeling {
    label_variables_with_mixed(a, b, BTreeSet::new())
}

/// Like [`label_variables`], additionally flagging `mixed` variables that
/// live outside both partitions.
///
/// # Panics
///
/// If a mixed variable occurs in either partition: mixed placeholders exist
/// precisely because they appear in neither.
pub fn label_variables_with_mixed(
    a: &CnfFormula,
    b: &CnfFormula,
    mixed: BTreeSet<Var>,
) -> VariableLabeling {
    let mut classes = HashMap::new();
    for clause in a.clauses() {
        for lit in clause.iter() {
            classes.insert(lit.var(), VarClass::ALocal);
        }
    }
    for clause in b.clauses() {
        for lit in clause.iter() {
            let class = match classes.get(&lit.var()) {
                Some(VarClass::ALocal | VarClass::AbCommon) => VarClass::AbCommon,
                _ => VarClass::BLocal,
            };
            classes.insert(lit.var(), class);
        }
    }
    for v in &mixed {
        assert!(
            !classes.contains_key(v),
            "variable {} is flagged mixed but occurs in a partition",
            v.number()
        );
    }
    VariableLabeling {
        classes,
        mixed,
        a_clauses: a.clauses().iter().cloned().collect(),
        b_clauses: b.clauses().iter().cloned().collect(),
    }
}

impl VariableLabeling {
    /// The class of `var`, or `None` when it occurs in neither partition.
    pub fn class_of(&self, var: Var) -> Option<VarClass> {
        self.classes.get(&var).copied()
    }

    /// Like [`class_of`](VariableLabeling::class_of), but unclassified
    /// variables are an error unless flagged mixed (those are rejected
    /// earlier, by the interpolation preconditions).
    pub fn require_class(&self, var: Var) -> Result<VarClass, UnknownVariable> {
        self.class_of(var).ok_or(UnknownVariable(var))
    }

    /// Is `var` flagged mixed?
    pub fn is_mixed(&self, var: Var) -> bool {
        self.mixed.contains(&var)
    }

    /// Does `var` occur in both partitions?
    pub fn is_common(&self, var: Var) -> bool {
        self.class_of(var) == Some(VarClass::AbCommon)
    }

    /// Is `clause` one of the A-partition clauses?
    pub fn in_a(&self, clause: &Clause) -> bool {
        self.a_clauses.contains(clause)
    }

    /// Is `clause` one of the B-partition clauses?
    pub fn in_b(&self, clause: &Clause) -> bool {
        self.b_clauses.contains(clause)
    }

    /// The variables flagged mixed.
    pub fn mixed_vars(&self) -> &BTreeSet<Var> {
        &self.mixed
    }

    /// The variables occurring in both partitions.
    pub fn common_vars(&self) -> BTreeSet<Var> {
        self.vars_in(VarClass::AbCommon)
    }

    /// Light set that makes reordered proofs yield clausal-shaped
    /// interpolants under [`itp_mcmillan`](crate::interpolate::itp_mcmillan):
    /// the A-local variables.
    pub fn light_for_cnf(&self) -> BTreeSet<Var> {
        self.vars_in(VarClass::ALocal)
    }

    /// Light set that makes reordered proofs yield dual-clausal-shaped
    /// interpolants under
    /// [`itp_mcmillan_prime`](crate::interpolate::itp_mcmillan_prime): the
    /// B-local variables.
    pub fn light_for_dnf(&self) -> BTreeSet<Var> {
        self.vars_in(VarClass::BLocal)
    }

    fn vars_in(&self, class: VarClass) -> BTreeSet<Var> {
        self.classes.iter().filter(|(_, c)| **c == class).map(|(v, _)| *v).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_clauses(
            clauses.iter().map(|c| Clause::from_dimacs(c).unwrap()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn locals_and_commons_follow_occurrence() {
        let a = cnf(&[&[1, 2]]);
        let b = cnf(&[&[-2]]);
        let labeling = label_variables(&a, &b);
        assert_eq!(labeling.class_of(Var::new(1)), Some(VarClass::ALocal));
        assert_eq!(labeling.class_of(Var::new(2)), Some(VarClass::AbCommon));
        assert_eq!(labeling.class_of(Var::new(3)), None);
        assert!(labeling.require_class(Var::new(3)).is_err());
        assert_eq!(labeling.light_for_cnf(), [Var::new(1)].into());
        assert_eq!(labeling.light_for_dnf(), BTreeSet::new());
    }

    #[test]
    fn identical_partitions_make_everything_common() {
        let a = cnf(&[&[1, -2], &[3]]);
        let labeling = label_variables(&a, &a.clone());
        for n in 1..=3 {
            assert_eq!(labeling.class_of(Var::new(n)), Some(VarClass::AbCommon));
        }
        assert_eq!(labeling.common_vars().len(), 3);
    }

    #[test]
    fn mixed_flags_ride_alongside_the_classes() {
        // The axiom-instantiation setup: a one-clause A, a three-clause B,
        // and four placeholder variables minted outside both.
        let a = cnf(&[&[1]]);
        let b = cnf(&[&[-2], &[-3], &[-4]]);
        let mixed: BTreeSet<Var> = (5..=8).map(Var::new).collect();
        let labeling = label_variables_with_mixed(&a, &b, mixed);
        assert_eq!(labeling.class_of(Var::new(1)), Some(VarClass::ALocal));
        for n in 2..=4 {
            assert_eq!(labeling.class_of(Var::new(n)), Some(VarClass::BLocal));
        }
        for n in 5..=8 {
            assert!(labeling.is_mixed(Var::new(n)));
            assert_eq!(labeling.class_of(Var::new(n)), None);
        }
        assert_eq!(labeling.mixed_vars().len(), 4);
    }

    #[test]
    fn clause_membership_is_by_literal_set() {
        let a = cnf(&[&[1, 2]]);
        let b = cnf(&[&[-2]]);
        let labeling = label_variables(&a, &b);
        assert!(labeling.in_a(&Clause::from_dimacs(&[2, 1]).unwrap()));
        assert!(!labeling.in_a(&Clause::from_dimacs(&[-2]).unwrap()));
        assert!(labeling.in_b(&Clause::from_dimacs(&[-2]).unwrap()));
    }

    #[test]
    #[should_panic(expected = "flagged mixed")]
    fn mixed_variables_may_not_occur_in_a_partition() {
        let a = cnf(&[&[1]]);
        let b = cnf(&[&[-1]]);
        label_variables_with_mixed(&a, &b, [Var::new(1)].into());
    }
}
