//! Semantic oracles, independent of the solver: an exhaustive truth-table
//! implication check and a breadth-first resolution-saturation refuter.
//! Both are deliberately brute force — they exist to cross-check everything
//! else at desk scale, not to be fast.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::proof_core::{Clause, Literal, NodeId, ResolutionProof, Var};
use crate::proof_io::CnfFormula;
use crate::sat_engine::ResourceLimit;

/// Hard cap for exhaustive truth-table enumeration.
pub const ORACLE_VAR_LIMIT: u32 = 24;

/// The enumeration oracle refuses formulas over this many variables.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("truth-table oracle handles at most {ORACLE_VAR_LIMIT} variables, got {0}")]
pub struct TooManyVariables(pub u32);

/// A boolean function evaluated 64 assignments at a time.
pub trait SemanticFormula {
    /// The largest variable number mentioned (0 when none).
    fn max_var_number(&self) -> u32;

    /// Bit `j` of the result is the function's value under assignment
    /// number `64 w + j`, where bit `k` of an assignment number makes
    /// variable `k + 1` true.
    fn eval_word(&self, w: usize) -> u64;
}

/// The truth-table word of a single variable (see
/// [`SemanticFormula::eval_word`] for the assignment numbering).
pub fn var_word(var: Var, w: usize) -> u64 {
    const PATTERNS: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    let k = (var.number() - 1) as usize;
    if k < PATTERNS.len() {
        PATTERNS[k]
    } else if (w >> (k - PATTERNS.len())) & 1 == 1 {
        !0
    } else {
        0
    }
}

/// The truth-table word of one literal.
pub fn literal_word(lit: Literal, w: usize) -> u64 {
    let v = var_word(lit.var(), w);
    if lit.is_positive() {
        v
    } else {
        !v
    }
}

impl SemanticFormula for Clause {
    fn max_var_number(&self) -> u32 {
        self.max_var().map(Var::number).unwrap_or(0)
    }

    fn eval_word(&self, w: usize) -> u64 {
        self.iter().fold(0, |acc, l| acc | literal_word(l, w))
    }
}

impl SemanticFormula for CnfFormula {
    fn max_var_number(&self) -> u32 {
        self.iter().map(SemanticFormula::max_var_number).max().unwrap_or(0)
    }

    fn eval_word(&self, w: usize) -> u64 {
        self.iter().fold(!0u64, |acc, c| acc & c.eval_word(w))
    }
}

/// Word count and last-word validity mask for enumerating `n` variables.
fn enumeration(n: u32) -> Result<(usize, u64), TooManyVariables> {
    if n > ORACLE_VAR_LIMIT {
        return Err(TooManyVariables(n));
    }
    if n >= 6 {
        Ok((1usize << (n - 6), !0))
    } else {
        Ok((1, (1u64 << (1u32 << n)) - 1))
    }
}

/// True iff every assignment satisfying `premise` satisfies `conclusion`.
pub fn implies_oracle<P, C>(premise: &P, conclusion: &C) -> Result<bool, TooManyVariables>
where
    P: SemanticFormula + ?Sized,
    C: SemanticFormula + ?Sized,
{
    let n = premise.max_var_number().max(conclusion.max_var_number());
    let (words, mask) = enumeration(n)?;
    for w in 0..words {
        if premise.eval_word(w) & !conclusion.eval_word(w) & mask != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff some assignment satisfies the formula.
pub fn satisfiable_oracle<F>(f: &F) -> Result<bool, TooManyVariables>
where
    F: SemanticFormula + ?Sized,
{
    let (words, mask) = enumeration(f.max_var_number())?;
    Ok((0..words).any(|w| f.eval_word(w) & mask != 0))
}

/// True iff `a ∧ b` has no satisfying assignment.
pub fn conjunction_unsat<A, B>(a: &A, b: &B) -> Result<bool, TooManyVariables>
where
    A: SemanticFormula + ?Sized,
    B: SemanticFormula + ?Sized,
{
    let n = a.max_var_number().max(b.max_var_number());
    let (words, mask) = enumeration(n)?;
    Ok((0..words).all(|w| a.eval_word(w) & b.eval_word(w) & mask == 0))
}

/// A clause as variable bit masks; usable up to 32 variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct MaskClause {
    pos: u32,
    neg: u32,
}

impl MaskClause {
    fn of(clause: &Clause) -> MaskClause {
        let mut m = MaskClause { pos: 0, neg: 0 };
        for l in clause.iter() {
            let bit = 1u32 << (l.var().number() - 1);
            if l.is_positive() {
                m.pos |= bit;
            } else {
                m.neg |= bit;
            }
        }
        m
    }

    fn subsumes(self, other: MaskClause) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    fn is_empty(self) -> bool {
        self.pos == 0 && self.neg == 0
    }
}

enum Parentage {
    Leaf(usize),
    Step { pos: usize, neg: usize, pivot: Var },
}

/// Default cap on the number of clauses the saturation may keep.
pub const SATURATION_CLAUSE_LIMIT: usize = 1 << 17;

/// Refutes by brute-force resolution closure: resolve everything against
/// everything breadth-first, discarding tautological resolvents, duplicates
/// and forward-subsumed clauses, until the empty clause appears (a proof is
/// rebuilt from recorded parentage) or the closure is saturated (`None`:
/// the formula is satisfiable). Intended for at most ~14 variables.
pub fn saturation_refute(cnf: &CnfFormula) -> Result<Option<ResolutionProof>, ResourceLimit> {
    saturation_refute_limited(cnf, SATURATION_CLAUSE_LIMIT)
}

/// [`saturation_refute`] with an explicit kept-clause cap.
pub fn saturation_refute_limited(
    cnf: &CnfFormula,
    max_clauses: usize,
) -> Result<Option<ResolutionProof>, ResourceLimit> {
    let widest = cnf.iter().filter_map(Clause::max_var).map(Var::number).max();
    if widest.unwrap_or(0) > 32 {
        return Err(ResourceLimit(
            "saturation oracle supports at most 32 variables".to_string(),
        ));
    }

    let mut kept: Vec<MaskClause> = Vec::new();
    let mut parent: Vec<Parentage> = Vec::new();
    let mut dedup: HashSet<MaskClause> = HashSet::new();
    let mut bottom: Option<usize> = None;

    let keep = |kept: &mut Vec<MaskClause>,
                    parent: &mut Vec<Parentage>,
                    dedup: &mut HashSet<MaskClause>,
                    mask: MaskClause,
                    from: Parentage|
     -> bool {
        if !dedup.insert(mask) || kept.iter().any(|m| m.subsumes(mask)) {
            return false;
        }
        kept.push(mask);
        parent.push(from);
        true
    };

    for (i, clause) in cnf.iter().enumerate() {
        let mask = MaskClause::of(clause);
        if keep(&mut kept, &mut parent, &mut dedup, mask, Parentage::Leaf(i)) && mask.is_empty()
        {
            bottom = Some(kept.len() - 1);
            break;
        }
    }

    let mut lo = 0;
    while bottom.is_none() {
        let hi = kept.len();
        if lo == hi {
            return Ok(None);
        }
        'rounds: for i in lo..hi {
            for j in 0..i {
                let (a, b) = (kept[i], kept[j]);
                let clash = (a.pos & b.neg) | (b.pos & a.neg);
                if clash.count_ones() != 1 {
                    // No pivot, or every resolvent is tautological.
                    continue;
                }
                let pivot_bit = clash;
                let mask = MaskClause {
                    pos: (a.pos | b.pos) & !pivot_bit,
                    neg: (a.neg | b.neg) & !pivot_bit,
                };
                let pivot = Var::new(pivot_bit.trailing_zeros() + 1);
                let (pos, neg) = if a.pos & pivot_bit != 0 { (i, j) } else { (j, i) };
                if keep(
                    &mut kept,
                    &mut parent,
                    &mut dedup,
                    mask,
                    Parentage::Step { pos, neg, pivot },
                ) {
                    if mask.is_empty() {
                        bottom = Some(kept.len() - 1);
                        break 'rounds;
                    }
                    if kept.len() > max_clauses {
                        return Err(ResourceLimit(format!(
                            "saturation kept more than {max_clauses} clauses"
                        )));
                    }
                }
            }
        }
        lo = hi;
    }

    let mut proof = ResolutionProof::new();
    let root = materialize(&mut proof, bottom.unwrap(), cnf, &parent, &mut HashMap::new());
    proof.set_root(root);
    Ok(Some(proof))
}

fn materialize(
    proof: &mut ResolutionProof,
    idx: usize,
    cnf: &CnfFormula,
    parent: &[Parentage],
    memo: &mut HashMap<usize, NodeId>,
) -> NodeId {
    if let Some(&n) = memo.get(&idx) {
        return n;
    }
    let node = match parent[idx] {
        Parentage::Leaf(i) => proof.add_leaf(cnf.clauses()[i].clone()),
        Parentage::Step { pos, neg, pivot } => {
            let p = materialize(proof, pos, cnf, parent, memo);
            let n = materialize(proof, neg, cnf, parent, memo);
            proof
                .add_step(p, n, pivot)
                .expect("recorded parentage resolves")
        }
    };
    memo.insert(idx, node);
    node
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_clauses(
            clauses.iter().map(|c| Clause::from_dimacs(c).unwrap()).collect(),
        )
    }

    #[test]
    fn implication_matches_the_textbook_cases() {
        assert!(implies_oracle(&cnf(&[&[1], &[2]]), &cnf(&[&[1]])).unwrap());
        assert!(!implies_oracle(&cnf(&[&[1]]), &cnf(&[&[2]])).unwrap());
        // A = p ∧ (¬p ∨ q) implies I = q.
        assert!(implies_oracle(&cnf(&[&[1], &[-1, 2]]), &cnf(&[&[2]])).unwrap());
    }

    #[test]
    fn every_formula_implies_itself_and_falsum_implies_anything() {
        let f = cnf(&[&[1, -2], &[2, 3], &[-3]]);
        assert!(implies_oracle(&f, &f).unwrap());
        let falsum = cnf(&[&[]]);
        assert!(implies_oracle(&falsum, &cnf(&[&[7]])).unwrap());
    }

    #[test]
    fn the_variable_cap_is_enforced_and_reached() {
        let wide = cnf(&[&[25]]);
        assert_eq!(
            implies_oracle(&wide, &wide).unwrap_err(),
            TooManyVariables(25)
        );
        let at_cap = cnf(&[&[24], &[-24, 1]]);
        assert!(implies_oracle(&at_cap, &cnf(&[&[1]])).unwrap());
    }

    #[test]
    fn satisfiability_and_conjunction_checks_agree_with_hand_results() {
        assert!(satisfiable_oracle(&cnf(&[&[1, 2]])).unwrap());
        assert!(!satisfiable_oracle(&cnf(&[&[1], &[-1]])).unwrap());
        assert!(conjunction_unsat(&cnf(&[&[1]]), &cnf(&[&[-1]])).unwrap());
        assert!(!conjunction_unsat(&cnf(&[&[1]]), &cnf(&[&[2]])).unwrap());
    }

    #[test]
    fn saturation_refutes_the_unit_pair_with_three_nodes() {
        let proof = saturation_refute(&cnf(&[&[1], &[-1]])).unwrap().unwrap();
        assert_eq!(proof.node_count(), 3);
        assert!(proof.check_legal().is_legal());
        assert!(proof.node(proof.root()).clause().is_empty());
    }

    #[test]
    fn saturation_returns_none_on_satisfiable_input() {
        assert!(saturation_refute(&cnf(&[&[1, 2]])).unwrap().is_none());
        assert!(saturation_refute(&cnf(&[&[1, 2], &[-1, 2], &[1, -2]]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn saturation_proofs_are_legal_with_leaves_from_the_input() {
        let f = cnf(&[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        let proof = saturation_refute(&f).unwrap().unwrap();
        assert!(proof.check_legal().is_legal());
        assert!(proof.node(proof.root()).clause().is_empty());
        let inputs: std::collections::BTreeSet<Clause> = f.iter().cloned().collect();
        assert!(proof.reachable_leaf_clauses().is_subset(&inputs));
    }

    #[test]
    fn an_input_empty_clause_is_a_one_node_refutation() {
        let proof = saturation_refute(&cnf(&[&[1, 2], &[]])).unwrap().unwrap();
        assert_eq!(proof.node_count(), 1);
        assert!(proof.node(proof.root()).clause().is_empty());
    }

    #[test]
    fn the_clause_cap_reports_a_resource_limit() {
        // Dense enough to keep many resolvents before finishing.
        let f = cnf(&[
            &[1, 2, 3],
            &[-1, 2, 4],
            &[1, -2, 5],
            &[-1, -2, 6],
            &[3, 4, 5],
            &[-3, -4, -5],
            &[2, -5, 6],
            &[-2, 5, -6],
        ]);
        assert!(saturation_refute_limited(&f, 10).is_err());
    }
}
