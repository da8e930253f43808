//! Unit pushdown: collect unit antecedents, re-resolve them at the root.
//!
//! A unit clause that is resolved against deep inside the proof often gets
//! resolved against several times, once per branch. Detaching every
//! unit antecedent during a single reconstruction pass and re-resolving each
//! collected unit once against the (now weakened) root removes that
//! duplication: the body of the proof simply carries the unit's literal down
//! to the root, where one tail step eliminates it.

use std::collections::HashSet;

use crate::proof_core::{resolve, Direction, Literal, ResolutionProof, Var};
use crate::transform::choose_substitute;

/// One top-down pass over the proof. Sound steps are recomputed; a sound
/// step with a unit antecedent collapses into its other parent, the unit
/// going to the collection; steps that lost a pivot occurrence collapse like
/// the ordinary reconstruction. Collected units whose negation surfaced in
/// the root clause are then re-resolved, first collected first, each
/// variable at most once. Detached remains are swept at the end.
pub fn pushdown_units(proof: &mut ResolutionProof) {
    let order = proof
        .topological(Direction::TopDown)
        .expect("unit pushdown needs an acyclic proof");
    let original_root = proof.node(proof.root()).clause().clone();
    let mut collected: Vec<crate::proof_core::NodeId> = Vec::new();
    let mut collected_lits: HashSet<Literal> = HashSet::new();
    for n in order {
        if !proof.is_live(n) || proof.node(n).is_leaf() {
            continue;
        }
        let node = proof.node(n);
        let p = node.pivot().expect("inner nodes carry a pivot");
        let (np, nn) = node.parents().expect("inner nodes have two parents");
        let pos_has = proof.node(np).clause().contains(Literal::positive(p));
        let neg_has = proof.node(nn).clause().contains(Literal::negative(p));
        // Substitutions run through `replace_node_keep_parents`: pruning is
        // deferred to the final sweep so collected units survive even while
        // they are childless.
        match (pos_has, neg_has) {
            (true, true) => {
                let resolvent =
                    resolve(proof.node(np).clause(), proof.node(nn).clause(), p)
                        .expect("both pivot occurrences are present");
                proof.set_clause(n, resolvent);
                if proof.node(np).clause().unit() == Some(Literal::positive(p)) {
                    proof.replace_node_keep_parents(n, nn);
                    if collected_lits.insert(Literal::positive(p)) {
                        collected.push(np);
                    }
                } else if proof.node(nn).clause().unit() == Some(Literal::negative(p)) {
                    proof.replace_node_keep_parents(n, np);
                    if collected_lits.insert(Literal::negative(p)) {
                        collected.push(nn);
                    }
                }
            }
            (true, false) => {
                proof.replace_node_keep_parents(n, nn);
            }
            (false, true) => {
                proof.replace_node_keep_parents(n, np);
            }
            (false, false) => {
                let side = choose_substitute(proof, n);
                let target = proof.node(n).parent(side).expect("inner node");
                proof.replace_node_keep_parents(n, target);
            }
        }
    }
    let extra: Vec<Literal> = proof
        .node(proof.root())
        .clause()
        .iter()
        .filter(|l| !original_root.contains(*l))
        .collect();
    let mut used_vars: HashSet<Var> = HashSet::new();
    for m in collected {
        if !proof.is_live(m) {
            continue;
        }
        let s = match proof.node(m).clause().unit() {
            Some(lit) => lit,
            None => continue,
        };
        let root_clause = proof.node(proof.root()).clause();
        if !extra.contains(&s.negated()) || !root_clause.contains(s.negated()) {
            continue;
        }
        if !used_vars.insert(s.var()) {
            continue;
        }
        let root = proof.root();
        let tail = if s.is_positive() {
            proof.add_step(m, root, s.var())
        } else {
            proof.add_step(root, m, s.var())
        }
        .expect("tail resolution is sound: the root holds the negation");
        proof.set_root(tail);
    }
    proof.gc_detached();
}
