//! Propagation of a strengthened clause toward the global root.
//!
//! After a reducing rule replaces a node's clause by a subset of its former
//! value, every resolution step below it may have become unsound. The
//! propagation pass walks the affected region top-down and repairs each step:
//! if both pivot occurrences are still present the resolvent is recomputed;
//! if one side lost its pivot occurrence, that parent's clause already
//! subsumes the would-be resolvent and simply replaces the node.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::proof_core::{resolve, Literal, NodeId, ResolutionProof, Side};

/// Picks which parent replaces a step whose pivot vanished from both sides:
/// the one whose sibling feeds nothing else (detaching a whole subproof),
/// otherwise the one with the smaller clause, preferring the positive parent.
pub(crate) fn choose_substitute(proof: &ResolutionProof, n: NodeId) -> Side {
    let node = proof.node(n);
    let (pos, neg) = node.parents().expect("substitution needs an inner node");
    if proof.node(pos).children().len() == 1 {
        return Side::Neg;
    }
    if proof.node(neg).children().len() == 1 {
        return Side::Pos;
    }
    if proof.node(neg).clause().len() < proof.node(pos).clause().len() {
        Side::Neg
    } else {
        Side::Pos
    }
}

/// Repairs one inner node in place: recompute, or collapse it into a parent.
/// Returns `true` if the node survived (possibly with a new clause).
pub(crate) fn repair_step(proof: &mut ResolutionProof, n: NodeId) -> bool {
    let node = proof.node(n);
    let Some(pivot) = node.pivot() else {
        return true;
    };
    let (pos, neg) = node.parents().expect("inner node has parents");
    let pos_has = proof.node(pos).clause().contains(Literal::positive(pivot));
    let neg_has = proof.node(neg).clause().contains(Literal::negative(pivot));
    match (pos_has, neg_has) {
        (true, true) => {
            match resolve(proof.node(pos).clause(), proof.node(neg).clause(), pivot) {
                Ok(clause) => {
                    proof.set_clause(n, clause);
                    true
                }
                Err(_) => {
                    // A clash outside the pivot cannot arise from shrinking
                    // clauses of a legal proof; collapse defensively.
                    let side = choose_substitute(proof, n);
                    proof.replace_with_parent(n, side);
                    false
                }
            }
        }
        (true, false) => {
            proof.replace_with_parent(n, Side::Neg);
            false
        }
        (false, true) => {
            proof.replace_with_parent(n, Side::Pos);
            false
        }
        (false, false) => {
            let side = choose_substitute(proof, n);
            proof.replace_with_parent(n, side);
            false
        }
    }
}

/// Propagates a strengthened clause at `start` through everything reachable
/// below it, visiting parents before children. On completion the proof is
/// legal again and the new global root clause subsumes the old one.
pub fn subsumption_propagation(proof: &mut ResolutionProof, start: NodeId) {
    if !proof.is_live(start) {
        return;
    }
    // Collect the region reachable from start via child edges.
    let mut region = HashSet::new();
    let mut stack = vec![start];
    while let Some(id) = stack.pop() {
        if region.insert(id) {
            stack.extend(proof.node(id).children().iter().copied());
        }
    }
    // Kahn order within the region: a node waits for its in-region parents.
    let mut pending: HashMap<NodeId, usize> = HashMap::new();
    for &id in &region {
        let in_region_parents = proof
            .node(id)
            .parents()
            .map(|(p, n)| {
                usize::from(region.contains(&p)) + usize::from(region.contains(&n))
            })
            .unwrap_or(0);
        pending.insert(id, in_region_parents);
    }
    let mut ready: BinaryHeap<Reverse<NodeId>> = BinaryHeap::new();
    ready.push(Reverse(start));
    let mut scheduled: HashSet<NodeId> = HashSet::new();
    scheduled.insert(start);
    while let Some(Reverse(n)) = ready.pop() {
        let children: Vec<NodeId> = if proof.is_live(n) {
            let kids = proof.node(n).children().to_vec();
            // The start node's clause is the change being propagated, not a
            // step to repair.
            if n != start {
                repair_step(proof, n);
            }
            kids
        } else {
            Vec::new()
        };
        for child in children {
            if let Some(count) = pending.get_mut(&child) {
                *count = count.saturating_sub(1);
                if *count == 0 && scheduled.insert(child) {
                    ready.push(Reverse(child));
                }
            }
        }
    }
}
