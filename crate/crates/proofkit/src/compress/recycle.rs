//! Pivot recycling: partial regularization by severing repeated-pivot steps.
//!
//! Both passes work in two phases. A marking phase walks the proof
//! collecting, per node, the set of *removable literals* `RL` — pivot
//! literals guaranteed to be resolved upon again on the way down to the
//! root — and records which steps are redundant (their pivot already occurs
//! in `RL`) together with the parent edge to sever. A reconstruction phase
//! then replays the proof top-down, collapsing severed steps into their
//! surviving parent and repairing every other step, exactly like a
//! transformation traversal that applies no rules.
//!
//! [`recycle_pivots`] carries `RL` along one depth-first path and resets it
//! at every node with several children, so it only regularizes path-local
//! repetitions. [`recycle_pivots_intersection`] instead propagates `RL`
//! bottom-up through all children, intersecting the contributions, which
//! also catches pivots that repeat on *every* path through a fork.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::proof_core::{Direction, Literal, NodeId, ResolutionProof, Side};
use crate::transform::repair_step;

/// Per-node sets of removable literals (`RL`): the bookkeeping behind the
/// recycling passes. A node's set is initialized by the first child that
/// contributes to it and intersected with every later contribution.
#[derive(Debug, Default)]
pub struct RemovableLiterals {
    sets: HashMap<NodeId, BTreeSet<Literal>>,
}

impl RemovableLiterals {
    /// The set accumulated for `n` so far; `None` until a child contributes.
    pub fn get(&self, n: NodeId) -> Option<&BTreeSet<Literal>> {
        self.sets.get(&n)
    }

    /// First contribution wins outright, later ones intersect into it.
    fn contribute(&mut self, n: NodeId, set: BTreeSet<Literal>) {
        match self.sets.entry(n) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(set);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let merged: BTreeSet<Literal> = e.get().intersection(&set).copied().collect();
                *e.get_mut() = merged;
            }
        }
    }
}

/// Depth-first pivot recycling. `RL` travels with the traversal (first path
/// to reach a node decides), resets to ∅ at nodes with more than one child,
/// and a step whose pivot appears in `RL` loses the parent edge carrying that
/// pivot occurrence. Reconstruction follows.
pub fn recycle_pivots(proof: &mut ResolutionProof) {
    let mut sever: HashMap<NodeId, Side> = HashMap::new();
    let mut visited: HashSet<NodeId> = HashSet::new();
    let mut stack: Vec<(NodeId, BTreeSet<Literal>)> = vec![(proof.root(), BTreeSet::new())];
    while let Some((n, mut rl)) = stack.pop() {
        if !visited.insert(n) {
            continue;
        }
        let node = proof.node(n);
        if node.is_leaf() {
            continue;
        }
        if node.children().len() > 1 {
            rl.clear();
        }
        let p = node.pivot().expect("inner nodes carry a pivot");
        let (np, nn) = node.parents().expect("inner nodes have two parents");
        let pos_lit = Literal::positive(p);
        let neg_lit = Literal::negative(p);
        if rl.contains(&pos_lit) {
            sever.insert(n, Side::Pos);
            stack.push((nn, rl));
        } else if rl.contains(&neg_lit) {
            sever.insert(n, Side::Neg);
            stack.push((np, rl));
        } else {
            let mut rl_pos = rl.clone();
            rl_pos.insert(neg_lit);
            rl.insert(pos_lit);
            // The positive parent is explored first: it goes on top.
            stack.push((nn, rl));
            stack.push((np, rl_pos));
        }
    }
    reconstruct_with_severs(proof, &sever);
}

/// Bottom-up pivot recycling with intersection. Children contribute their
/// `RL` (plus the pivot literal as seen from the receiving side) to each
/// parent; a node that turns out redundant passes its `RL` on unchanged to
/// the surviving parent only. The root's own clause seeds its `RL`, so roots
/// other than ⊥ may strengthen.
pub fn recycle_pivots_intersection(proof: &mut ResolutionProof) {
    let order = proof
        .topological(Direction::BottomUp)
        .expect("recycling needs an acyclic proof");
    let root = proof.root();
    let mut rl = RemovableLiterals::default();
    let mut sever: HashMap<NodeId, Side> = HashMap::new();
    for n in order {
        let node = proof.node(n);
        if node.is_leaf() {
            continue;
        }
        let set = if n == root {
            node.clause().iter().map(Literal::negated).collect()
        } else {
            rl.get(n).cloned().unwrap_or_default()
        };
        let p = node.pivot().expect("inner nodes carry a pivot");
        let (np, nn) = node.parents().expect("inner nodes have two parents");
        let pos_lit = Literal::positive(p);
        let neg_lit = Literal::negative(p);
        if set.contains(&pos_lit) {
            sever.insert(n, Side::Pos);
            rl.contribute(nn, set);
        } else if set.contains(&neg_lit) {
            sever.insert(n, Side::Neg);
            rl.contribute(np, set);
        } else {
            let mut for_pos = set.clone();
            for_pos.insert(neg_lit);
            let mut for_neg = set;
            for_neg.insert(pos_lit);
            rl.contribute(np, for_pos);
            rl.contribute(nn, for_neg);
        }
    }
    reconstruct_with_severs(proof, &sever);
}

/// The reconstruction shared by both passes: a top-down replay in which a
/// severed step collapses into its surviving parent and every other step is
/// repaired in place.
fn reconstruct_with_severs(proof: &mut ResolutionProof, sever: &HashMap<NodeId, Side>) {
    if sever.is_empty() {
        return;
    }
    let order = proof
        .topological(Direction::TopDown)
        .expect("recycling needs an acyclic proof")
        .into_iter()
        .collect::<Vec<_>>();
    for n in order {
        if !proof.is_live(n) || proof.node(n).is_leaf() {
            continue;
        }
        if let Some(&severed) = sever.get(&n) {
            proof.replace_with_parent(n, severed.flipped());
        } else {
            repair_step(proof, n);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::proof_core::isomorphic;

    #[test]
    fn rp_removes_a_repeated_pivot_on_one_path() {
        let mut p = gallery::duplicate_pivot_chain();
        recycle_pivots(&mut p);
        assert!(p.check_legal().is_legal());
        assert!(isomorphic(&p, &gallery::duplicate_pivot_chain_regularized()));
    }

    #[test]
    fn rp_resets_at_forks_and_misses_the_multipath_case() {
        let before = gallery::multipath_redundancy();
        let mut p = before.clone();
        recycle_pivots(&mut p);
        assert!(isomorphic(&p, &before));
    }

    #[test]
    fn rpi_compresses_the_multipath_case() {
        let mut p = gallery::multipath_redundancy();
        recycle_pivots_intersection(&mut p);
        assert!(p.check_legal().is_legal());
        assert!(isomorphic(&p, &gallery::multipath_redundancy_compressed()));
    }

    #[test]
    fn rpi_also_handles_the_single_path_case() {
        let mut p = gallery::duplicate_pivot_chain();
        recycle_pivots_intersection(&mut p);
        assert!(p.check_legal().is_legal());
        assert!(isomorphic(&p, &gallery::duplicate_pivot_chain_regularized()));
    }

    #[test]
    fn both_passes_leave_regular_proofs_alone() {
        let before = gallery::compression_showcase_compressed();
        let mut a = before.clone();
        recycle_pivots(&mut a);
        assert!(isomorphic(&a, &before));
        let mut b = before.clone();
        recycle_pivots_intersection(&mut b);
        assert!(isomorphic(&b, &before));
    }

    #[test]
    fn contribution_intersects_after_initialization() {
        let mut rl = RemovableLiterals::default();
        let n = gallery::shared_subproof().root();
        let l1 = Literal::positive(crate::proof_core::Var::new(1));
        let l2 = Literal::negative(crate::proof_core::Var::new(2));
        rl.contribute(n, [l1, l2].into_iter().collect());
        rl.contribute(n, [l1].into_iter().collect());
        assert_eq!(rl.get(n).unwrap().len(), 1);
        assert!(rl.get(n).unwrap().contains(&l1));
    }
}
