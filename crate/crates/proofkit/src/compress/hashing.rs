//! Structural hashing: merge steps that resolve the same pair of parents.
//!
//! Two inner nodes with identical (positive, negative) parent pairs carry
//! the same clause — tautologies are unrepresentable, so a clause pair
//! resolves over exactly one pivot. Keeping only the first such node makes
//! the proof more compact without touching any clause. Visiting parents
//! before children lets merges cascade within a single pass: once two nodes
//! merge, their children's parent pairs coincide in turn.

use std::collections::HashMap;

use crate::proof_core::{Direction, NodeId, ResolutionProof};

/// One top-down pass. The first node seen with a given ordered parent pair
/// is registered; every later node with the same pair is replaced by the
/// registered one, passing its children (and the root role, if any) along.
pub fn structural_hashing(proof: &mut ResolutionProof) {
    let order = proof
        .topological(Direction::TopDown)
        .expect("hashing needs an acyclic proof");
    let mut registry: HashMap<(NodeId, NodeId), NodeId> = HashMap::new();
    for n in order {
        if !proof.is_live(n) || proof.node(n).is_leaf() {
            continue;
        }
        let key = proof.node(n).parents().expect("inner nodes have two parents");
        match registry.entry(key) {
            std::collections::hash_map::Entry::Occupied(e) => {
                proof.replace_node_with(n, *e.get());
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(n);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::proof_core::{isomorphic, Clause, ResolutionProof, Var};

    fn clause(ints: &[i32]) -> Clause {
        Clause::from_dimacs(ints).unwrap()
    }

    #[test]
    fn duplicate_parent_pairs_merge_with_children_union() {
        // Two separate steps both resolve (pq, ¬p r) over p and feed
        // different continuations; hashing merges them.
        let mut p = ResolutionProof::new();
        let pq = p.add_leaf(clause(&[1, 2]));
        let npr = p.add_leaf(clause(&[-1, 3]));
        let nq_s = p.add_leaf(clause(&[-2, 4]));
        let nq_ns = p.add_leaf(clause(&[-2, -4]));
        let qr_a = p.add_step(pq, npr, Var::new(1)).unwrap();
        let qr_b = p.add_step(pq, npr, Var::new(1)).unwrap();
        let rs = p.add_step(qr_a, nq_s, Var::new(2)).unwrap();
        let r_ns = p.add_step(qr_b, nq_ns, Var::new(2)).unwrap();
        let root = p.add_step(rs, r_ns, Var::new(4)).unwrap();
        p.set_root(root);
        assert!(p.check_legal().is_legal());
        let before = p.node_count();
        structural_hashing(&mut p);
        assert!(p.check_legal().is_legal());
        assert_eq!(p.node_count(), before - 1);
        let survivor = p
            .iter_ids()
            .find(|&id| p.node(id).clause() == &clause(&[2, 3]))
            .unwrap();
        assert_eq!(p.node(survivor).children().len(), 2);
    }

    #[test]
    fn unrolled_shared_step_remerges() {
        let dag = gallery::multipath_redundancy();
        let tree = dag.unroll_to_tree(64).unwrap();
        assert!(tree.node_count() > dag.node_count());
        let mut merged = tree;
        structural_hashing(&mut merged);
        assert!(merged.check_legal().is_legal());
        assert_eq!(merged.node_count(), dag.node_count());
        assert!(isomorphic(&merged, &dag));
    }

    #[test]
    fn leaf_sharing_alone_gives_hashing_nothing_to_merge() {
        let dag = gallery::shared_subproof();
        let mut tree = dag.unroll_to_tree(64).unwrap();
        assert_eq!(tree.node_count(), dag.node_count());
        structural_hashing(&mut tree);
        assert_eq!(tree.node_count(), dag.node_count());
        assert!(isomorphic(&tree, &dag));
    }

    #[test]
    fn pairwise_distinct_proofs_are_untouched() {
        let before = gallery::compression_showcase();
        let mut p = before.clone();
        structural_hashing(&mut p);
        assert!(isomorphic(&p, &before));
    }

    #[test]
    fn no_two_inner_nodes_share_a_parent_pair_afterwards() {
        let mut p = gallery::multipath_redundancy().unroll_to_tree(64).unwrap();
        structural_hashing(&mut p);
        let mut seen = std::collections::HashSet::new();
        for id in p.iter_ids() {
            if let Some(pair) = p.node(id).parents() {
                assert!(seen.insert(pair));
            }
        }
    }
}
