//! Graphviz DOT rendering of proof DAGs.

use crate::proof_core::ResolutionProof;

/// Renders the proof as a directed graph: one node per proof node labeled
/// with its clause, one edge per antecedent link labeled with the step's
/// pivot variable. Output order follows node ids, so equal proofs render
/// byte-identically.
pub fn export_dot(proof: &ResolutionProof) -> String {
    let mut ids: Vec<_> = proof.iter_ids().collect();
    ids.sort_by_key(|n| n.index());
    let mut out = String::from("digraph proof {\n  rankdir=BT;\n");
    for &id in &ids {
        let node = proof.node(id);
        let lits = node
            .clause()
            .to_dimacs()
            .iter()
            .map(i32::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let label = if lits.is_empty() { "[]".to_string() } else { lits };
        let shape = if node.is_leaf() { "box" } else { "ellipse" };
        out.push_str(&format!(
            "  n{} [label=\"{}\", shape={}];\n",
            id.index(),
            label,
            shape
        ));
    }
    for &id in &ids {
        if let Some((pos, neg)) = proof.node(id).parents() {
            let pivot = proof.node(id).pivot().expect("inner node has a pivot");
            for parent in [pos, neg] {
                out.push_str(&format!(
                    "  n{} -> n{} [label=\"{}\"];\n",
                    parent.index(),
                    id.index(),
                    pivot
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::proof_core::{Clause, ResolutionProof};

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn the_shared_subproof_renders_six_nodes_and_six_edges() {
        let dot = export_dot(&gallery::shared_subproof());
        assert_eq!(count(&dot, "[label="), 6 + 6, "six nodes and six edges");
        assert_eq!(count(&dot, " -> "), 6);
    }

    #[test]
    fn a_single_empty_clause_renders_one_node_and_no_edges() {
        let mut p = ResolutionProof::new();
        let bot = p.add_leaf(Clause::empty());
        p.set_root(bot);
        let dot = export_dot(&p);
        assert_eq!(count(&dot, "label=\"[]\""), 1);
        assert_eq!(count(&dot, " -> "), 0);
    }

    #[test]
    fn edge_statements_are_twice_the_inner_nodes() {
        for p in [
            gallery::compression_showcase(),
            gallery::multipath_redundancy(),
            gallery::unit_chain(),
        ] {
            let dot = export_dot(&p);
            assert_eq!(count(&dot, " -> "), 2 * p.inner_count());
        }
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(
            export_dot(&gallery::unit_chain()),
            export_dot(&gallery::unit_chain())
        );
    }
}
