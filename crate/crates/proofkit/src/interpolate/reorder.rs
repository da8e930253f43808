//! Pivot reordering — lifting *light* pivots above *heavy* ones — and the
//! extraction of maximal mixed subproofs it enables.
//!
//! Which variables count as light is the caller's choice; the three standard
//! instantiations are mixed-above-pure (before [`extract_ab_mixed`]),
//! A-local-above-rest (clausal interpolant shape), and B-local-above-rest
//! (dual shape). See [`VariableLabeling::light_for_cnf`] and
//! [`VariableLabeling::light_for_dnf`].
//!
//! [`VariableLabeling::light_for_cnf`]: crate::interpolate::VariableLabeling::light_for_cnf
//! [`VariableLabeling::light_for_dnf`]: crate::interpolate::VariableLabeling::light_for_dnf

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::proof_core::{Clause, Direction, NodeId, NodeKind, ResolutionProof, Var};
use crate::transform::{detect_contexts, transform_and_reconstruct, ReorderingStrategy};

/// One unordered context: the step at `root` resolves on a light pivot right
/// below a step on a heavy one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnorderedContext {
    /// The node at the context root.
    pub root: NodeId,
    /// Its (light) pivot.
    pub lower: Var,
    /// The (heavy) pivot of the inner step above it.
    pub upper: Var,
}

/// The result of scanning every two-step context of a proof.
#[derive(Clone, Debug, Default)]
pub struct OrderedContextReport {
    unordered: Vec<UnorderedContext>,
}

impl OrderedContextReport {
    /// The unordered contexts found, in node order.
    pub fn unordered(&self) -> &[UnorderedContext] {
        &self.unordered
    }

    /// How many contexts are unordered.
    pub fn count(&self) -> usize {
        self.unordered.len()
    }

    /// No unordered context: every light pivot sits above every heavy one.
    pub fn is_ordered(&self) -> bool {
        self.unordered.is_empty()
    }
}

/// Scans the proof and reports every context whose lower pivot is in `light`
/// while its upper pivot is not.
pub fn scan_unordered(proof: &ResolutionProof, light: &BTreeSet<Var>) -> OrderedContextReport {
    let mut report = OrderedContextReport::default();
    let mut ids: Vec<NodeId> = proof.iter_ids().collect();
    ids.sort_unstable();
    for n in ids {
        let Some(lower) = proof.node(n).pivot() else { continue };
        if !light.contains(&lower) {
            continue;
        }
        let (left, right) = detect_contexts(proof, n);
        for ctx in [left, right].into_iter().flatten() {
            let upper = ctx.upper_var();
            if !light.contains(&upper) {
                report.unordered.push(UnorderedContext { root: n, lower, upper });
            }
        }
    }
    report
}

/// Repeatedly runs the transformation traversal with the reordering strategy
/// until a full rescan finds no unordered context.
///
/// Rules that would duplicate a shared inner node are performed (the copy
/// keeps the node's other resolvents), so the proof can grow; growth stays
/// polynomial in practice. Use [`pivot_reordering_with`] in linear mode to
/// forbid duplication at the price of a possibly partial ordering.
pub fn pivot_reordering(proof: &mut ResolutionProof, light: &BTreeSet<Var>) {
    let report = pivot_reordering_with(proof, light, false);
    debug_assert!(report.is_ordered(), "full-mode reordering left unordered contexts");
}

/// [`pivot_reordering`] with an explicit duplication policy, returning the
/// final scan. In linear mode (`linear = true`) rules needing a node split
/// are skipped, so the returned report may still list unordered contexts —
/// exactly those that cannot be fixed without duplication.
pub fn pivot_reordering_with(
    proof: &mut ResolutionProof,
    light: &BTreeSet<Var>,
    linear: bool,
) -> OrderedContextReport {
    let strategy = ReorderingStrategy::new(light.clone(), linear);
    let watchdog = 10 * proof.node_count().max(1);
    let mut rounds = 0;
    loop {
        let report = scan_unordered(proof, light);
        if report.is_ordered() {
            return report;
        }
        let before = fingerprint(proof);
        transform_and_reconstruct(proof, &strategy);
        if fingerprint(proof) == before {
            // No rule fired: everything left needs a duplication the linear
            // policy forbids.
            return report;
        }
        rounds += 1;
        assert!(rounds <= watchdog, "pivot reordering failed to converge in {watchdog} rounds");
    }
}

/// The proof's exact structure; equal fingerprints before and after a
/// traversal mean it changed nothing.
fn fingerprint(proof: &ResolutionProof) -> Vec<(NodeId, Option<(Var, NodeId, NodeId)>, Clause)> {
    let mut ids: Vec<NodeId> = proof.iter_ids().collect();
    ids.sort_unstable();
    ids.into_iter()
        .map(|id| {
            let node = proof.node(id);
            let step = match *node.kind() {
                NodeKind::Leaf { .. } => None,
                NodeKind::Inner { pivot, pos, neg } => Some((pivot, pos, neg)),
            };
            (id, step, node.clause().clone())
        })
        .collect()
}

/// A mixed variable survived outside every extractable subproof, so the
/// proof cannot be freed of it; reorder with `light = mixed` first.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("mixed variable {} survives outside every extractable subproof", .0.number())]
pub struct MixedResidue(pub Var);

/// Replaces every maximal subproof whose pivots are all `mixed` and whose
/// root clause is mixed-free with a theory-lemma leaf carrying that clause.
///
/// Returns the extracted lemmas with the node (now a leaf) that roots each.
/// After a successful extraction no mixed variable occurs anywhere in the
/// proof; a survivor means the required reordering has not been (fully)
/// performed, and is reported as [`MixedResidue`] with the proof left as
/// extracted so far.
pub fn extract_ab_mixed(
    proof: &mut ResolutionProof,
    mixed: &BTreeSet<Var>,
) -> Result<Vec<(Clause, NodeId)>, MixedResidue> {
    let mixed_free = |clause: &Clause| clause.iter().all(|lit| !mixed.contains(&lit.var()));
    proof.gc_detached();
    let order = proof.topological(Direction::TopDown).expect("extraction needs a legal proof");
    // A node's ancestor cone is all-mixed when every resolution above it
    // (itself included) is over a mixed pivot.
    let mut cone_all_mixed: HashMap<NodeId, bool> = HashMap::with_capacity(order.len());
    let mut candidates: Vec<NodeId> = Vec::new();
    for &n in &order {
        let node = proof.node(n);
        let all_mixed = match *node.kind() {
            NodeKind::Leaf { .. } => true,
            NodeKind::Inner { pivot, pos, neg } => {
                mixed.contains(&pivot) && cone_all_mixed[&pos] && cone_all_mixed[&neg]
            }
        };
        cone_all_mixed.insert(n, all_mixed);
        if all_mixed && !node.is_leaf() && mixed_free(node.clause()) {
            candidates.push(n);
        }
    }
    // Every candidate is automatically maximal: it cannot sit inside another
    // candidate's cone, because the step consuming its (mixed-free) clause
    // resolves on one of its own literals — a pure pivot that would break
    // that cone's all-mixed property. One sweep therefore extracts them all.
    candidates.sort_unstable();
    let mut lemmas = Vec::with_capacity(candidates.len());
    for n in candidates {
        lemmas.push((proof.node(n).clause().clone(), n));
        proof.demote_to_lemma_leaf(n);
    }
    proof.gc_detached();
    for id in proof.iter_ids() {
        let node = proof.node(id);
        if let Some(pivot) = node.pivot() {
            if mixed.contains(&pivot) {
                return Err(MixedResidue(pivot));
            }
        }
        if let Some(lit) = node.clause().iter().find(|lit| mixed.contains(&lit.var())) {
            return Err(MixedResidue(lit.var()));
        }
    }
    Ok(lemmas)
}
