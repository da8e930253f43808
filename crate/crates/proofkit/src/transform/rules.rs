//! Application of the local rewriting rules.
//!
//! Every rule validates all of the resolutions it is about to perform before
//! touching the graph, so a failed application leaves the proof unchanged.

use crate::proof_core::{resolve, Clause, ClauseError, NodeId, ResolutionProof};
use crate::transform::context::{orient, s1_prime_match, RuleContext, RuleKind};

/// What a successful rule application did to the graph.
#[derive(Debug, Clone, Default)]
pub struct ApplyOutcome {
    /// The context root now carries a different (stronger) clause, so the
    /// change must be propagated toward the global root.
    pub root_clause_changed: bool,
    /// Nodes created by the application (split copies included).
    pub new_nodes: Vec<NodeId>,
    /// Nodes removed because the application left them childless.
    pub detached: Vec<NodeId>,
}

/// Why a rule application was refused. The proof is left untouched.
#[derive(Debug, thiserror::Error)]
pub enum RuleError {
    #[error("rule {rule} does not apply to this context: {reason}")]
    RuleNotApplicable { rule: RuleKind, reason: String },
}

fn not_applicable(rule: RuleKind, reason: impl Into<String>) -> RuleError {
    RuleError::RuleNotApplicable { rule, reason: reason.into() }
}

fn refused(rule: RuleKind, err: ClauseError) -> RuleError {
    not_applicable(rule, err.to_string())
}

/// Applies `rule` to `ctx`, rewriting the graph exactly per the rule
/// catalogue. For `S1`, `S2` and `R2` an inner node with several children is
/// split first (the copy keeps the other children); callers that must avoid
/// the duplication skip the rule instead.
pub fn apply_rule(
    proof: &mut ResolutionProof,
    ctx: &RuleContext,
    rule: RuleKind,
) -> Result<ApplyOutcome, RuleError> {
    match rule {
        RuleKind::S1 => apply_s1(proof, ctx),
        RuleKind::S1Prime => apply_s1_prime(proof, ctx),
        RuleKind::S2 => apply_swap(proof, ctx, RuleKind::S2),
        RuleKind::R1 => apply_relink(proof, ctx, RuleKind::R1),
        RuleKind::R2 => apply_swap(proof, ctx, RuleKind::R2),
        RuleKind::R2Prime => apply_relink(proof, ctx, RuleKind::R2Prime),
        RuleKind::R3 => apply_r3(proof, ctx),
    }
}

/// `Res` over the lower pivot of the clauses of `carrier` (which holds `t`)
/// and `c3`.
fn lower_resolvent(
    proof: &ResolutionProof,
    ctx: &RuleContext,
    carrier: NodeId,
    other: NodeId,
) -> Result<Clause, ClauseError> {
    let (pos, neg) = orient(ctx.t, carrier, other);
    resolve(proof.node(pos).clause(), proof.node(neg).clause(), ctx.lower_var())
}

/// Splits the inner node if it serves other resolvents, so the rewrite below
/// only affects this context. Returns the copy, if one was made.
fn split_inner_if_shared(proof: &mut ResolutionProof, ctx: &RuleContext) -> Option<NodeId> {
    if proof.node(ctx.inner).children().len() > 1 {
        Some(
            proof
                .split_node(ctx.inner, ctx.root)
                .expect("inner node with several children splits"),
        )
    } else {
        None
    }
}

/// S1: both steps are kept but reordered, which needs a second upper step.
/// The inner node becomes `Res over v(t) of (c1, c3)`, a new node carries
/// `Res over v(t) of (c2, c3)`, and the root re-resolves the two over `v(s)`.
fn apply_s1(proof: &mut ResolutionProof, ctx: &RuleContext) -> Result<ApplyOutcome, RuleError> {
    let rule = RuleKind::S1;
    if !proof.node(ctx.c2).clause().contains(ctx.t) {
        return Err(not_applicable(rule, "t must occur in C2"));
    }
    let c4p = lower_resolvent(proof, ctx, ctx.c1, ctx.c3).map_err(|e| refused(rule, e))?;
    let c4pp = lower_resolvent(proof, ctx, ctx.c2, ctx.c3).map_err(|e| refused(rule, e))?;
    if !c4p.contains(ctx.s) || !c4pp.contains(ctx.s.negated()) {
        return Err(not_applicable(rule, "upper pivot lost in a swapped step"));
    }
    let (pos_cl, neg_cl) = if ctx.s.is_positive() { (&c4p, &c4pp) } else { (&c4pp, &c4p) };
    let new_root = resolve(pos_cl, neg_cl, ctx.upper_var()).map_err(|e| refused(rule, e))?;
    if &new_root != proof.node(ctx.root).clause() {
        return Err(not_applicable(rule, "root clause would change under a shuffle"));
    }

    let mut outcome = ApplyOutcome::default();
    outcome.new_nodes.extend(split_inner_if_shared(proof, ctx));
    let (pos, neg) = orient(ctx.t, ctx.c2, ctx.c3);
    let second = proof.add_step_with_clause(c4pp, ctx.lower_var(), pos, neg);
    outcome.new_nodes.push(second);
    let (pos, neg) = orient(ctx.t, ctx.c1, ctx.c3);
    proof.relink_step(ctx.inner, c4p, ctx.lower_var(), pos, neg);
    let (pos, neg) = orient(ctx.s, ctx.inner, second);
    proof.relink_step(ctx.root, new_root, ctx.upper_var(), pos, neg);
    Ok(outcome)
}

/// S1': undoes the split shape. A fresh upper step resolves the two
/// non-shared parents over `v(s)`, the root re-resolves it against the shared
/// node over `v(t)`... in the naming of the *matched* context, the new step
/// resolves over the root's pivot and the root moves to the inner pivot.
fn apply_s1_prime(
    proof: &mut ResolutionProof,
    ctx: &RuleContext,
) -> Result<ApplyOutcome, RuleError> {
    let rule = RuleKind::S1Prime;
    let Some(m) = s1_prime_match(proof, ctx) else {
        return Err(not_applicable(rule, "root is not on the split shape"));
    };
    // Rebuild the stacked form: merged = Res over v(t) of (c1, y's other
    // parent); the root then resolves merged against the shared node over
    // v(s).
    let (pos, neg) = orient(ctx.t, ctx.c1, m.c2_of_y);
    let merged = resolve(proof.node(pos).clause(), proof.node(neg).clause(), ctx.lower_var())
        .map_err(|e| refused(rule, e))?;
    if !merged.contains(ctx.s) {
        return Err(not_applicable(rule, "upper pivot lost in the merged step"));
    }
    let shared_clause = proof.node(m.shared).clause();
    if !shared_clause.contains(ctx.s.negated()) {
        return Err(not_applicable(rule, "shared parent misses the upper pivot"));
    }
    let (pos_cl, neg_cl) =
        if ctx.s.is_positive() { (&merged, shared_clause) } else { (shared_clause, &merged) };
    let new_root = resolve(pos_cl, neg_cl, ctx.upper_var()).map_err(|e| refused(rule, e))?;
    if &new_root != proof.node(ctx.root).clause() {
        return Err(not_applicable(rule, "root clause would change under a shuffle"));
    }

    let mut outcome = ApplyOutcome::default();
    let merged_id = proof.add_step_with_clause(merged, ctx.lower_var(), pos, neg);
    outcome.new_nodes.push(merged_id);
    let (pos, neg) = orient(ctx.s, merged_id, m.shared);
    proof.relink_step(ctx.root, new_root, ctx.upper_var(), pos, neg);
    for old in [m.x, m.y] {
        if proof.is_live(old) && proof.node(old).children().is_empty() {
            collect_pruned(proof, old, &mut outcome.detached);
        }
    }
    Ok(outcome)
}

/// S2 and R2: the swap. The inner node becomes `Res over v(t) of (c1, c3)`
/// and the root re-resolves it against `c2` over `v(s)`. For S2 the root
/// clause is unchanged; for R2 it shrinks.
fn apply_swap(
    proof: &mut ResolutionProof,
    ctx: &RuleContext,
    rule: RuleKind,
) -> Result<ApplyOutcome, RuleError> {
    let c4p = lower_resolvent(proof, ctx, ctx.c1, ctx.c3).map_err(|e| refused(rule, e))?;
    if !c4p.contains(ctx.s) {
        return Err(not_applicable(rule, "upper pivot lost in the swapped step"));
    }
    let c2_clause = proof.node(ctx.c2).clause();
    if !c2_clause.contains(ctx.s.negated()) {
        return Err(not_applicable(rule, "c2 misses the upper pivot"));
    }
    let (pos_cl, neg_cl) =
        if ctx.s.is_positive() { (&c4p, c2_clause) } else { (c2_clause, &c4p) };
    let new_root = resolve(pos_cl, neg_cl, ctx.upper_var()).map_err(|e| refused(rule, e))?;
    let old_root = proof.node(ctx.root).clause();
    match rule {
        RuleKind::S2 if &new_root != old_root => {
            return Err(not_applicable(rule, "root clause would change under a shuffle"))
        }
        RuleKind::R2 if !new_root.subsumes(old_root) => {
            return Err(not_applicable(rule, "root clause would not strengthen"))
        }
        _ => {}
    }

    let mut outcome = ApplyOutcome::default();
    outcome.root_clause_changed = &new_root != old_root;
    outcome.new_nodes.extend(split_inner_if_shared(proof, ctx));
    let (pos, neg) = orient(ctx.t, ctx.c1, ctx.c3);
    proof.relink_step(ctx.inner, c4p, ctx.lower_var(), pos, neg);
    let (pos, neg) = orient(ctx.s, ctx.inner, ctx.c2);
    proof.relink_step(ctx.root, new_root, ctx.upper_var(), pos, neg);
    Ok(outcome)
}

/// R1 and R2': the root is rebuilt directly as `Res over v(t) of (c1, c3)`,
/// detaching the inner node (which keeps any other children).
fn apply_relink(
    proof: &mut ResolutionProof,
    ctx: &RuleContext,
    rule: RuleKind,
) -> Result<ApplyOutcome, RuleError> {
    let new_root = lower_resolvent(proof, ctx, ctx.c1, ctx.c3).map_err(|e| refused(rule, e))?;
    let old_root = proof.node(ctx.root).clause();
    if !new_root.subsumes(old_root) {
        return Err(not_applicable(rule, "root clause would not strengthen"));
    }
    let mut outcome = ApplyOutcome::default();
    outcome.root_clause_changed = &new_root != old_root;
    let (pos, neg) = orient(ctx.t, ctx.c1, ctx.c3);
    proof.relink_step(ctx.root, new_root, ctx.lower_var(), pos, neg);
    if proof.is_live(ctx.inner) && proof.node(ctx.inner).children().is_empty() {
        collect_pruned(proof, ctx.inner, &mut outcome.detached);
    }
    Ok(outcome)
}

/// R3: the whole context collapses to `c2`, whose clause subsumes the root.
fn apply_r3(proof: &mut ResolutionProof, ctx: &RuleContext) -> Result<ApplyOutcome, RuleError> {
    let rule = RuleKind::R3;
    let c2_clause = proof.node(ctx.c2).clause();
    let old_root = proof.node(ctx.root).clause();
    if !c2_clause.subsumes(old_root) {
        return Err(not_applicable(rule, "c2 does not subsume the root clause"));
    }
    let mut outcome = ApplyOutcome::default();
    outcome.root_clause_changed = c2_clause != old_root;
    let root = ctx.root;
    let target = ctx.c2;
    let parents = proof.replace_node_keep_parents(root, target);
    outcome.detached.push(root);
    if let Some((pos, neg)) = parents {
        for side in [pos, neg] {
            if proof.is_live(side) && proof.node(side).children().is_empty() {
                collect_pruned(proof, side, &mut outcome.detached);
            }
        }
    }
    Ok(outcome)
}

/// Prunes the childless subgraph rooted at `start`, recording what was freed.
fn collect_pruned(proof: &mut ResolutionProof, start: NodeId, freed: &mut Vec<NodeId>) {
    let before: std::collections::BTreeSet<NodeId> = proof.iter_ids().collect();
    proof.prune_detached(start);
    for id in before {
        if !proof.is_live(id) {
            freed.push(id);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof_core::{isomorphic, Side, Var};
    use crate::transform::context::{classify, detect_contexts};

    fn clause(lits: &[i32]) -> Clause {
        Clause::from_dimacs(lits).unwrap()
    }

    /// Two stacked steps: (c1, c2) over |s|, then against c3 over |t|.
    fn stacked(c1: &[i32], c2: &[i32], c3: &[i32], s: i32, t: i32) -> (ResolutionProof, NodeId) {
        let mut p = ResolutionProof::new();
        let n1 = p.add_leaf(clause(c1));
        let n2 = p.add_leaf(clause(c2));
        let n3 = p.add_leaf(clause(c3));
        let (pos, neg) = if s > 0 { (n1, n2) } else { (n2, n1) };
        let inner = p.add_step(pos, neg, Var::new(s.unsigned_abs())).unwrap();
        let (pos, neg) = if t > 0 { (inner, n3) } else { (n3, inner) };
        let root = p.add_step(pos, neg, Var::new(t.unsigned_abs())).unwrap();
        p.set_root(root);
        (p, root)
    }

    fn only_context(proof: &ResolutionProof, root: NodeId) -> RuleContext {
        let (l, r) = detect_contexts(proof, root);
        l.or(r).unwrap()
    }

    #[test]
    fn s2_swaps_and_preserves_root() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 4], &[-2, 5], 1, 2);
        let before = p.node(root).clause().clone();
        let ctx = only_context(&p, root);
        let out = apply_rule(&mut p, &ctx, RuleKind::S2).unwrap();
        assert!(!out.root_clause_changed);
        assert_eq!(p.node(root).clause(), &before);
        assert_eq!(p.node(root).pivot(), Some(Var::new(1)));
        assert_eq!(p.node(ctx.inner).pivot(), Some(Var::new(2)));
        assert_eq!(p.node(ctx.inner).clause(), &clause(&[1, 3, 5]));
        assert!(p.check_legal().is_legal());
    }

    #[test]
    fn s2_is_an_involution() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 4], &[-2, 5], 1, 2);
        let reference = {
            let (q, _) = stacked(&[1, 2, 3], &[-1, 4], &[-2, 5], 1, 2);
            q
        };
        let ctx = only_context(&p, root);
        apply_rule(&mut p, &ctx, RuleKind::S2).unwrap();
        assert!(!isomorphic(&p, &reference));
        let ctx = only_context(&p, root);
        apply_rule(&mut p, &ctx, RuleKind::S2).unwrap();
        assert!(isomorphic(&p, &reference));
    }

    #[test]
    fn s1_adds_a_step_and_s1_prime_undoes_it() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[-2, 5], 1, 2);
        let reference = {
            let (q, _) = stacked(&[1, 2, 3], &[-1, 2, 4], &[-2, 5], 1, 2);
            q
        };
        let before = p.node(root).clause().clone();
        let nodes_before = p.node_count();
        let ctx = only_context(&p, root);
        let out = apply_rule(&mut p, &ctx, RuleKind::S1).unwrap();
        assert_eq!(out.new_nodes.len(), 1);
        assert_eq!(p.node_count(), nodes_before + 1);
        assert_eq!(p.node(root).clause(), &before);
        assert_eq!(p.node(root).pivot(), Some(Var::new(1)));
        assert!(p.check_legal().is_legal());

        // The result is the split shape; S1' restores the original.
        let ctx = only_context(&p, root);
        assert_eq!(classify(&p, &ctx), vec![RuleKind::S2]);
        assert!(s1_prime_match(&p, &ctx).is_some());
        let out = apply_rule(&mut p, &ctx, RuleKind::S1Prime).unwrap();
        assert!(!out.root_clause_changed);
        assert!(p.check_legal().is_legal());
        assert!(isomorphic(&p, &reference));
    }

    #[test]
    fn s1_prime_refuses_plain_contexts() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[-2, 5], 1, 2);
        let ctx = only_context(&p, root);
        assert!(classify(&p, &ctx).contains(&RuleKind::S1Prime));
        assert!(apply_rule(&mut p, &ctx, RuleKind::S1Prime).is_err());
        assert!(p.check_legal().is_legal());
    }

    #[test]
    fn r1_relinks_root_and_detaches_inner() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[1, -2, 5], 1, 2);
        let old_root = p.node(root).clause().clone();
        let ctx = only_context(&p, root);
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R1]);
        let out = apply_rule(&mut p, &ctx, RuleKind::R1).unwrap();
        // Old root: Res_2({2 3 4}, {1 -2 5}) = {1 3 4 5}; rebuilt root:
        // Res_2({1 2 3}, {1 -2 5}) = {1 3 5}.
        assert_eq!(p.node(root).clause(), &clause(&[1, 3, 5]));
        assert!(p.node(root).clause().subsumes(&old_root));
        assert!(out.root_clause_changed);
        // Inner step and c2 leaf are gone.
        assert!(!out.detached.is_empty());
        assert_eq!(p.node_count(), 3);
        assert!(p.check_legal().is_legal());
    }

    #[test]
    fn r2_shrinks_root_via_swap() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 4], &[1, -2, 5], 1, 2);
        let ctx = only_context(&p, root);
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R2, RuleKind::R2Prime]);
        let out = apply_rule(&mut p, &ctx, RuleKind::R2).unwrap();
        assert!(out.root_clause_changed);
        // Old root {1 3 4 5}; new root drops the upper pivot: {3 4 5}.
        assert_eq!(p.node(root).clause(), &clause(&[3, 4, 5]));
        assert_eq!(p.node_count(), 5);
        assert!(p.check_legal().is_legal());
    }

    #[test]
    fn r2_prime_keeps_upper_pivot_and_detaches() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 4], &[1, -2, 5], 1, 2);
        let ctx = only_context(&p, root);
        let out = apply_rule(&mut p, &ctx, RuleKind::R2Prime).unwrap();
        assert!(out.root_clause_changed);
        assert_eq!(p.node(root).clause(), &clause(&[1, 3, 5]));
        assert_eq!(p.node_count(), 3);
        assert!(p.check_legal().is_legal());
    }

    #[test]
    fn r3_collapses_to_c2() {
        let (mut p, root) = stacked(&[1, 2, 3], &[-1, 4], &[-1, -2, 5], 1, 2);
        let ctx = only_context(&p, root);
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R3]);
        let out = apply_rule(&mut p, &ctx, RuleKind::R3).unwrap();
        assert!(out.root_clause_changed);
        assert!(!p.is_live(root));
        assert_eq!(p.root(), ctx.c2);
        assert_eq!(p.node(p.root()).clause(), &clause(&[-1, 4]));
        assert_eq!(p.node_count(), 1);
    }

    #[test]
    fn shared_inner_is_split_before_a_swap() {
        // The inner node feeds a second resolvent, so S2 must leave a copy.
        let mut p = ResolutionProof::new();
        let c1 = p.add_leaf(clause(&[1, 2, 3]));
        let c2 = p.add_leaf(clause(&[-1, 4]));
        let c3 = p.add_leaf(clause(&[-2, 5]));
        let other = p.add_leaf(clause(&[-2, 6]));
        let bridge = p.add_leaf(clause(&[-5, -6, 7]));
        let inner = p.add_step(c1, c2, Var::new(1)).unwrap();
        let root = p.add_step(inner, c3, Var::new(2)).unwrap();
        let side = p.add_step(inner, other, Var::new(2)).unwrap();
        let mid = p.add_step(root, bridge, Var::new(5)).unwrap();
        let top = p.add_step(side, mid, Var::new(6)).unwrap();
        p.set_root(top);
        assert!(p.check_legal().is_legal());

        let ctx = detect_contexts(&p, root).0.unwrap();
        let out = apply_rule(&mut p, &ctx, RuleKind::S2).unwrap();
        assert_eq!(out.new_nodes.len(), 1);
        let copy = out.new_nodes[0];
        assert_eq!(p.node(copy).clause(), &clause(&[2, 3, 4]));
        assert_eq!(p.node(side).parent(Side::Pos), Some(copy));
        assert!(p.check_legal().is_legal());
    }
}
