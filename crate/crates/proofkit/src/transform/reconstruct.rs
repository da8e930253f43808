//! The transformation traversal and its outer loop.
//!
//! `transform_and_reconstruct` makes one top-down pass over the proof. At
//! each inner node it restores soundness (recomputing the resolvent, or
//! collapsing the step into a parent when a pivot occurrence has vanished)
//! and then lets the strategy rewrite at most one of the contexts rooted
//! there. Because nodes are visited parents-first, any clause strengthened by
//! a reducing rule is propagated by the very same pass.

use std::time::{Duration, Instant};

use crate::proof_core::{Direction, ResolutionProof};
use crate::transform::context::detect_contexts;
use crate::transform::propagate::repair_step;
use crate::transform::rules::apply_rule;
use crate::transform::strategy::RuleStrategy;

/// One traversal: repair every step top-down, applying at most one rule per
/// visited node as directed by `strategy`. Leaves a legal proof behind.
pub fn transform_and_reconstruct(proof: &mut ResolutionProof, strategy: &dyn RuleStrategy) {
    let order = proof
        .topological(Direction::TopDown)
        .expect("transformation needs an acyclic proof");
    for n in order {
        if !proof.is_live(n) || proof.node(n).is_leaf() {
            continue;
        }
        if !repair_step(proof, n) {
            continue;
        }
        let (left, right) = detect_contexts(proof, n);
        if let Some((ctx, rule)) = strategy.decide(proof, left.as_ref(), right.as_ref()) {
            // The strategy validated applicability; a refusal here would mean
            // the two disagree, and skipping is the safe answer.
            let _ = apply_rule(proof, &ctx, rule);
        }
    }
}

/// Runs `transform_and_reconstruct` up to `num_traversals` times, stopping
/// after the traversal during which `time_limit` elapsed.
pub fn reduce_and_expose(
    proof: &mut ResolutionProof,
    num_traversals: u32,
    time_limit: Duration,
    strategy: &dyn RuleStrategy,
) {
    let started = Instant::now();
    for _ in 0..num_traversals {
        transform_and_reconstruct(proof, strategy);
        if started.elapsed() >= time_limit {
            break;
        }
    }
}
