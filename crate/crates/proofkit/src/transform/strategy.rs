//! Rule-selection strategies: the pluggable decision point of the
//! transformation traversal.
//!
//! A strategy looks at the (up to two) contexts rooted at the node being
//! visited and either names one rule to apply to one of them, or passes.
//! Strategies never mutate the proof.

use std::collections::BTreeSet;

use crate::proof_core::{ResolutionProof, Var};
use crate::transform::context::{classify, s1_prime_match, RuleContext, RuleKind};

/// A choice made by a strategy: which context to rewrite, and how.
pub type Decision = Option<(RuleContext, RuleKind)>;

pub trait RuleStrategy {
    fn decide(
        &self,
        proof: &ResolutionProof,
        left: Option<&RuleContext>,
        right: Option<&RuleContext>,
    ) -> Decision;
}

/// Applies nothing; the traversal degenerates to plain reconstruction.
#[derive(Debug, Clone, Copy, Default)]
pub struct SkipAll;

impl RuleStrategy for SkipAll {
    fn decide(
        &self,
        _proof: &ResolutionProof,
        _left: Option<&RuleContext>,
        _right: Option<&RuleContext>,
    ) -> Decision {
        None
    }
}

/// A candidate application, ranked for the final pick.
struct Candidate {
    ctx: RuleContext,
    rule: RuleKind,
    /// Higher wins; among equals the right context wins.
    tiebreak: usize,
}

/// Selects the best-ranked candidate; on equal precedence the right context
/// is preferred (candidates are collected right first), then the recorded
/// tie-break score.
fn pick(candidates: Vec<Candidate>) -> Decision {
    candidates
        .into_iter()
        .enumerate()
        .max_by_key(|(i, c)| (c.rule.precedence(), c.tiebreak, std::cmp::Reverse(*i)))
        .map(|(_, c)| (c.ctx, c.rule))
}

/// The compression strategy: reducing rules always, shuffles only when they
/// cannot grow the proof.
///
/// - `R3`, `R1` and `R2'` apply whenever classified (`R2'` is preferred over
///   `R2`, which would duplicate a shared inner node).
/// - `S1'` applies on the split shape when at least one of the two merged
///   steps feeds nothing else, so the merge cannot add nodes.
/// - `S2` applies only when the inner node has a single child (no
///   duplication); between two such swaps, the one whose `c3` feeds more
///   resolvents is preferred, pushing nodes with several children upward.
/// - `S1` is never applied: it always adds a step.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompressionStrategy;

impl RuleStrategy for CompressionStrategy {
    fn decide(
        &self,
        proof: &ResolutionProof,
        left: Option<&RuleContext>,
        right: Option<&RuleContext>,
    ) -> Decision {
        let mut candidates = Vec::new();
        for ctx in [right, left].into_iter().flatten() {
            let rules = classify(proof, ctx);
            for rule in rules {
                match rule {
                    RuleKind::R3 | RuleKind::R1 | RuleKind::R2Prime => {
                        candidates.push(Candidate { ctx: ctx.clone(), rule, tiebreak: 0 });
                    }
                    RuleKind::R2 | RuleKind::S1 => {}
                    RuleKind::S1Prime => {}
                    RuleKind::S2 => {
                        if proof.node(ctx.inner).children().len() == 1 {
                            let c3_children = proof.node(ctx.c3).children().len();
                            candidates.push(Candidate {
                                ctx: ctx.clone(),
                                rule,
                                tiebreak: c3_children,
                            });
                        }
                    }
                }
            }
            if let Some(m) = s1_prime_match(proof, ctx) {
                let x_single = proof.node(m.x).children().len() == 1;
                let y_single = proof.node(m.y).children().len() == 1;
                if x_single || y_single {
                    candidates.push(Candidate {
                        ctx: ctx.clone(),
                        rule: RuleKind::S1Prime,
                        tiebreak: 0,
                    });
                }
            }
        }
        pick(candidates)
    }
}

/// The reordering strategy: acts only on unordered contexts — those whose
/// lower pivot is light and upper pivot heavy — choosing the rule that moves
/// the light resolution above the heavy one (or removes one of the two).
///
/// In linear mode rules that would duplicate a shared inner node are skipped,
/// keeping the node count from growing.
#[derive(Debug, Clone)]
pub struct ReorderingStrategy {
    light: BTreeSet<Var>,
    linear: bool,
}

impl ReorderingStrategy {
    pub fn new(light: BTreeSet<Var>, linear: bool) -> ReorderingStrategy {
        ReorderingStrategy { light, linear }
    }

    pub fn is_unordered(&self, ctx: &RuleContext) -> bool {
        self.light.contains(&ctx.lower_var()) && !self.light.contains(&ctx.upper_var())
    }
}

impl RuleStrategy for ReorderingStrategy {
    fn decide(
        &self,
        proof: &ResolutionProof,
        left: Option<&RuleContext>,
        right: Option<&RuleContext>,
    ) -> Decision {
        let mut candidates = Vec::new();
        for ctx in [right, left].into_iter().flatten() {
            if !self.is_unordered(ctx) {
                continue;
            }
            let shared_inner = proof.node(ctx.inner).children().len() > 1;
            for rule in classify(proof, ctx) {
                let wanted = match rule {
                    RuleKind::S1 | RuleKind::S2 | RuleKind::R1 | RuleKind::R3 => true,
                    RuleKind::R2 => true,
                    RuleKind::R2Prime | RuleKind::S1Prime => false,
                };
                if !wanted {
                    continue;
                }
                let duplicates = shared_inner
                    && matches!(rule, RuleKind::S1 | RuleKind::S2 | RuleKind::R2);
                if self.linear && duplicates {
                    continue;
                }
                candidates.push(Candidate { ctx: ctx.clone(), rule, tiebreak: 0 });
            }
        }
        pick(candidates)
    }
}
