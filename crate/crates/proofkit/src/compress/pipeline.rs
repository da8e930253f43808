//! Pipeline combinators: run compression stages in a loop under a budget.
//!
//! A plan names an ordered list of stages and a number of global
//! iterations. The whole time budget is divided evenly into one timeslot per
//! iteration; within an iteration, the single-pass stages run first and
//! whatever remains of the timeslot goes to the rule-rewriting traversals.
//! Unit pushdown is special-cased to run once before the loop: the other
//! stages are unlikely to (re)introduce unit antecedents, so repeating it
//! buys nothing.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::compress::hashing::structural_hashing;
use crate::compress::metrics::{CompressionMetrics, Counts};
use crate::compress::recycle::{recycle_pivots, recycle_pivots_intersection};
use crate::compress::units::pushdown_units;
use crate::proof_core::ResolutionProof;
use crate::transform::{reduce_and_expose, RuleStrategy};

/// One pipeline stage.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stage {
    /// Unit pushdown (runs once, before the iteration loop).
    Pu,
    /// Structural hashing.
    Sh,
    /// Depth-first pivot recycling.
    Rp,
    /// Pivot recycling with intersection.
    Rpi,
    /// Rule-rewriting traversals (`reduce_and_expose`) with this traversal
    /// count, bounded by the iteration's remaining timeslot.
    Re(u32),
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Stage::Pu => write!(f, "pu"),
            Stage::Sh => write!(f, "sh"),
            Stage::Rp => write!(f, "rp"),
            Stage::Rpi => write!(f, "rpi"),
            Stage::Re(n) => write!(f, "re({n})"),
        }
    }
}

/// A malformed plan string.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown pipeline stage `{0}` (expected pu, sh, rp, rpi or re)")]
pub struct PlanParseError(String);

/// An ordered stage list plus the loop and budget parameters.
#[derive(Clone, Debug)]
pub struct PipelinePlan {
    stages: Vec<Stage>,
    loops: u32,
    time_limit: Duration,
}

impl PipelinePlan {
    /// A plan over `stages`, repeated `loops` times within `time_limit`.
    /// The stage list must be nonempty and `loops` at least 1.
    pub fn new(stages: Vec<Stage>, loops: u32, time_limit: Duration) -> PipelinePlan {
        assert!(!stages.is_empty(), "a pipeline needs at least one stage");
        assert!(loops >= 1, "a pipeline runs at least one iteration");
        PipelinePlan { stages, loops, time_limit }
    }

    /// Parses a comma-separated stage list such as `pu,sh,rpi,re`. A bare
    /// `re` takes `default_traversals`.
    pub fn parse(
        plan: &str,
        default_traversals: u32,
        loops: u32,
        time_limit: Duration,
    ) -> Result<PipelinePlan, PlanParseError> {
        let mut stages = Vec::new();
        for token in plan.split(',') {
            let token = token.trim().to_ascii_lowercase();
            stages.push(match token.as_str() {
                "pu" => Stage::Pu,
                "sh" => Stage::Sh,
                "rp" => Stage::Rp,
                "rpi" => Stage::Rpi,
                "re" => Stage::Re(default_traversals),
                _ => return Err(PlanParseError(token)),
            });
        }
        Ok(PipelinePlan::new(stages, loops, time_limit))
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn time_limit(&self) -> Duration {
        self.time_limit
    }

    /// The plan's display name, e.g. `pu+sh+rpi+re(3)x2`.
    pub fn name(&self) -> String {
        let stages: Vec<String> = self.stages.iter().map(Stage::to_string).collect();
        format!("{}x{}", stages.join("+"), self.loops)
    }
}

/// Runs the plan against the proof and reports before/after metrics.
pub fn run_pipeline(
    proof: &mut ResolutionProof,
    plan: &PipelinePlan,
    strategy: &dyn RuleStrategy,
) -> CompressionMetrics {
    let started = Instant::now();
    let before = Counts::of(proof);
    let timeslot = plan.time_limit / plan.loops;
    if plan.stages.contains(&Stage::Pu) {
        pushdown_units(proof);
    }
    for _ in 0..plan.loops {
        let mut spent = Duration::ZERO;
        for stage in &plan.stages {
            let stage_started = Instant::now();
            match stage {
                Stage::Pu => {}
                Stage::Sh => structural_hashing(proof),
                Stage::Rp => recycle_pivots(proof),
                Stage::Rpi => recycle_pivots_intersection(proof),
                Stage::Re(traversals) => {
                    let budget = timeslot.saturating_sub(spent);
                    reduce_and_expose(proof, *traversals, budget, strategy);
                }
            }
            spent += stage_started.elapsed();
        }
    }
    CompressionMetrics::from_counts(before, Counts::of(proof), started.elapsed())
}
