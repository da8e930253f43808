//! Proof compression: global passes that shrink a refutation in place.
//!
//! Each pass takes a legal proof and leaves a legal proof whose leaves are a
//! subset of the originals and whose root clause subsumes the original root
//! (so a refutation stays a refutation):
//!
//! * [`recycle_pivots`] — cuts steps whose pivot already vanished on the
//!   path to the root, restarting at every shared node.
//! * [`recycle_pivots_intersection`] — the same idea with per-node literal
//!   sets intersected over all paths, so shared nodes keep their power.
//! * [`pushdown_units`] — pulls unit-clause resolutions out of the interior
//!   and replays them once, at the bottom of the proof.
//! * [`structural_hashing`] — merges inner nodes derived from the same
//!   parent pair.
//!
//! [`run_pipeline`] sequences these together with the local rule-rewriting
//! traversals from [`crate::transform`], under a loop count and time budget,
//! and reports [`CompressionMetrics`].

mod hashing;
mod metrics;
mod pipeline;
mod recycle;
mod units;

pub use hashing::structural_hashing;
pub use metrics::{metrics, write_csv, CompressionMetrics, Counts, CSV_HEADER};
pub use pipeline::{run_pipeline, PipelinePlan, PlanParseError, Stage};
pub use recycle::{recycle_pivots, recycle_pivots_intersection, RemovableLiterals};
pub use units::pushdown_units;
