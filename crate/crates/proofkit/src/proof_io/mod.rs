//! File formats: DIMACS CNF and partition indices in, TraceCheck proofs in
//! and out, DOT out.

mod dimacs;
mod dot;
mod partition;
mod tracecheck;

pub use dimacs::{parse_dimacs, write_dimacs, CnfFormula, DimacsError};
pub use dot::export_dot;
pub use partition::{parse_partition, split_partitions, PartitionError, PartitionTag};
pub use tracecheck::{
    parse_tracecheck, parse_tracecheck_with, write_tracecheck, TraceCheckError,
    TraceCheckOptions,
};
