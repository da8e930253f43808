//! Size and core measurements taken around a compression run.

use std::io::Write;
use std::time::Duration;

use crate::proof_core::ResolutionProof;

/// A size snapshot of one proof.
#[derive(Clone, Copy, Debug)]
pub struct Counts {
    pub nodes: usize,
    pub edges: usize,
    pub core: usize,
}

impl Counts {
    pub fn of(proof: &ResolutionProof) -> Counts {
        Counts {
            nodes: proof.node_count(),
            edges: proof.edge_count(),
            core: proof.reachable_leaf_clauses().len(),
        }
    }
}

/// Before/after sizes of a compression run, plus its wall time.
#[derive(Clone, Copy, Debug)]
pub struct CompressionMetrics {
    pub nodes_before: usize,
    pub nodes_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub core_before: usize,
    pub core_after: usize,
    pub wall_time: Duration,
}

fn reduction_pct(before: usize, after: usize) -> f64 {
    if before == 0 {
        return 0.0;
    }
    100.0 * (before as f64 - after as f64) / before as f64
}

impl CompressionMetrics {
    pub(crate) fn from_counts(
        before: Counts,
        after: Counts,
        wall_time: Duration,
    ) -> CompressionMetrics {
        CompressionMetrics {
            nodes_before: before.nodes,
            nodes_after: after.nodes,
            edges_before: before.edges,
            edges_after: after.edges,
            core_before: before.core,
            core_after: after.core,
            wall_time,
        }
    }

    /// Node reduction in percent: `100 (before - after) / before`.
    pub fn red_nodes_pct(&self) -> f64 {
        reduction_pct(self.nodes_before, self.nodes_after)
    }

    /// Edge reduction in percent.
    pub fn red_edges_pct(&self) -> f64 {
        reduction_pct(self.edges_before, self.edges_after)
    }

    /// Core reduction in percent.
    pub fn red_core_pct(&self) -> f64 {
        reduction_pct(self.core_before, self.core_after)
    }

    /// One CSV data row (no trailing newline handling; see [`write_csv`]).
    pub fn csv_row(&self, name: &str) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            name,
            self.nodes_before,
            self.nodes_after,
            self.edges_before,
            self.edges_after,
            self.core_before,
            self.core_after,
            self.wall_time.as_millis()
        )
    }
}

/// Compares two proofs as a [`CompressionMetrics`] with zero wall time.
pub fn metrics(before: &ResolutionProof, after: &ResolutionProof) -> CompressionMetrics {
    CompressionMetrics::from_counts(Counts::of(before), Counts::of(after), Duration::ZERO)
}

/// The CSV column header matching [`CompressionMetrics::csv_row`].
pub const CSV_HEADER: &str =
    "name,nodes_before,nodes_after,edges_before,edges_after,core_before,core_after,time_ms";

/// Writes a header line plus one row per named measurement.
pub fn write_csv<W: Write>(
    out: &mut W,
    rows: &[(String, CompressionMetrics)],
) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for (name, m) in rows {
        writeln!(out, "{}", m.csv_row(name))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn the_multipath_pair_reduces_nodes_by_a_fifth() {
        let m = metrics(
            &gallery::multipath_redundancy(),
            &gallery::multipath_redundancy_compressed(),
        );
        assert_eq!(m.nodes_before, 10);
        assert_eq!(m.nodes_after, 8);
        assert!((m.red_nodes_pct() - 20.0).abs() < 1e-9);
    }

    #[test]
    fn identical_proofs_measure_zero_reduction() {
        let p = gallery::shared_subproof();
        let m = metrics(&p, &p);
        assert_eq!(m.red_nodes_pct(), 0.0);
        assert_eq!(m.red_edges_pct(), 0.0);
        assert_eq!(m.red_core_pct(), 0.0);
    }

    #[test]
    fn csv_output_matches_the_fixed_schema() {
        let m = metrics(
            &gallery::compression_showcase(),
            &gallery::compression_showcase_compressed(),
        );
        let mut buf = Vec::new();
        write_csv(&mut buf, &[("showcase".to_string(), m)]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let row = lines.next().unwrap();
        assert!(row.starts_with("showcase,11,5,"));
        assert_eq!(row.split(',').count(), 8);
    }

    #[test]
    fn an_empty_proof_never_divides_by_zero() {
        let m = CompressionMetrics::from_counts(
            Counts { nodes: 0, edges: 0, core: 0 },
            Counts { nodes: 0, edges: 0, core: 0 },
            Duration::ZERO,
        );
        assert_eq!(m.red_nodes_pct(), 0.0);
    }
}
