//! Partition index files: `a`/`b` tags over the clauses of one DIMACS file.
//!
//! An interpolation problem arrives either as two DIMACS files or as a single
//! DIMACS file plus an index file assigning every clause to one side. Each
//! non-comment line of the index reads `<clause-index> <a|b>` with 1-based
//! clause indices counted in file order; every clause must be tagged exactly
//! once. Blank lines and lines starting with `c` are ignored.

use thiserror::Error;

use crate::proof_io::CnfFormula;

/// Which side of the split a clause belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionTag {
    A,
    B,
}

/// A malformed or incomplete partition index.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition line {0}: expected `<clause-index> <a|b>`")]
    Malformed(usize),
    #[error("partition line {line}: clause index {index} outside 1..={count}")]
    OutOfRange { line: usize, index: usize, count: usize },
    #[error("partition line {line}: clause {index} tagged twice")]
    Duplicate { line: usize, index: usize },
    #[error("clause {0} has no partition tag")]
    Untagged(usize),
}

/// Parses an index file over `num_clauses` clauses into one tag per clause,
/// in clause order.
pub fn parse_partition(
    text: &str,
    num_clauses: usize,
) -> Result<Vec<PartitionTag>, PartitionError> {
    let mut tags: Vec<Option<PartitionTag>> = vec![None; num_clauses];
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let index: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(PartitionError::Malformed(lineno))?;
        let tag = match parts.next() {
            Some("a") | Some("A") => PartitionTag::A,
            Some("b") | Some("B") => PartitionTag::B,
            _ => return Err(PartitionError::Malformed(lineno)),
        };
        if parts.next().is_some() {
            return Err(PartitionError::Malformed(lineno));
        }
        if index == 0 || index > num_clauses {
            return Err(PartitionError::OutOfRange { line: lineno, index, count: num_clauses });
        }
        if tags[index - 1].is_some() {
            return Err(PartitionError::Duplicate { line: lineno, index });
        }
        tags[index - 1] = Some(tag);
    }
    if let Some(missing) = tags.iter().position(Option::is_none) {
        return Err(PartitionError::Untagged(missing + 1));
    }
    Ok(tags.into_iter().map(Option::unwrap).collect())
}

/// Splits a formula into its (A, B) halves per the tags. Both halves keep
/// the full variable range so shared variables stay in bounds.
pub fn split_partitions(cnf: &CnfFormula, tags: &[PartitionTag]) -> (CnfFormula, CnfFormula) {
    assert_eq!(tags.len(), cnf.len(), "one tag per clause");
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (clause, tag) in cnf.iter().zip(tags) {
        match tag {
            PartitionTag::A => a.push(clause.clone()),
            PartitionTag::B => b.push(clause.clone()),
        }
    }
    (CnfFormula::new(cnf.num_vars(), a), CnfFormula::new(cnf.num_vars(), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof_core::Clause;

    fn three_clauses() -> CnfFormula {
        CnfFormula::from_clauses(vec![
            Clause::from_dimacs(&[1]).unwrap(),
            Clause::from_dimacs(&[-1, 2]).unwrap(),
            Clause::from_dimacs(&[-2]).unwrap(),
        ])
    }

    #[test]
    fn tags_split_in_clause_order() {
        let cnf = three_clauses();
        let tags = parse_partition("1 a\n2 a\n3 b\n", cnf.len()).unwrap();
        assert_eq!(tags, vec![PartitionTag::A, PartitionTag::A, PartitionTag::B]);
        let (a, b) = split_partitions(&cnf, &tags);
        assert_eq!(a.clauses(), &cnf.clauses()[..2]);
        assert_eq!(b.clauses(), &cnf.clauses()[2..]);
        assert_eq!(a.num_vars(), 2);
        assert_eq!(b.num_vars(), 2);
    }

    #[test]
    fn lines_may_come_in_any_order_with_comments() {
        let cnf = three_clauses();
        let text = "c split for the chain example\n3 B\n\n1 a\n2 A\n";
        let tags = parse_partition(text, cnf.len()).unwrap();
        assert_eq!(tags, vec![PartitionTag::A, PartitionTag::A, PartitionTag::B]);
    }

    #[test]
    fn defects_are_reported_with_line_numbers() {
        assert_eq!(parse_partition("1 x\n", 1), Err(PartitionError::Malformed(1)));
        assert_eq!(parse_partition("one a\n", 1), Err(PartitionError::Malformed(1)));
        assert_eq!(parse_partition("1 a b\n", 1), Err(PartitionError::Malformed(1)));
        assert_eq!(
            parse_partition("2 a\n", 1),
            Err(PartitionError::OutOfRange { line: 1, index: 2, count: 1 })
        );
        assert_eq!(
            parse_partition("0 a\n", 1),
            Err(PartitionError::OutOfRange { line: 1, index: 0, count: 1 })
        );
        assert_eq!(
            parse_partition("1 a\n1 b\n", 1),
            Err(PartitionError::Duplicate { line: 2, index: 1 })
        );
        assert_eq!(parse_partition("1 a\n", 2), Err(PartitionError::Untagged(2)));
    }
}
