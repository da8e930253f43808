//! TraceCheck resolution-proof reading and writing.
//!
//! One record per line: `<id> <lit>… 0 <antecedent-id>… 0`. No antecedents
//! makes a leaf; two make a binary step with an inferred pivot; three or
//! more make a chain, folded left to right into binary steps. A `*` in
//! place of the literal section asks for the clause to be reconstructed
//! from the antecedents (leaves must state theirs).
//!
//! Lines starting with `c` are comments, with one refinement: a comment of
//! exactly the form `c lemma <id>` marks the leaf record `<id>` as a theory
//! lemma. The writer emits such a mark for every lemma leaf, so lemma-ness
//! survives a round trip while the file stays plain TraceCheck for tools
//! that skip comments.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::proof_core::{
    find_pivot, Clause, Direction, NodeId, ProofError, ResolutionProof,
};

/// A defect in TraceCheck text, or a proof unfit for writing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceCheckError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("antecedent {id} is never defined")]
    DanglingAntecedent { id: u64 },
    #[error("record {id}: stated clause differs from the recomputed resolvent")]
    ClauseMismatch { id: u64 },
    #[error("record {id} is reachable from its own antecedents")]
    CyclicAntecedents { id: u64 },
    #[error("record {id} is marked `c lemma` but is not a leaf record")]
    LemmaMarkNotALeaf { id: u64 },
    #[error("multiple candidate roots without a unique empty clause among them")]
    AmbiguousRoot,
    #[error("proof fails the legality check and cannot be written")]
    IllegalProof,
}

fn syntax(line: usize, msg: impl Into<String>) -> TraceCheckError {
    TraceCheckError::Syntax { line, msg: msg.into() }
}

/// Parser switches.
#[derive(Clone, Copy, Debug)]
pub struct TraceCheckOptions {
    /// Compare each record's stated clause against the recomputed resolvent
    /// and fail with [`TraceCheckError::ClauseMismatch`] on any difference.
    /// Off, stated clauses are trusted as written (the proof may then fail
    /// `check_legal` if the file lied).
    pub validate: bool,
}

impl Default for TraceCheckOptions {
    fn default() -> TraceCheckOptions {
        TraceCheckOptions { validate: true }
    }
}

struct Record {
    id: u64,
    line: usize,
    /// `None` when the literal section was `*` (clause omitted).
    lits: Option<Vec<i32>>,
    ants: Vec<u64>,
}

/// The id of a `c lemma <id>` mark; `None` for every other comment.
fn lemma_mark(line: &str) -> Option<u64> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("c") || tokens.next() != Some("lemma") {
        return None;
    }
    let id = tokens.next()?.parse().ok().filter(|&n| n != 0)?;
    tokens.next().is_none().then_some(id)
}

fn tokenize(text: &str) -> Result<(Vec<Record>, BTreeSet<u64>), TraceCheckError> {
    let mut records = Vec::new();
    let mut lemmas = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            if let Some(id) = lemma_mark(line) {
                lemmas.insert(id);
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let id: u64 = tokens
            .next()
            .unwrap()
            .parse()
            .map_err(|_| syntax(lineno, "record id must be a positive integer"))?;
        if id == 0 {
            return Err(syntax(lineno, "record id must be positive"));
        }
        let mut tokens = tokens.peekable();
        let lits = if tokens.peek() == Some(&"*") {
            tokens.next();
            None
        } else {
            let mut lits = Vec::new();
            loop {
                let t = tokens
                    .next()
                    .ok_or_else(|| syntax(lineno, "missing literal terminator"))?;
                let n: i32 = t
                    .parse()
                    .map_err(|_| syntax(lineno, format!("bad literal `{t}`")))?;
                if n == 0 {
                    break;
                }
                lits.push(n);
            }
            Some(lits)
        };
        let mut ants = Vec::new();
        loop {
            let t = tokens
                .next()
                .ok_or_else(|| syntax(lineno, "missing antecedent terminator"))?;
            let n: u64 = t
                .parse()
                .map_err(|_| syntax(lineno, format!("bad antecedent id `{t}`")))?;
            if n == 0 {
                break;
            }
            ants.push(n);
        }
        if tokens.next().is_some() {
            return Err(syntax(lineno, "trailing tokens after record"));
        }
        records.push(Record { id, line: lineno, lits, ants });
    }
    Ok((records, lemmas))
}

fn try_step(
    proof: &mut ResolutionProof,
    a: NodeId,
    b: NodeId,
) -> Result<NodeId, ProofError> {
    let pivot = find_pivot(proof.node(a).clause(), proof.node(b).clause())?;
    if proof.node(a).clause().polarity_of(pivot) == Some(true) {
        proof.add_step(a, b, pivot)
    } else {
        proof.add_step(b, a, pivot)
    }
}

fn build_record(
    proof: &mut ResolutionProof,
    rec: &Record,
    built: &HashMap<u64, NodeId>,
    options: TraceCheckOptions,
    lemma: bool,
) -> Result<NodeId, TraceCheckError> {
    let stated = rec
        .lits
        .as_deref()
        .map(Clause::from_dimacs)
        .transpose()
        .map_err(|e| syntax(rec.line, e.to_string()))?;
    if rec.ants.is_empty() {
        let clause = stated
            .ok_or_else(|| syntax(rec.line, "a leaf record must state its clause"))?;
        return Ok(if lemma { proof.add_lemma_leaf(clause) } else { proof.add_leaf(clause) });
    }
    if rec.ants.len() == 1 {
        return Err(syntax(rec.line, "a step needs at least two antecedents"));
    }
    let mut remaining: Vec<NodeId> = rec.ants.iter().map(|a| built[a]).collect();
    let mut current = remaining.remove(0);
    while !remaining.is_empty() {
        // Left-fold in the given order, but TraceCheck does not fix chain
        // order: when the next antecedent does not resolve against the
        // accumulator, try the ones after it before giving up.
        let made = (0..remaining.len())
            .find_map(|i| try_step(proof, current, remaining[i]).ok().map(|n| (i, n)));
        let Some((i, node)) = made else {
            return Err(syntax(rec.line, "antecedents do not form a resolution chain"));
        };
        remaining.remove(i);
        current = node;
    }
    match stated {
        Some(c) if &c != proof.node(current).clause() => {
            if options.validate {
                return Err(TraceCheckError::ClauseMismatch { id: rec.id });
            }
            proof.set_clause(current, c);
        }
        _ => {}
    }
    Ok(current)
}

/// Parses TraceCheck text with default options (validation on).
pub fn parse_tracecheck(text: &str) -> Result<ResolutionProof, TraceCheckError> {
    parse_tracecheck_with(text, TraceCheckOptions::default())
}

/// Parses TraceCheck text. The root is the record whose id is never used
/// as an antecedent; if several qualify, the unique one deriving the empty
/// clause wins. Anything unreachable from the root is dropped.
pub fn parse_tracecheck_with(
    text: &str,
    options: TraceCheckOptions,
) -> Result<ResolutionProof, TraceCheckError> {
    let (records, lemmas) = tokenize(text)?;
    if records.is_empty() {
        return Err(syntax(0, "no proof records"));
    }
    let mut by_id: HashMap<u64, &Record> = HashMap::new();
    for rec in &records {
        if by_id.insert(rec.id, rec).is_some() {
            return Err(syntax(rec.line, format!("duplicate record id {}", rec.id)));
        }
    }

    const VISITING: u8 = 1;
    const DONE: u8 = 2;
    let mut proof = ResolutionProof::new();
    let mut state: HashMap<u64, u8> = HashMap::new();
    let mut built: HashMap<u64, NodeId> = HashMap::new();
    for rec in &records {
        if state.get(&rec.id) == Some(&DONE) {
            continue;
        }
        let mut stack = vec![rec.id];
        while let Some(&top) = stack.last() {
            if state.get(&top) == Some(&DONE) {
                stack.pop();
                continue;
            }
            state.insert(top, VISITING);
            let record = by_id[&top];
            let next = record.ants.iter().find(|a| state.get(a) != Some(&DONE));
            match next {
                None => {
                    let node =
                        build_record(&mut proof, record, &built, options, lemmas.contains(&top))?;
                    built.insert(top, node);
                    state.insert(top, DONE);
                    stack.pop();
                }
                Some(&a) => {
                    if !by_id.contains_key(&a) {
                        return Err(TraceCheckError::DanglingAntecedent { id: a });
                    }
                    if state.get(&a) == Some(&VISITING) {
                        return Err(TraceCheckError::CyclicAntecedents { id: a });
                    }
                    stack.push(a);
                }
            }
        }
    }

    for &id in &lemmas {
        match built.get(&id) {
            Some(n) if proof.node(*n).is_theory_lemma() => {}
            _ => return Err(TraceCheckError::LemmaMarkNotALeaf { id }),
        }
    }

    let referenced: std::collections::HashSet<u64> =
        records.iter().flat_map(|r| r.ants.iter().copied()).collect();
    let unreferenced: Vec<u64> = records
        .iter()
        .map(|r| r.id)
        .filter(|id| !referenced.contains(id))
        .collect();
    let root_id = match unreferenced.as_slice() {
        [only] => *only,
        [] => return Err(TraceCheckError::AmbiguousRoot),
        several => {
            let empties: Vec<u64> = several
                .iter()
                .copied()
                .filter(|id| proof.node(built[id]).clause().is_empty())
                .collect();
            match empties.as_slice() {
                [only] => *only,
                _ => return Err(TraceCheckError::AmbiguousRoot),
            }
        }
    };
    proof.set_root(built[&root_id]);
    proof.gc_detached();
    Ok(proof)
}

/// Renders a proof as TraceCheck text: one record per node, antecedents
/// before dependents, ids renumbered from 1, LF line endings.
pub fn write_tracecheck(proof: &ResolutionProof) -> Result<String, TraceCheckError> {
    if !proof.check_legal().is_legal() {
        return Err(TraceCheckError::IllegalProof);
    }
    let order = proof
        .topological(Direction::TopDown)
        .map_err(|_| TraceCheckError::IllegalProof)?;
    let ids: HashMap<NodeId, usize> =
        order.iter().enumerate().map(|(i, n)| (*n, i + 1)).collect();
    let mut out = String::new();
    for id in &order {
        let node = proof.node(*id);
        out.push_str(&ids[id].to_string());
        for n in node.clause().to_dimacs() {
            out.push(' ');
            out.push_str(&n.to_string());
        }
        out.push_str(" 0");
        if let Some((pos, neg)) = node.parents() {
            out.push_str(&format!(" {} {}", ids[&pos], ids[&neg]));
        }
        out.push_str(" 0\n");
        if node.is_theory_lemma() {
            out.push_str(&format!("c lemma {}\n", ids[id]));
        }
    }
    Ok(out)
}
