//! A small conflict-driven solver that logs every conflict analysis as a
//! resolution chain, so unsatisfiable runs end with a checkable proof.
//!
//! The design stays deliberately plain: two-watched-literal propagation,
//! first-UIP learning, an activity heuristic with multiplicative decay, no
//! restarts and no preprocessing. Learned clauses keep every literal the
//! analysis accumulates — including root-level ones — so each stored clause
//! is exactly the resolvent of its logged chain.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::proof_core::{Literal, NodeId, ResolutionProof, Var};
use crate::proof_io::CnfFormula;
use crate::sat_engine::ResourceLimit;

/// Resource knobs and the tie-breaking seed.
#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Seeds the activity jitter that breaks branching ties.
    pub seed: u64,
    /// Conflict budget; exceeding it aborts with [`ResourceLimit`].
    pub max_conflicts: u64,
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig { seed: 0, max_conflicts: 1_000_000 }
    }
}

/// The outcome of a solver run.
#[derive(Debug)]
pub enum SolveResult {
    /// Satisfiable, with a witness (`model[i]` is the value of variable
    /// `i + 1`).
    Sat { model: Vec<bool> },
    /// Unsatisfiable, with a legal refutation whose leaves are input
    /// clauses.
    Unsat { proof: ResolutionProof },
}

impl SolveResult {
    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveResult::Unsat { .. })
    }

    pub fn model(&self) -> Option<&[bool]> {
        match self {
            SolveResult::Sat { model } => Some(model),
            SolveResult::Unsat { .. } => None,
        }
    }

    pub fn proof(&self) -> Option<&ResolutionProof> {
        match self {
            SolveResult::Sat { .. } => None,
            SolveResult::Unsat { proof } => Some(proof),
        }
    }

    pub fn into_proof(self) -> Option<ResolutionProof> {
        match self {
            SolveResult::Sat { .. } => None,
            SolveResult::Unsat { proof } => Some(proof),
        }
    }
}

/// Solves with the default configuration.
pub fn solve_with_proof(cnf: &CnfFormula) -> Result<SolveResult, ResourceLimit> {
    Solver::new(SolverConfig::default()).solve(cnf)
}

/// Internal literal code: variable index shifted left, low bit set on
/// negative literals.
type Code = u32;

fn code_of(lit: Literal) -> Code {
    ((lit.var().number() - 1) << 1) | u32::from(!lit.is_positive())
}

fn negate(code: Code) -> Code {
    code ^ 1
}

fn var_of(code: Code) -> usize {
    (code >> 1) as usize
}

/// A learned clause's derivation: the conflicting clause, then one
/// resolution per step against the reason of the named trail variable.
struct Chain {
    start: usize,
    steps: Vec<(Var, usize)>,
}

/// A reusable solver.
pub struct Solver {
    config: SolverConfig,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Solver {
        Solver { config }
    }

    pub fn solve(&self, cnf: &CnfFormula) -> Result<SolveResult, ResourceLimit> {
        Run::new(cnf, self.config).solve()
    }
}

impl Default for Solver {
    fn default() -> Solver {
        Solver::new(SolverConfig::default())
    }
}

struct Run<'a> {
    cnf: &'a CnfFormula,
    config: SolverConfig,
    nvars: usize,
    /// Clause literals; indices < `cnf.len()` are inputs, the rest learned.
    db: Vec<Vec<Code>>,
    /// Derivations, aligned with `db`; `None` for inputs.
    chains: Vec<Option<Chain>>,
    watches: Vec<Vec<usize>>,
    assign: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<Option<usize>>,
    trail: Vec<Code>,
    lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    bump: f64,
    phase: Vec<bool>,
    conflicts: u64,
}

impl<'a> Run<'a> {
    fn new(cnf: &'a CnfFormula, config: SolverConfig) -> Run<'a> {
        let nvars = cnf.num_vars() as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        Run {
            cnf,
            config,
            nvars,
            db: Vec::with_capacity(cnf.len()),
            chains: Vec::with_capacity(cnf.len()),
            watches: vec![Vec::new(); nvars * 2],
            assign: vec![0; nvars],
            level: vec![0; nvars],
            reason: vec![None; nvars],
            trail: Vec::with_capacity(nvars),
            lim: Vec::new(),
            qhead: 0,
            activity: (0..nvars).map(|_| rng.gen_range(0.0..1.0)).collect(),
            bump: 1.0,
            phase: vec![false; nvars],
            conflicts: 0,
        }
    }

    fn value(&self, code: Code) -> i8 {
        let v = self.assign[var_of(code)];
        if code & 1 == 1 {
            -v
        } else {
            v
        }
    }

    fn current_level(&self) -> u32 {
        self.lim.len() as u32
    }

    fn enqueue(&mut self, code: Code, reason: Option<usize>) {
        debug_assert_eq!(self.value(code), 0);
        let v = var_of(code);
        self.assign[v] = if code & 1 == 0 { 1 } else { -1 };
        self.level[v] = self.current_level();
        self.reason[v] = reason;
        self.trail.push(code);
    }

    fn solve(mut self) -> Result<SolveResult, ResourceLimit> {
        // Load the clause database; units enqueue, empties refute outright.
        for (i, clause) in self.cnf.iter().enumerate() {
            let lits: Vec<Code> = clause.iter().map(code_of).collect();
            self.db.push(lits);
            self.chains.push(None);
            match self.db[i].as_slice() {
                [] => return Ok(SolveResult::Unsat { proof: self.finalize(i) }),
                [unit] => {
                    let unit = *unit;
                    match self.value(unit) {
                        0 => self.enqueue(unit, Some(i)),
                        1 => {}
                        _ => return Ok(SolveResult::Unsat { proof: self.finalize(i) }),
                    }
                }
                _ => {
                    let (a, b) = (self.db[i][0], self.db[i][1]);
                    self.watches[a as usize].push(i);
                    self.watches[b as usize].push(i);
                }
            }
        }

        loop {
            if let Some(conflict) = self.propagate() {
                if self.current_level() == 0 {
                    return Ok(SolveResult::Unsat { proof: self.finalize(conflict) });
                }
                self.conflicts += 1;
                if self.conflicts > self.config.max_conflicts {
                    return Err(ResourceLimit(format!(
                        "conflict budget of {} exhausted",
                        self.config.max_conflicts
                    )));
                }
                self.learn_from(conflict);
            } else if self.trail.len() == self.nvars {
                let model = self.assign.iter().map(|&v| v > 0).collect();
                return Ok(SolveResult::Sat { model });
            } else {
                self.decide();
            }
        }
    }

    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let falsified = negate(p);
            let mut ws = std::mem::take(&mut self.watches[falsified as usize]);
            let mut i = 0;
            while i < ws.len() {
                let ci = ws[i];
                if self.db[ci][0] == falsified {
                    self.db[ci].swap(0, 1);
                }
                let other = self.db[ci][0];
                if self.value(other) == 1 {
                    i += 1;
                    continue;
                }
                let replacement =
                    (2..self.db[ci].len()).find(|&k| self.value(self.db[ci][k]) != -1);
                if let Some(k) = replacement {
                    self.db[ci].swap(1, k);
                    let moved = self.db[ci][1];
                    self.watches[moved as usize].push(ci);
                    ws.swap_remove(i);
                    continue;
                }
                if self.value(other) == -1 {
                    self.watches[falsified as usize] = ws;
                    return Some(ci);
                }
                self.enqueue(other, Some(ci));
                i += 1;
            }
            self.watches[falsified as usize] = ws;
        }
        None
    }

    fn decide(&mut self) {
        let v = (0..self.nvars)
            .filter(|&v| self.assign[v] == 0)
            .max_by(|&a, &b| self.activity[a].total_cmp(&self.activity[b]))
            .expect("an unassigned variable exists");
        self.lim.push(self.trail.len());
        let code = ((v as u32) << 1) | u32::from(!self.phase[v]);
        self.enqueue(code, None);
    }

    fn bump_var(&mut self, v: usize) {
        self.activity[v] += self.bump;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.bump *= 1e-100;
        }
    }

    /// First-UIP analysis. Every literal the resolution accumulates stays in
    /// the learned clause, so the clause equals its chain's resolvent.
    fn learn_from(&mut self, conflict: usize) {
        let current = self.current_level();
        let mut steps: Vec<(Var, usize)> = Vec::new();
        let mut learned: Vec<Code> = Vec::new();
        let mut seen = vec![false; self.nvars];
        let mut pending = 0usize;
        let mut cls = conflict;
        let mut at = self.trail.len();
        let uip;
        loop {
            for k in 0..self.db[cls].len() {
                let q = self.db[cls][k];
                let v = var_of(q);
                if !seen[v] && self.value(q) != 0 {
                    seen[v] = true;
                    self.bump_var(v);
                    if self.level[v] == current {
                        pending += 1;
                    } else {
                        learned.push(q);
                    }
                }
            }
            loop {
                at -= 1;
                if seen[var_of(self.trail[at])] {
                    break;
                }
            }
            let p = self.trail[at];
            pending -= 1;
            if pending == 0 {
                uip = p;
                break;
            }
            let r = self.reason[var_of(p)].expect("conflict-side literal has a reason");
            steps.push((Var::new(var_of(p) as u32 + 1), r));
            // Skip the pivot when scanning the reason clause.
            seen[var_of(p)] = true;
            cls = r;
        }
        learned.insert(0, negate(uip));

        // Backjump to the deepest level among the carried literals, keeping
        // that literal in the second watch slot.
        let backjump = if learned.len() == 1 {
            0
        } else {
            let mut back = 1;
            for k in 2..learned.len() {
                if self.level[var_of(learned[k])] > self.level[var_of(learned[back])] {
                    back = k;
                }
            }
            learned.swap(1, back);
            self.level[var_of(learned[1])]
        };

        self.backtrack(backjump);
        let idx = self.db.len();
        self.db.push(learned);
        self.chains.push(Some(Chain { start: conflict, steps }));
        if self.db[idx].len() >= 2 {
            let (a, b) = (self.db[idx][0], self.db[idx][1]);
            self.watches[a as usize].push(idx);
            self.watches[b as usize].push(idx);
        }
        let assert_code = self.db[idx][0];
        self.enqueue(assert_code, Some(idx));

        self.bump /= 0.95;
    }

    fn backtrack(&mut self, to: u32) {
        while self.current_level() > to {
            let mark = self.lim.pop().unwrap();
            while self.trail.len() > mark {
                let code = self.trail.pop().unwrap();
                let v = var_of(code);
                self.phase[v] = self.assign[v] > 0;
                self.assign[v] = 0;
                self.reason[v] = None;
            }
        }
        self.qhead = self.trail.len();
    }

    /// Builds the refutation after a conflict at level zero: fold the
    /// conflicting clause against the reasons of its false literals, most
    /// recent first, until the empty clause remains; then expand every chain
    /// the result depends on, oldest first.
    fn finalize(mut self, conflict: usize) -> ResolutionProof {
        let mut final_steps: Vec<(Var, usize)> = Vec::new();
        let mut open: HashSet<Code> = self.db[conflict].iter().copied().collect();
        for at in (0..self.trail.len()).rev() {
            let t = self.trail[at];
            if !open.remove(&negate(t)) {
                continue;
            }
            let r = self.reason[var_of(t)].expect("root-level literal has a reason");
            final_steps.push((Var::new(var_of(t) as u32 + 1), r));
            for &q in &self.db[r] {
                if q != t {
                    open.insert(q);
                }
            }
        }
        debug_assert!(open.is_empty(), "level-zero fold ends at the empty clause");
        let final_chain = Chain { start: conflict, steps: final_steps };

        // Only the clauses the empty clause depends on get proof nodes.
        let mut needed: HashSet<usize> = HashSet::new();
        let mut stack: Vec<usize> = vec![conflict];
        stack.extend(final_chain.steps.iter().map(|&(_, r)| r));
        while let Some(c) = stack.pop() {
            if !needed.insert(c) {
                continue;
            }
            if let Some(chain) = &self.chains[c] {
                stack.push(chain.start);
                stack.extend(chain.steps.iter().map(|&(_, r)| r));
            }
        }

        let mut proof = ResolutionProof::new();
        let mut nodes: HashMap<usize, NodeId> = HashMap::new();
        for c in 0..self.db.len() {
            if !needed.contains(&c) {
                continue;
            }
            let node = match self.chains[c].take() {
                None => proof.add_leaf(self.cnf.clauses()[c].clone()),
                Some(chain) => expand_chain(&mut proof, &chain, &nodes),
            };
            nodes.insert(c, node);
        }
        let root = expand_chain(&mut proof, &final_chain, &nodes);
        proof.set_root(root);
        debug_assert!(proof.node(root).clause().is_empty());
        proof
    }
}

/// Left-folds a logged chain into binary resolution steps.
fn expand_chain(
    proof: &mut ResolutionProof,
    chain: &Chain,
    nodes: &HashMap<usize, NodeId>,
) -> NodeId {
    let mut current = nodes[&chain.start];
    for &(pivot, r) in &chain.steps {
        let other = nodes[&r];
        let positive = proof.node(current).clause().polarity_of(pivot) == Some(true);
        let (pos, neg) = if positive { (current, other) } else { (other, current) };
        current = proof
            .add_step(pos, neg, pivot)
            .expect("logged chain steps resolve");
    }
    current
}
