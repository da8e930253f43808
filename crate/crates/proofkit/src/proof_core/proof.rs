//! The resolution-proof DAG.
//!
//! A proof is a set of nodes, each either a leaf (an input clause or a theory
//! lemma) or an inner node recording one resolution step over a pivot
//! variable, with the antecedent holding the positive pivot literal kept
//! apart from the one holding the negative. Subproofs may be shared: a node
//! can feed any number of resolvents, so every node also carries the ordered
//! list of its children. The distinguished root is the proof's conclusion —
//! the empty clause for refutations, but any clause for partial proofs.
//!
//! Node handles are stable integers backed by a slab with a free list:
//! removing a node never shifts the others, and its slot may be reused by
//! whatever gets allocated next.

use std::collections::{BTreeSet, BinaryHeap, HashMap};

use thiserror::Error;

use super::clause::{resolve, Clause, ClauseError, Var};

/// Stable handle of a proof node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for NodeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n{}", self.0)
    }
}

/// Which antecedent of a resolution step: the one carrying the positive pivot
/// literal, or the one carrying the negative.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Pos,
    Neg,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Pos => Side::Neg,
            Side::Neg => Side::Pos,
        }
    }
}

/// Traversal directions for [`ResolutionProof::topological`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Every node after all of its parents (leaves first).
    TopDown,
    /// Every node after all of its children (root first).
    BottomUp,
}

/// What a node is: a hypothesis or a resolution step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Leaf { theory_lemma: bool },
    Inner { pivot: Var, pos: NodeId, neg: NodeId },
}

/// One node of the proof DAG.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofNode {
    pub(crate) clause: Clause,
    pub(crate) kind: NodeKind,
    pub(crate) children: Vec<NodeId>,
}

impl ProofNode {
    pub fn clause(&self) -> &Clause {
        &self.clause
    }

    pub fn kind(&self) -> &NodeKind {
        &self.kind
    }

    pub fn children(&self) -> &[NodeId] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf { .. })
    }

    pub fn is_theory_lemma(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf { theory_lemma: true })
    }

    pub fn pivot(&self) -> Option<Var> {
        match self.kind {
            NodeKind::Inner { pivot, .. } => Some(pivot),
            NodeKind::Leaf { .. } => None,
        }
    }

    /// Both parents of an inner node, positive side first.
    pub fn parents(&self) -> Option<(NodeId, NodeId)> {
        match self.kind {
            NodeKind::Inner { pos, neg, .. } => Some((pos, neg)),
            NodeKind::Leaf { .. } => None,
        }
    }

    pub fn parent(&self, side: Side) -> Option<NodeId> {
        self.parents().map(|(p, n)| match side {
            Side::Pos => p,
            Side::Neg => n,
        })
    }
}

/// Errors raised by proof construction and maintenance.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProofError {
    #[error(transparent)]
    Clause(#[from] ClauseError),
    #[error("parent links contain a cycle")]
    CycleDetected,
    #[error("{0} has a single child and cannot be split")]
    SingleChild(NodeId),
    #[error("{child} is not a child of {node}")]
    NotAChild { node: NodeId, child: NodeId },
    #[error("root clause is not empty, proof is not a refutation")]
    NotARefutation,
    #[error("proof has no nodes")]
    Empty,
}

/// One structural or semantic defect found by [`ResolutionProof::check_legal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An inner node's clause is not the resolvent of its parents.
    WrongResolvent { node: NodeId },
    /// A parent lacks the pivot with the polarity its side requires.
    MissingPivot { node: NodeId, side: Side },
    /// Recomputing the node's resolvent would produce a tautology.
    TautologicalResolvent { node: NodeId },
    /// A parent handle points at a vacant slot.
    DanglingParent { node: NodeId, side: Side },
    /// A child handle points at a vacant slot.
    DanglingChild { node: NodeId, child: NodeId },
    /// Parent and child lists disagree about an edge.
    LinkMismatch { parent: NodeId, child: NodeId },
    /// The node cannot reach the root through child edges.
    Detached { node: NodeId },
    /// Parent links form a cycle.
    Cycle,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::WrongResolvent { node } => {
                write!(f, "{node}: stated clause differs from the resolvent of its parents")
            }
            Violation::MissingPivot { node, side } => {
                let side = match side {
                    Side::Pos => "positive",
                    Side::Neg => "negative",
                };
                write!(f, "{node}: {side} parent lacks the pivot literal")
            }
            Violation::TautologicalResolvent { node } => {
                write!(f, "{node}: parents resolve to a tautology")
            }
            Violation::DanglingParent { node, side } => {
                let side = match side {
                    Side::Pos => "positive",
                    Side::Neg => "negative",
                };
                write!(f, "{node}: {side} parent handle is vacant")
            }
            Violation::DanglingChild { node, child } => {
                write!(f, "{node}: child handle {child} is vacant")
            }
            Violation::LinkMismatch { parent, child } => {
                write!(f, "edge {parent} -> {child} recorded on one side only")
            }
            Violation::Detached { node } => {
                write!(f, "{node} cannot reach the root")
            }
            Violation::Cycle => write!(f, "parent links contain a cycle"),
        }
    }
}

/// The result of a legality check; empty means the proof is legal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LegalityReport {
    pub violations: Vec<Violation>,
}

impl LegalityReport {
    pub fn is_legal(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A resolution proof with shared subproofs.
#[derive(Clone, Debug, Default)]
pub struct ResolutionProof {
    slots: Vec<Option<ProofNode>>,
    free: Vec<u32>,
    root: Option<NodeId>,
    live: usize,
}

impl ResolutionProof {
    pub fn new() -> ResolutionProof {
        ResolutionProof::default()
    }

    /// The number of live nodes.
    pub fn node_count(&self) -> usize {
        self.live
    }

    /// The number of live inner nodes.
    pub fn inner_count(&self) -> usize {
        self.iter_ids().filter(|&id| !self.node(id).is_leaf()).count()
    }

    /// The number of parent edges: two per inner node.
    pub fn edge_count(&self) -> usize {
        2 * self.inner_count()
    }

    pub fn leaf_count(&self) -> usize {
        self.node_count() - self.inner_count()
    }

    /// The proof's conclusion. Panics on an empty proof.
    pub fn root(&self) -> NodeId {
        self.root.expect("proof has no root")
    }

    pub fn set_root(&mut self, id: NodeId) {
        debug_assert!(self.is_live(id));
        self.root = Some(id);
    }

    pub fn is_live(&self, id: NodeId) -> bool {
        self.slots.get(id.index()).map_or(false, Option::is_some)
    }

    /// Immutable access to a node. Panics on vacant handles.
    pub fn node(&self, id: NodeId) -> &ProofNode {
        self.slots[id.index()].as_ref().expect("vacant node handle")
    }

    fn node_mut(&mut self, id: NodeId) -> &mut ProofNode {
        self.slots[id.index()].as_mut().expect("vacant node handle")
    }

    /// Live node handles in ascending order.
    pub fn iter_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(i, _)| NodeId(i as u32))
    }

    fn insert(&mut self, node: ProofNode) -> NodeId {
        self.live += 1;
        match self.free.pop() {
            Some(slot) => {
                self.slots[slot as usize] = Some(node);
                NodeId(slot)
            }
            None => {
                self.slots.push(Some(node));
                NodeId((self.slots.len() - 1) as u32)
            }
        }
    }

    fn remove(&mut self, id: NodeId) -> ProofNode {
        let node = self.slots[id.index()].take().expect("vacant node handle");
        self.free.push(id.index() as u32);
        self.live -= 1;
        if self.root == Some(id) {
            self.root = None;
        }
        node
    }

    /// Adds an input-clause leaf.
    pub fn add_leaf(&mut self, clause: Clause) -> NodeId {
        self.insert(ProofNode {
            clause,
            kind: NodeKind::Leaf { theory_lemma: false },
            children: Vec::new(),
        })
    }

    /// Adds a leaf standing for an extracted theory lemma.
    pub fn add_lemma_leaf(&mut self, clause: Clause) -> NodeId {
        self.insert(ProofNode {
            clause,
            kind: NodeKind::Leaf { theory_lemma: true },
            children: Vec::new(),
        })
    }

    /// Adds a resolution step, computing and checking the resolvent.
    pub fn add_step(&mut self, pos: NodeId, neg: NodeId, pivot: Var) -> Result<NodeId, ProofError> {
        let clause = resolve(self.node(pos).clause(), self.node(neg).clause(), pivot)?;
        Ok(self.add_step_with_clause(clause, pivot, pos, neg))
    }

    /// Adds a resolution step with a stated clause, trusting the caller.
    ///
    /// Used where the clause is known by construction, and by the trace
    /// parser when stated-clause validation is switched off.
    pub fn add_step_with_clause(
        &mut self,
        clause: Clause,
        pivot: Var,
        pos: NodeId,
        neg: NodeId,
    ) -> NodeId {
        let id = self.insert(ProofNode {
            clause,
            kind: NodeKind::Inner { pivot, pos, neg },
            children: Vec::new(),
        });
        self.node_mut(pos).children.push(id);
        self.node_mut(neg).children.push(id);
        id
    }

    /// Rewrites an inner node in place: new pivot, parents, and clause.
    /// Old parent edges are dropped, new ones added. No pruning happens here;
    /// callers decide when detached subproofs should go.
    pub(crate) fn relink_step(
        &mut self,
        id: NodeId,
        clause: Clause,
        pivot: Var,
        pos: NodeId,
        neg: NodeId,
    ) {
        if let Some((op, on)) = self.node(id).parents() {
            self.unlink_child(op, id);
            self.unlink_child(on, id);
        }
        let node = self.node_mut(id);
        node.clause = clause;
        node.kind = NodeKind::Inner { pivot, pos, neg };
        self.node_mut(pos).children.push(id);
        self.node_mut(neg).children.push(id);
    }

    pub(crate) fn set_clause(&mut self, id: NodeId, clause: Clause) {
        self.node_mut(id).clause = clause;
    }

    /// Turns a node into a theory-lemma leaf, detaching its parents.
    /// The detached subproof is pruned.
    pub(crate) fn demote_to_lemma_leaf(&mut self, id: NodeId) {
        if let Some((pos, neg)) = self.node(id).parents() {
            self.unlink_child(pos, id);
            self.unlink_child(neg, id);
            self.node_mut(id).kind = NodeKind::Leaf { theory_lemma: true };
            self.prune_detached(pos);
            self.prune_detached(neg);
        }
    }

    fn unlink_child(&mut self, parent: NodeId, child: NodeId) {
        let children = &mut self.node_mut(parent).children;
        if let Some(i) = children.iter().position(|&c| c == child) {
            children.remove(i);
        }
    }

    /// Frees `start` if it has become childless and is not the root, then
    /// walks up through any parents left childless by that removal.
    pub(crate) fn prune_detached(&mut self, start: NodeId) {
        let mut stack = vec![start];
        while let Some(id) = stack.pop() {
            if !self.is_live(id) || Some(id) == self.root {
                continue;
            }
            if !self.node(id).children.is_empty() {
                continue;
            }
            let node = self.remove(id);
            if let NodeKind::Inner { pos, neg, .. } = node.kind {
                self.unlink_child(pos, id);
                self.unlink_child(neg, id);
                stack.push(pos);
                stack.push(neg);
            }
        }
    }

    /// Every child of `node` is re-pointed at `target`, which inherits them
    /// in order; `node` is removed and whatever its removal detaches is
    /// pruned. If `node` was the root, `target` becomes the root.
    pub(crate) fn replace_node_with(&mut self, node: NodeId, target: NodeId) {
        if let Some((pos, neg)) = self.replace_node_keep_parents(node, target) {
            self.prune_detached(pos);
            self.prune_detached(neg);
        }
    }

    /// Like [`ResolutionProof::replace_node_with`], but leaves whatever the
    /// removal detaches in place, returning the removed step's parents so the
    /// caller can prune them later (or keep them alive deliberately).
    pub(crate) fn replace_node_keep_parents(
        &mut self,
        node: NodeId,
        target: NodeId,
    ) -> Option<(NodeId, NodeId)> {
        debug_assert_ne!(node, target);
        let children = std::mem::take(&mut self.node_mut(node).children);
        for &child in &children {
            match &mut self.node_mut(child).kind {
                NodeKind::Inner { pos, neg, .. } => {
                    if *pos == node {
                        *pos = target;
                    }
                    if *neg == node {
                        *neg = target;
                    }
                }
                NodeKind::Leaf { .. } => unreachable!("leaf recorded as a child"),
            }
        }
        self.node_mut(target).children.extend(children);
        let was_root = self.root == Some(node);
        let removed = self.remove(node);
        if was_root {
            self.root = Some(target);
        }
        if let NodeKind::Inner { pos, neg, .. } = removed.kind {
            self.unlink_child(pos, node);
            self.unlink_child(neg, node);
            Some((pos, neg))
        } else {
            None
        }
    }

    /// Replaces a step by one of its parents: the parent inherits all of the
    /// node's children (and the root role, if the node was the root), while
    /// the subproof hanging off the other parent is pruned where detached.
    /// Returns the surviving parent.
    pub fn replace_with_parent(&mut self, node: NodeId, side: Side) -> NodeId {
        let target = self
            .node(node)
            .parent(side)
            .expect("replace_with_parent needs an inner node");
        self.replace_node_with(node, target);
        target
    }

    /// Splits a node with several resolvents: a copy keeps every child except
    /// `keep_child`, the original keeps only `keep_child`. Parent edges (for
    /// inner nodes) are duplicated onto the copy. Returns the copy.
    pub fn split_node(&mut self, node: NodeId, keep_child: NodeId) -> Result<NodeId, ProofError> {
        let n = self.node(node);
        if n.children.len() < 2 {
            return Err(ProofError::SingleChild(node));
        }
        if !n.children.contains(&keep_child) {
            return Err(ProofError::NotAChild { node, child: keep_child });
        }
        let copy = ProofNode { clause: n.clause.clone(), kind: n.kind.clone(), children: Vec::new() };
        let copy_id = self.insert(copy);
        if let Some((pos, neg)) = self.node(node).parents() {
            self.node_mut(pos).children.push(copy_id);
            self.node_mut(neg).children.push(copy_id);
        }
        let mut moved = Vec::new();
        let children = &mut self.node_mut(node).children;
        children.retain(|&c| {
            if c == keep_child {
                true
            } else {
                moved.push(c);
                false
            }
        });
        for &child in &moved {
            if let NodeKind::Inner { pos, neg, .. } = &mut self.node_mut(child).kind {
                if *pos == node {
                    *pos = copy_id;
                }
                if *neg == node {
                    *neg = copy_id;
                }
            }
        }
        self.node_mut(copy_id).children = moved;
        Ok(copy_id)
    }

    /// A topological order over the live nodes. Deterministic: among ready
    /// nodes, the smallest handle goes first.
    pub fn topological(&self, direction: Direction) -> Result<Vec<NodeId>, ProofError> {
        if self.live == 0 {
            return Err(ProofError::Empty);
        }
        let mut pending: HashMap<NodeId, usize> = HashMap::with_capacity(self.live);
        let mut ready: BinaryHeap<std::cmp::Reverse<NodeId>> = BinaryHeap::new();
        for id in self.iter_ids() {
            let n = self.node(id);
            let degree = match direction {
                Direction::TopDown => {
                    if n.is_leaf() {
                        0
                    } else {
                        2
                    }
                }
                Direction::BottomUp => n.children.len(),
            };
            if degree == 0 {
                ready.push(std::cmp::Reverse(id));
            } else {
                pending.insert(id, degree);
            }
        }
        let mut order = Vec::with_capacity(self.live);
        while let Some(std::cmp::Reverse(id)) = ready.pop() {
            order.push(id);
            let succ: Vec<NodeId> = match direction {
                Direction::TopDown => self.node(id).children.clone(),
                Direction::BottomUp => {
                    self.node(id).parents().map(|(p, n)| vec![p, n]).unwrap_or_default()
                }
            };
            for s in succ {
                if let Some(d) = pending.get_mut(&s) {
                    *d -= 1;
                    if *d == 0 {
                        pending.remove(&s);
                        ready.push(std::cmp::Reverse(s));
                    }
                }
            }
        }
        if order.len() != self.live {
            return Err(ProofError::CycleDetected);
        }
        Ok(order)
    }

    /// Checks the whole proof and reports every violation found.
    pub fn check_legal(&self) -> LegalityReport {
        let mut violations = Vec::new();
        let mut links_ok = true;
        for id in self.iter_ids() {
            let n = self.node(id);
            if let Some((pos, neg)) = n.parents() {
                for (side, p) in [(Side::Pos, pos), (Side::Neg, neg)] {
                    if !self.is_live(p) {
                        violations.push(Violation::DanglingParent { node: id, side });
                        links_ok = false;
                    } else if !self.node(p).children.contains(&id) {
                        violations.push(Violation::LinkMismatch { parent: p, child: id });
                        links_ok = false;
                    }
                }
            }
            for &c in &n.children {
                if !self.is_live(c) {
                    violations.push(Violation::DanglingChild { node: id, child: c });
                    links_ok = false;
                } else {
                    let ck = self.node(c);
                    let has_edge = ck.parents().map_or(false, |(p, q)| p == id || q == id);
                    if !has_edge {
                        violations.push(Violation::LinkMismatch { parent: id, child: c });
                        links_ok = false;
                    }
                }
            }
        }
        if !links_ok {
            let report = LegalityReport { violations };
            return report;
        }
        if self.topological(Direction::TopDown).is_err() {
            violations.push(Violation::Cycle);
            return LegalityReport { violations };
        }
        // Semantic checks: every inner node's clause is exactly the resolvent
        // of its parents.
        for id in self.iter_ids() {
            let n = self.node(id);
            if let NodeKind::Inner { pivot, pos, neg } = n.kind {
                let pc = self.node(pos).clause();
                let nc = self.node(neg).clause();
                match resolve(pc, nc, pivot) {
                    Ok(r) => {
                        if &r != n.clause() {
                            violations.push(Violation::WrongResolvent { node: id });
                        }
                    }
                    Err(ClauseError::MissingPivot { side, .. }) => {
                        let side = if side == "positive" { Side::Pos } else { Side::Neg };
                        violations.push(Violation::MissingPivot { node: id, side });
                    }
                    Err(ClauseError::TautologicalResolvent(_)) => {
                        violations.push(Violation::TautologicalResolvent { node: id });
                    }
                    Err(_) => violations.push(Violation::WrongResolvent { node: id }),
                }
            }
        }
        // Reachability: walk ancestors of the root; anything missed is detached.
        if let Some(root) = self.root {
            let mut reach = vec![false; self.slots.len()];
            let mut stack = vec![root];
            reach[root.index()] = true;
            while let Some(id) = stack.pop() {
                if let Some((pos, neg)) = self.node(id).parents() {
                    for p in [pos, neg] {
                        if self.is_live(p) && !reach[p.index()] {
                            reach[p.index()] = true;
                            stack.push(p);
                        }
                    }
                }
            }
            for id in self.iter_ids() {
                if !reach[id.index()] {
                    violations.push(Violation::Detached { node: id });
                }
            }
        }
        LegalityReport { violations }
    }

    /// The set of distinct leaf clauses a refutation actually uses.
    pub fn unsat_core(&self) -> Result<BTreeSet<Clause>, ProofError> {
        if !self.node(self.root()).clause().is_empty() {
            return Err(ProofError::NotARefutation);
        }
        Ok(self.reachable_leaf_clauses())
    }

    /// Distinct clauses of the leaves reachable from the root.
    pub fn reachable_leaf_clauses(&self) -> BTreeSet<Clause> {
        let mut seen = vec![false; self.slots.len()];
        let mut stack = vec![self.root()];
        let mut out = BTreeSet::new();
        seen[self.root().index()] = true;
        while let Some(id) = stack.pop() {
            let n = self.node(id);
            match n.parents() {
                None => {
                    out.insert(n.clause().clone());
                }
                Some((pos, neg)) => {
                    for p in [pos, neg] {
                        if !seen[p.index()] {
                            seen[p.index()] = true;
                            stack.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    /// Drops every node that cannot reach the root. Used after parsing, where
    /// a trace may carry derivations nothing depends on.
    pub fn gc_detached(&mut self) {
        let root = self.root();
        let mut reach = vec![false; self.slots.len()];
        let mut stack = vec![root];
        reach[root.index()] = true;
        while let Some(id) = stack.pop() {
            if let Some((pos, neg)) = self.node(id).parents() {
                for p in [pos, neg] {
                    if !reach[p.index()] {
                        reach[p.index()] = true;
                        stack.push(p);
                    }
                }
            }
        }
        let dead: Vec<NodeId> = self.iter_ids().filter(|id| !reach[id.index()]).collect();
        for id in &dead {
            // Remove edges into surviving nodes before freeing.
            if let Some((pos, neg)) = self.node(*id).parents() {
                if reach[pos.index()] {
                    self.unlink_child(pos, *id);
                }
                if reach[neg.index()] {
                    self.unlink_child(neg, *id);
                }
            }
        }
        for id in dead {
            self.remove(id);
        }
    }

    /// Unfolds shared inner subproofs into a tree: every step ends up
    /// feeding exactly one resolvent, duplicating inner nodes as needed,
    /// while leaves stay shared (hypotheses are never copied). Returns
    /// `None` once the result would exceed `max_nodes`.
    pub fn unroll_to_tree(&self, max_nodes: usize) -> Option<ResolutionProof> {
        let mut out = ResolutionProof::new();
        let mut leaves: HashMap<NodeId, NodeId> = HashMap::new();
        let root = self.copy_unrolled(self.root(), &mut out, &mut leaves, max_nodes)?;
        out.set_root(root);
        Some(out)
    }

    fn copy_unrolled(
        &self,
        id: NodeId,
        out: &mut ResolutionProof,
        leaves: &mut HashMap<NodeId, NodeId>,
        max_nodes: usize,
    ) -> Option<NodeId> {
        if out.node_count() >= max_nodes {
            return None;
        }
        let n = self.node(id);
        match n.kind {
            NodeKind::Leaf { theory_lemma } => {
                if let Some(&copy) = leaves.get(&id) {
                    return Some(copy);
                }
                let copy = if theory_lemma {
                    out.add_lemma_leaf(n.clause().clone())
                } else {
                    out.add_leaf(n.clause().clone())
                };
                leaves.insert(id, copy);
                Some(copy)
            }
            NodeKind::Inner { pivot, pos, neg } => {
                let p = self.copy_unrolled(pos, out, leaves, max_nodes)?;
                let q = self.copy_unrolled(neg, out, leaves, max_nodes)?;
                if out.node_count() >= max_nodes {
                    return None;
                }
                Some(out.add_step_with_clause(n.clause().clone(), pivot, p, q))
            }
        }
    }
}

/// Structural equality of two proofs from their roots down, ignoring node
/// numbering. Shared subproofs are compared once thanks to memoization, so
/// this is linear in the proof sizes.
pub fn isomorphic(a: &ResolutionProof, b: &ResolutionProof) -> bool {
    fn eq(
        a: &ResolutionProof,
        b: &ResolutionProof,
        x: NodeId,
        y: NodeId,
        memo: &mut HashMap<(NodeId, NodeId), bool>,
    ) -> bool {
        if let Some(&r) = memo.get(&(x, y)) {
            return r;
        }
        let (nx, ny) = (a.node(x), b.node(y));
        let r = nx.clause() == ny.clause()
            && match (&nx.kind, &ny.kind) {
                (
                    NodeKind::Leaf { theory_lemma: tx },
                    NodeKind::Leaf { theory_lemma: ty },
                ) => tx == ty,
                (
                    NodeKind::Inner { pivot: px, pos: ax, neg: bx },
                    NodeKind::Inner { pivot: py, pos: ay, neg: by },
                ) => px == py && eq(a, b, *ax, *ay, memo) && eq(a, b, *bx, *by, memo),
                _ => false,
            };
        memo.insert((x, y), r);
        r
    }
    if a.node_count() != b.node_count() {
        return false;
    }
    let mut memo = HashMap::new();
    eq(a, b, a.root(), b.root(), &mut memo)
}
