//! Contexts: the two-step windows the local rewriting rules operate on.
//!
//! A context is a pair of consecutive resolution steps. In the normal form
//! used throughout this module the upper step resolves `c1` (containing the
//! literal `s`) against `c2` over `v(s)`, producing the `inner` node, and the
//! lower step resolves `inner` (containing the literal `t`) against `c3` over
//! `v(t)`, producing `root`:
//!
//! ```text
//!    c1: s t D     c2: ~s E
//!         \          /
//!          \ v(s)   /
//!        inner: t D E      c3: ~t F
//!                \           /
//!                 \  v(t)   /
//!                root: D E F
//! ```
//!
//! `t` is always contained in `c1` (the orientation of the upper step is
//! chosen to make that so), which every rewriting rule relies on.

use crate::proof_core::{Literal, NodeId, ResolutionProof, Side, Var};

/// The seven local rewriting rules.
///
/// `S` rules shuffle steps and leave the context root clause unchanged; `R`
/// rules strengthen it. `S1Prime` is the structural inverse of `S1`: it
/// matches the split shape `S1` produces, not the plain stacked context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
    S1,
    S1Prime,
    S2,
    R1,
    R2,
    R2Prime,
    R3,
}

impl RuleKind {
    /// Selection rank: reducing rules dominate shuffling ones, and within
    /// each family the variant that detaches more of the proof ranks higher.
    pub fn precedence(self) -> u8 {
        match self {
            RuleKind::R3 => 6,
            RuleKind::R2Prime | RuleKind::R1 => 5,
            RuleKind::R2 => 4,
            RuleKind::S1Prime => 3,
            RuleKind::S2 => 2,
            RuleKind::S1 => 1,
        }
    }
}

impl std::fmt::Display for RuleKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            RuleKind::S1 => "S1",
            RuleKind::S1Prime => "S1'",
            RuleKind::S2 => "S2",
            RuleKind::R1 => "R1",
            RuleKind::R2 => "R2",
            RuleKind::R2Prime => "R2'",
            RuleKind::R3 => "R3",
        };
        f.write_str(name)
    }
}

/// A detected two-step context, in normal form (see the module docs).
///
/// `side` records which parent of `root` the inner node is: `Side::Pos` is
/// the left context, `Side::Neg` the right one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleContext {
    pub root: NodeId,
    pub inner: NodeId,
    pub c1: NodeId,
    pub c2: NodeId,
    pub c3: NodeId,
    /// Pivot literal of the upper step, as it occurs in `c1`.
    pub s: Literal,
    /// Pivot literal of the lower step, as it occurs in `inner` (and `c1`).
    pub t: Literal,
    pub side: Side,
}

impl RuleContext {
    pub fn upper_var(&self) -> Var {
        self.s.var()
    }

    pub fn lower_var(&self) -> Var {
        self.t.var()
    }
}

/// Detects the left and right contexts rooted at `n`.
///
/// A context exists for each parent of `n` that is itself an inner node. The
/// orientation of the upper step is canonicalized so that `t ∈ C(c1)`; when
/// both of the inner node's parents contain `t`, the orientation that puts
/// `s` into `C(c3)` is preferred (falling back to the positive parent), which
/// keeps every context inside the side-condition table.
pub fn detect_contexts(
    proof: &ResolutionProof,
    n: NodeId,
) -> (Option<RuleContext>, Option<RuleContext>) {
    let node = proof.node(n);
    let Some(pivot) = node.pivot() else {
        return (None, None);
    };
    let left = context_for_side(proof, n, pivot, Side::Pos);
    let right = context_for_side(proof, n, pivot, Side::Neg);
    (left, right)
}

fn context_for_side(
    proof: &ResolutionProof,
    root: NodeId,
    root_pivot: Var,
    side: Side,
) -> Option<RuleContext> {
    let node = proof.node(root);
    let inner = node.parent(side)?;
    let c3 = node.parent(side.flipped())?;
    let inner_node = proof.node(inner);
    let upper_var = inner_node.pivot()?;
    let (ppos, pneg) = inner_node.parents()?;
    // The lower pivot as it occurs in the inner clause: positive iff the
    // inner node is the positive parent of the root step.
    let t = Literal::new(root_pivot, side == Side::Pos);

    // Orientation A: c1 is the inner step's positive parent (s positive);
    // orientation B: c1 is its negative parent (s negative). Only
    // orientations with t ∈ C(c1) are valid.
    let a_valid = proof.node(ppos).clause().contains(t);
    let b_valid = proof.node(pneg).clause().contains(t);
    let c3_clause = proof.node(c3).clause();
    let pick_b = match (a_valid, b_valid) {
        (false, false) => return None,
        (true, false) => false,
        (false, true) => true,
        (true, true) => {
            let a_s_in_c3 = c3_clause.contains(Literal::positive(upper_var));
            let b_s_in_c3 = c3_clause.contains(Literal::negative(upper_var));
            !a_s_in_c3 && b_s_in_c3
        }
    };
    let (c1, c2, s) = if pick_b {
        (pneg, ppos, Literal::negative(upper_var))
    } else {
        (ppos, pneg, Literal::positive(upper_var))
    };
    Some(RuleContext { root, inner, c1, c2, c3, s, t, side })
}

/// Classifies a context by the side-condition table: the membership of `s`
/// and `¬s` in `C(c3)` and of `t` in `C(c2)` decides which rules match.
///
/// The table lists `S1'` alongside `S1` (it is that rule's inverse and shares
/// its cell in the catalogue), but `S1'` only ever fires on the split shape —
/// see [`s1_prime_match`].
pub fn classify(proof: &ResolutionProof, ctx: &RuleContext) -> Vec<RuleKind> {
    let c3 = proof.node(ctx.c3).clause();
    let s_in_c3 = c3.contains(ctx.s);
    let ns_in_c3 = c3.contains(ctx.s.negated());
    let t_in_c2 = proof.node(ctx.c2).clause().contains(ctx.t);
    match (s_in_c3, ns_in_c3, t_in_c2) {
        (true, _, true) => vec![RuleKind::R1],
        (true, _, false) => vec![RuleKind::R2, RuleKind::R2Prime],
        (false, true, false) => vec![RuleKind::R3],
        (false, false, true) => vec![RuleKind::S1, RuleKind::S1Prime],
        (false, false, false) => vec![RuleKind::S2],
        // ¬s ∈ C3 together with t ∈ C2 cannot survive canonicalization: with
        // t in both upper parents the orientation flip lands in the R1 cell,
        // and with t only in c2 the flip is forced.
        (false, true, true) => Vec::new(),
    }
}

/// The split shape `S1'` rewrites: both parents of the context root are inner
/// nodes over the same pivot and share the node standing on the `¬s` side of
/// both upper steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct S1PrimeMatch {
    /// The inner node of the context (one of the two steps to be merged).
    pub x: NodeId,
    /// The other parent of the root (the second step to be merged).
    pub y: NodeId,
    /// The shared parent.
    pub shared: NodeId,
    /// The non-shared parent of `y`.
    pub c2_of_y: NodeId,
}

/// Checks whether the context root sits on the split shape that `S1'` undoes.
pub fn s1_prime_match(proof: &ResolutionProof, ctx: &RuleContext) -> Option<S1PrimeMatch> {
    let x = ctx.inner;
    let y = ctx.c3;
    if x == y {
        return None;
    }
    let y_node = proof.node(y);
    let y_pivot = y_node.pivot()?;
    if y_pivot != ctx.upper_var() {
        return None;
    }
    // The shared node carries ¬s, so it sits on the ¬s side of both steps.
    let shared_side = if ctx.s.is_positive() { Side::Neg } else { Side::Pos };
    let shared = proof.node(x).parent(shared_side)?;
    if y_node.parent(shared_side)? != shared || shared != ctx.c2 {
        return None;
    }
    let c2_of_y = y_node.parent(shared_side.flipped())?;
    Some(S1PrimeMatch { x, y, shared, c2_of_y })
}

/// Orders `(a, b)` so that `a` carries `lit` positively when `lit` is
/// positive: the node carrying the positive pivot occurrence goes first.
pub(crate) fn orient(lit: Literal, carrier: NodeId, other: NodeId) -> (NodeId, NodeId) {
    if lit.is_positive() {
        (carrier, other)
    } else {
        (other, carrier)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof_core::proof::tests::shared_example;
    use crate::proof_core::Clause;

    fn lit(l: i32) -> Literal {
        Literal::from_dimacs(l).unwrap()
    }

    /// Builds the running two-step example: c1 = s t D, c2 = ¬s E,
    /// c3 = ¬t F with configurable extras, rooted in a fresh proof.
    fn stacked(c1: &[i32], c2: &[i32], c3: &[i32], s: i32, t: i32) -> (ResolutionProof, NodeId) {
        let mut p = ResolutionProof::new();
        let n1 = p.add_leaf(Clause::from_dimacs(c1).unwrap());
        let n2 = p.add_leaf(Clause::from_dimacs(c2).unwrap());
        let n3 = p.add_leaf(Clause::from_dimacs(c3).unwrap());
        let (pos, neg) = if s > 0 { (n1, n2) } else { (n2, n1) };
        let inner = p.add_step(pos, neg, Var::new(s.unsigned_abs())).unwrap();
        let (pos, neg) = if t > 0 { (inner, n3) } else { (n3, inner) };
        let root = p.add_step(pos, neg, Var::new(t.unsigned_abs())).unwrap();
        p.set_root(root);
        (p, root)
    }

    #[test]
    fn detects_both_contexts_on_shared_example() {
        let p = shared_example();
        let (left, right) = detect_contexts(&p, p.root());
        let left = left.unwrap();
        let right = right.unwrap();
        assert_eq!(left.side, Side::Pos);
        assert_eq!(right.side, Side::Neg);
        // Left context: inner oq = Res_p(op, ~p q), c3 = ~o q r.
        assert_eq!(p.node(left.inner).clause().to_dimacs(), vec![1, 3]);
        assert_eq!(left.t, lit(1));
        assert_eq!(left.s, lit(2));
        assert_eq!(p.node(left.c1).clause().to_dimacs(), vec![1, 2]);
        // Right context: inner ~o q r, t = ~o contained in leaf ~o p r.
        assert_eq!(right.t, lit(-1));
        assert_eq!(p.node(right.c1).clause().to_dimacs(), vec![-1, 2, 4]);
    }

    #[test]
    fn leaf_parents_yield_no_context() {
        let mut p = ResolutionProof::new();
        let a = p.add_leaf(Clause::from_dimacs(&[1]).unwrap());
        let b = p.add_leaf(Clause::from_dimacs(&[-1, 2]).unwrap());
        let root = p.add_step(a, b, Var::new(1)).unwrap();
        p.set_root(root);
        assert_eq!(detect_contexts(&p, root), (None, None));
    }

    #[test]
    fn classify_matches_side_condition_table() {
        // S1 cell: s ∉ C3, t ∈ C2.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[-2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(classify(&p, &ctx), vec![RuleKind::S1, RuleKind::S1Prime]);

        // S2 cell: s ∉ C3, ¬s ∉ C3, t ∉ C2.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 4], &[-2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(classify(&p, &ctx), vec![RuleKind::S2]);

        // R1 cell: s ∈ C3, t ∈ C2.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[1, -2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R1]);

        // R2 cell: s ∈ C3, t ∉ C2.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 4], &[1, -2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R2, RuleKind::R2Prime]);

        // R3 cell: ¬s ∈ C3, t ∉ C2.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 4], &[-1, -2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R3]);
    }

    #[test]
    fn orientation_flip_prefers_s_in_c3() {
        // t = 2 occurs in both upper parents; ¬s ∈ C3 under the default
        // orientation, so the flip lands the context in the R1 cell.
        let (p, root) = stacked(&[1, 2, 3], &[-1, 2, 4], &[-1, -2, 5], 1, 2);
        let ctx = detect_contexts(&p, root).0.unwrap();
        assert_eq!(ctx.s, lit(-1));
        assert_eq!(p.node(ctx.c1).clause().to_dimacs(), vec![-1, 2, 4]);
        assert_eq!(classify(&p, &ctx), vec![RuleKind::R1]);
    }

    #[test]
    fn classification_nonempty_on_legal_contexts() {
        let p = shared_example();
        for id in p.iter_ids().collect::<Vec<_>>() {
            let (l, r) = detect_contexts(&p, id);
            for ctx in [l, r].into_iter().flatten() {
                assert!(!classify(&p, &ctx).is_empty());
            }
        }
    }
}
