//! A gallery of small worked refutations.
//!
//! Every fixture here is a hand-sized proof whose behaviour under the
//! transformation and compression passes is known exactly. They appear
//! throughout the test suite as golden inputs/outputs and double as handy
//! starting material for experimenting with the command-line tools.
//!
//! Each builder documents its variable numbering; all proofs are legal (the
//! builders assert so in debug builds).

use crate::proof_core::{Clause, ResolutionProof, Var};

fn c(ints: &[i32]) -> Clause {
    Clause::from_dimacs(ints).expect("gallery clauses are well-formed")
}

fn v(n: u32) -> Var {
    Var::new(n)
}

fn checked(proof: ResolutionProof) -> ResolutionProof {
    debug_assert!(proof.check_legal().is_legal());
    proof
}

/// Two resolution steps sharing one antecedent: the smallest proof with a
/// genuinely DAG-shaped interior. Variables: o=1, p=2, q=3, r=4. Leaves op,
/// ¬p q, ¬o p r; the ¬p q leaf feeds both steps; root q r.
pub fn shared_subproof() -> ResolutionProof {
    let mut proof = ResolutionProof::new();
    let op = proof.add_leaf(c(&[1, 2]));
    let npq = proof.add_leaf(c(&[-2, 3]));
    let nopr = proof.add_leaf(c(&[-1, 2, 4]));
    let oq = proof.add_step(op, npq, v(2)).unwrap();
    let noqr = proof.add_step(nopr, npq, v(2)).unwrap();
    let qr = proof.add_step(oq, noqr, v(1)).unwrap();
    proof.set_root(qr);
    checked(proof)
}

/// A five-step chain that the compression strategy collapses from eleven
/// nodes down to five (see [`compression_showcase_compressed`]).
/// Variables: o=1, p=2, q=3, r=4, s=5.
pub fn compression_showcase() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pq = p.add_leaf(c(&[2, 3]));
    let np_o = p.add_leaf(c(&[-2, 1]));
    let p_nq = p.add_leaf(c(&[2, -3]));
    let qr = p.add_leaf(c(&[3, 4]));
    let np_nq = p.add_leaf(c(&[-2, -3]));
    let n_os = p.add_leaf(c(&[-1, 5]));
    let qo = p.add_step(pq, np_o, v(2)).unwrap();
    let po = p.add_step(qo, p_nq, v(3)).unwrap();
    let npr = p.add_step(qr, np_nq, v(3)).unwrap();
    let or = p.add_step(po, npr, v(2)).unwrap();
    let rs = p.add_step(or, n_os, v(1)).unwrap();
    p.set_root(rs);
    checked(p)
}

/// The fully compressed form of [`compression_showcase`]: root r from three
/// of the original leaves.
pub fn compression_showcase_compressed() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let p_nq = p.add_leaf(c(&[2, -3]));
    let np_nq = p.add_leaf(c(&[-2, -3]));
    let qr = p.add_leaf(c(&[3, 4]));
    let nq = p.add_step(p_nq, np_nq, v(2)).unwrap();
    let r = p.add_step(qr, nq, v(3)).unwrap();
    p.set_root(r);
    checked(p)
}

/// A chain where one explicit R2 swap strengthens an interior clause and the
/// subsequent propagation prunes a whole branch (see
/// [`swap_exposes_reduction_compressed`]). Variables: p=1, q=2, r=3, u=4,
/// v=5.
pub fn swap_exposes_reduction() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pq = p.add_leaf(c(&[1, 2]));
    let npr = p.add_leaf(c(&[-1, 3]));
    let p_nq = p.add_leaf(c(&[1, -2]));
    let npu = p.add_leaf(c(&[-1, 4]));
    let nrv = p.add_leaf(c(&[-3, 5]));
    let qr = p.add_step(pq, npr, v(1)).unwrap();
    let pr = p.add_step(qr, p_nq, v(2)).unwrap();
    let ru = p.add_step(pr, npu, v(1)).unwrap();
    let uv = p.add_step(ru, nrv, v(3)).unwrap();
    p.set_root(uv);
    checked(p)
}

/// Where [`swap_exposes_reduction`] lands after the R2 swap and propagation:
/// seven nodes, root v, the ¬p u leaf pruned.
pub fn swap_exposes_reduction_compressed() -> ResolutionProof {
    let mut proof = ResolutionProof::new();
    let pq = proof.add_leaf(c(&[1, 2]));
    let p_nq = proof.add_leaf(c(&[1, -2]));
    let npr = proof.add_leaf(c(&[-1, 3]));
    let nrv = proof.add_leaf(c(&[-3, 5]));
    let p = proof.add_step(pq, p_nq, v(2)).unwrap();
    let r = proof.add_step(p, npr, v(1)).unwrap();
    let vv = proof.add_step(r, nrv, v(3)).unwrap();
    proof.set_root(vv);
    checked(proof)
}

/// A chain that reuses variable p as pivot twice on one path, so plain pivot
/// recycling removes the topmost step (see
/// [`duplicate_pivot_chain_regularized`]). Variables: o=1, p=2, q=3. The
/// root is the unit clause o rather than ⊥.
pub fn duplicate_pivot_chain() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pq = p.add_leaf(c(&[2, 3]));
    let np_o = p.add_leaf(c(&[-2, 1]));
    let p_nq = p.add_leaf(c(&[2, -3]));
    let qo = p.add_leaf(c(&[3, 1]));
    let np_nq = p.add_leaf(c(&[-2, -3]));
    let qo_step = p.add_step(pq, np_o, v(2)).unwrap();
    let po_step = p.add_step(qo_step, p_nq, v(3)).unwrap();
    let npo_step = p.add_step(qo, np_nq, v(3)).unwrap();
    let o = p.add_step(po_step, npo_step, v(2)).unwrap();
    p.set_root(o);
    checked(p)
}

/// The regular form of [`duplicate_pivot_chain`]: the redundant upper p-step
/// is gone, seven nodes remain.
pub fn duplicate_pivot_chain_regularized() -> ResolutionProof {
    let mut proof = ResolutionProof::new();
    let pq = proof.add_leaf(c(&[2, 3]));
    let p_nq = proof.add_leaf(c(&[2, -3]));
    let qo = proof.add_leaf(c(&[3, 1]));
    let np_nq = proof.add_leaf(c(&[-2, -3]));
    let p = proof.add_step(pq, p_nq, v(3)).unwrap();
    let npo = proof.add_step(qo, np_nq, v(3)).unwrap();
    let o = proof.add_step(p, npo, v(2)).unwrap();
    proof.set_root(o);
    checked(proof)
}

/// A proof whose interior node q r feeds two branches that both resolve on p
/// again: path-local recycling resets at the fork and finds nothing, while
/// the intersection variant prunes the topmost step (see
/// [`multipath_redundancy_compressed`]). Variables: p=1, q=2, r=3, s=4. The
/// root is the unit clause r.
pub fn multipath_redundancy() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pq = p.add_leaf(c(&[1, 2]));
    let npr = p.add_leaf(c(&[-1, 3]));
    let nqs = p.add_leaf(c(&[-2, 4]));
    let nq_ns_p = p.add_leaf(c(&[-2, -4, 1]));
    let np = p.add_leaf(c(&[-1]));
    let qr = p.add_step(pq, npr, v(1)).unwrap();
    let rs = p.add_step(qr, nqs, v(2)).unwrap();
    let r_ns_p = p.add_step(qr, nq_ns_p, v(2)).unwrap();
    let rp = p.add_step(rs, r_ns_p, v(4)).unwrap();
    let r = p.add_step(rp, np, v(1)).unwrap();
    p.set_root(r);
    checked(p)
}

/// Where [`multipath_redundancy`] lands after intersection-based recycling:
/// the topmost step collapses into its p q leaf, the ¬p r leaf is pruned,
/// every interior clause is recomputed, and the root strengthens from r to
/// ⊥. Eight nodes.
pub fn multipath_redundancy_compressed() -> ResolutionProof {
    let mut proof = ResolutionProof::new();
    let pq = proof.add_leaf(c(&[1, 2]));
    let nqs = proof.add_leaf(c(&[-2, 4]));
    let nq_ns_p = proof.add_leaf(c(&[-2, -4, 1]));
    let np = proof.add_leaf(c(&[-1]));
    let ps = proof.add_step(pq, nqs, v(2)).unwrap();
    let ns_p = proof.add_step(pq, nq_ns_p, v(2)).unwrap();
    let p = proof.add_step(ps, ns_p, v(4)).unwrap();
    let bot = proof.add_step(p, np, v(1)).unwrap();
    proof.set_root(bot);
    checked(proof)
}

/// A chain interleaved with two unit antecedents (a shared ¬p and a ¬r), the
/// showcase for unit pushdown (see [`unit_chain_compressed`]). Variables:
/// p=1, q=2, r=3, o=4, u=5. The root is the unit clause u.
pub fn unit_chain() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pqr = p.add_leaf(c(&[1, 2, 3]));
    let np = p.add_leaf(c(&[-1]));
    let nq_po = p.add_leaf(c(&[-2, 1, 4]));
    let nr = p.add_leaf(c(&[-3]));
    let no_u = p.add_leaf(c(&[-4, 5]));
    let qr = p.add_step(pqr, np, v(1)).unwrap();
    let rpo = p.add_step(qr, nq_po, v(2)).unwrap();
    let po = p.add_step(rpo, nr, v(3)).unwrap();
    let pu = p.add_step(po, no_u, v(4)).unwrap();
    let u = p.add_step(pu, np, v(1)).unwrap();
    p.set_root(u);
    checked(p)
}

/// Where [`unit_chain`] lands after unit pushdown: both units are detached
/// from the body and re-resolved once each at the root, giving nine nodes
/// and the same root clause u.
pub fn unit_chain_compressed() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let pqr = p.add_leaf(c(&[1, 2, 3]));
    let nq_po = p.add_leaf(c(&[-2, 1, 4]));
    let no_u = p.add_leaf(c(&[-4, 5]));
    let np = p.add_leaf(c(&[-1]));
    let nr = p.add_leaf(c(&[-3]));
    let rpo = p.add_step(pqr, nq_po, v(2)).unwrap();
    let pru = p.add_step(rpo, no_u, v(4)).unwrap();
    let ru = p.add_step(pru, np, v(1)).unwrap();
    let u = p.add_step(ru, nr, v(3)).unwrap();
    p.set_root(u);
    checked(p)
}

/// An abstraction of a two-theory refutation whose placeholder variables
/// p5…p8 (minted by lemma instantiation, foreign to both input partitions)
/// need lifting above the pure variables p1…p4. Four input leaves —
/// p1 from the A side; ¬p2, ¬p3, ¬p4 from the B side — and five
/// theory-lemma leaves. One unordered context: the p5 step sits right below
/// the p4 step (see [`reordering_showcase_sorted`] for where one S2 swap
/// takes it).
pub fn reordering_showcase() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let l1 = p.add_lemma_leaf(c(&[7, 8]));
    let l2 = p.add_lemma_leaf(c(&[-1, 3, -8]));
    let n1 = p.add_step(l1, l2, v(8)).unwrap();
    let l3 = p.add_lemma_leaf(c(&[4, -5, -7]));
    let n2 = p.add_step(n1, l3, v(7)).unwrap();
    let l4 = p.add_leaf(c(&[-4]));
    let n3 = p.add_step(n2, l4, v(4)).unwrap();
    let l5 = p.add_lemma_leaf(c(&[5, 6]));
    let l6 = p.add_lemma_leaf(c(&[-1, 2, -6]));
    let n4 = p.add_step(l5, l6, v(6)).unwrap();
    let n5 = p.add_step(n4, n3, v(5)).unwrap();
    let l7 = p.add_leaf(c(&[-3]));
    let n6 = p.add_step(n5, l7, v(3)).unwrap();
    let l8 = p.add_leaf(c(&[1]));
    let n7 = p.add_step(l8, n6, v(1)).unwrap();
    let l9 = p.add_leaf(c(&[-2]));
    let n8 = p.add_step(n7, l9, v(2)).unwrap();
    p.set_root(n8);
    checked(p)
}

/// [`reordering_showcase`] after its single S2 swap: the p4 and p5 steps
/// change places, so all placeholder pivots stand above all pure ones and
/// the placeholder region roots in the mixed-free clause ¬p1 p2 p3 p4.
pub fn reordering_showcase_sorted() -> ResolutionProof {
    let mut p = ResolutionProof::new();
    let l1 = p.add_lemma_leaf(c(&[7, 8]));
    let l2 = p.add_lemma_leaf(c(&[-1, 3, -8]));
    let m1 = p.add_step(l1, l2, v(8)).unwrap();
    let l3 = p.add_lemma_leaf(c(&[4, -5, -7]));
    let m2 = p.add_step(m1, l3, v(7)).unwrap();
    let l5 = p.add_lemma_leaf(c(&[5, 6]));
    let l6 = p.add_lemma_leaf(c(&[-1, 2, -6]));
    let m3 = p.add_step(l5, l6, v(6)).unwrap();
    let m4 = p.add_step(m3, m2, v(5)).unwrap();
    let l4 = p.add_leaf(c(&[-4]));
    let m5 = p.add_step(m4, l4, v(4)).unwrap();
    let l7 = p.add_leaf(c(&[-3]));
    let m6 = p.add_step(m5, l7, v(3)).unwrap();
    let l8 = p.add_leaf(c(&[1]));
    let m7 = p.add_step(l8, m6, v(1)).unwrap();
    let l9 = p.add_leaf(c(&[-2]));
    let m8 = p.add_step(m7, l9, v(2)).unwrap();
    p.set_root(m8);
    checked(p)
}
