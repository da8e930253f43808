//! C ABI for the proofkit library.
//!
//! The surface follows the usual opaque-handle pattern: proofs live behind
//! [`PkProof`] pointers created and destroyed here, every fallible call
//! returns a [`PkStatus`], and the text of the most recent failure on the
//! calling thread is available from [`pk_last_error`]. Strings returned
//! through `char**` out-parameters are owned by the caller and must be
//! released with [`pk_string_free`].
//!
//! The committed header `include/proofkit.h` is generated with cbindgen;
//! `cargo test -p proofkit-capi` fails if it drifts from the source, and
//! `cargo test -p proofkit-capi -- --ignored regenerate` rewrites it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use proofkit::compress::{run_pipeline, CompressionMetrics, PipelinePlan};
use proofkit::interpolate::{
    itp_mcmillan, itp_mcmillan_prime, label_variables, pivot_reordering, verify_interpolant,
};
use proofkit::proof_io::{
    export_dot, parse_dimacs, parse_tracecheck_with, write_tracecheck, CnfFormula,
    TraceCheckOptions,
};
use proofkit::sat_engine::{SolveResult, Solver, SolverConfig};
use proofkit::transform::CompressionStrategy;
use proofkit::ResolutionProof;

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PkStatus {
    /// The call succeeded.
    PkOk = 0,
    /// A required pointer argument was null.
    PkErrNullArgument = 1,
    /// A string argument was not valid UTF-8.
    PkErrInvalidUtf8 = 2,
    /// Input text was rejected by a parser (DIMACS, TraceCheck, plan).
    PkErrParse = 3,
    /// The proof failed its legality check.
    PkErrIllegalProof = 4,
    /// The formula (or A ∧ B) is satisfiable, so no refutation exists.
    PkErrSatisfiable = 5,
    /// An interpolation precondition was violated (mixed variable present,
    /// leaf in neither partition, unlabeled variable).
    PkErrContract = 6,
    /// The requested verification failed: the result is not an interpolant.
    PkErrVerification = 7,
    /// A resource limit was hit (solver conflict budget, oracle size).
    PkErrResourceLimit = 8,
    /// An internal invariant broke; the operation was abandoned safely.
    PkErrInternal = 9,
}

/// Interpolation system selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PkAlgo {
    /// McMillan's system.
    PkAlgoMcmillan = 0,
    /// The dual system (McMillan').
    PkAlgoMcmillanPrime = 1,
}

/// Pivot-reordering target applied before interpolation.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PkReorder {
    /// Interpolate the proof as produced.
    PkReorderNone = 0,
    /// Lift A-local pivots leafward (clausal interpolants under McMillan).
    PkReorderCnf = 1,
    /// Lift B-local pivots leafward (dual shape under McMillan').
    PkReorderDnf = 2,
}

/// Before/after sizes of a compression run.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct PkMetrics {
    pub nodes_before: usize,
    pub nodes_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
    pub core_before: usize,
    pub core_after: usize,
}

impl From<CompressionMetrics> for PkMetrics {
    fn from(m: CompressionMetrics) -> PkMetrics {
        PkMetrics {
            nodes_before: m.nodes_before,
            nodes_after: m.nodes_after,
            edges_before: m.edges_before,
            edges_after: m.edges_after,
            core_before: m.core_before,
            core_after: m.core_after,
        }
    }
}

/// A resolution proof. Opaque; create with [`pk_proof_parse`] or
/// [`pk_proof_from_cnf`], destroy with [`pk_proof_free`].
pub struct PkProof {
    inner: ResolutionProof,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: PkStatus, message: impl AsRef<str>) -> PkStatus {
    let sanitized = message.as_ref().replace('\0', "?");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NULs were stripped");
    });
    status
}

fn ok() -> PkStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::default());
    PkStatus::PkOk
}

/// Runs `body`, converting panics into [`PkStatus::PkErrInternal`] so no
/// unwind crosses the language boundary.
fn guarded(body: impl FnOnce() -> PkStatus) -> PkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let text = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".to_string());
            fail(PkStatus::PkErrInternal, text)
        }
    }
}

/// # Safety
/// `text` must be null or point at a NUL-terminated string.
unsafe fn utf8_in<'a>(text: *const c_char) -> Result<&'a str, PkStatus> {
    if text.is_null() {
        return Err(fail(PkStatus::PkErrNullArgument, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| fail(PkStatus::PkErrInvalidUtf8, e.to_string()))
}

fn string_out(out: *mut *mut c_char, text: String) -> PkStatus {
    if out.is_null() {
        return fail(PkStatus::PkErrNullArgument, "null output argument");
    }
    let sanitized = text.replace('\0', "?");
    let c = CString::new(sanitized).expect("NULs were stripped");
    unsafe { *out = c.into_raw() };
    ok()
}

fn solve_to_proof(cnf: &CnfFormula, seed: u64) -> Result<ResolutionProof, PkStatus> {
    let solver = Solver::new(SolverConfig { seed, ..SolverConfig::default() });
    match solver.solve(cnf) {
        Ok(SolveResult::Unsat { proof }) => Ok(proof),
        Ok(SolveResult::Sat { .. }) => {
            Err(fail(PkStatus::PkErrSatisfiable, "the formula is satisfiable"))
        }
        Err(limit) => Err(fail(PkStatus::PkErrResourceLimit, limit.to_string())),
    }
}

/// The message for the most recent failing call on this thread. Empty after
/// a success; the pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn pk_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string obtained from any `char**` out-parameter here. Null is
/// allowed.
///
/// # Safety
/// `text` must be null or a pointer previously returned through an
/// out-parameter of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Parses a TraceCheck proof. `validate` compares each stated clause with
/// the recomputed resolvent during parsing.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must point at writable
/// pointer storage.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_parse(
    text: *const c_char,
    validate: bool,
    out: *mut *mut PkProof,
) -> PkStatus {
    guarded(|| {
        if out.is_null() {
            return fail(PkStatus::PkErrNullArgument, "null output argument");
        }
        let text = match utf8_in(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match parse_tracecheck_with(text, TraceCheckOptions { validate }) {
            Ok(proof) => {
                *out = Box::into_raw(Box::new(PkProof { inner: proof }));
                ok()
            }
            Err(e) => fail(PkStatus::PkErrParse, e.to_string()),
        }
    })
}

/// Solves a DIMACS CNF and returns its refutation, or
/// [`PkStatus::PkErrSatisfiable`] when a model exists.
///
/// # Safety
/// As [`pk_proof_parse`].
#[no_mangle]
pub unsafe extern "C" fn pk_proof_from_cnf(
    dimacs: *const c_char,
    seed: u64,
    out: *mut *mut PkProof,
) -> PkStatus {
    guarded(|| {
        if out.is_null() {
            return fail(PkStatus::PkErrNullArgument, "null output argument");
        }
        let text = match utf8_in(dimacs) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let cnf = match parse_dimacs(text) {
            Ok((cnf, _comments)) => cnf,
            Err(e) => return fail(PkStatus::PkErrParse, e.to_string()),
        };
        match solve_to_proof(&cnf, seed) {
            Ok(proof) => {
                *out = Box::into_raw(Box::new(PkProof { inner: proof }));
                ok()
            }
            Err(status) => status,
        }
    })
}

/// Destroys a proof handle. Null is allowed.
///
/// # Safety
/// `proof` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_free(proof: *mut PkProof) {
    if !proof.is_null() {
        drop(Box::from_raw(proof));
    }
}

/// Number of live nodes, or 0 for null.
///
/// # Safety
/// `proof` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_node_count(proof: *const PkProof) -> usize {
    proof.as_ref().map_or(0, |p| p.inner.node_count())
}

/// Whether the proof ends in the empty clause. False for null.
///
/// # Safety
/// `proof` must be null or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_is_refutation(proof: *const PkProof) -> bool {
    proof
        .as_ref()
        .is_some_and(|p| p.inner.node(p.inner.root()).clause().is_empty())
}

/// Checks legality; [`PkStatus::PkErrIllegalProof`] carries the violation
/// count in the error text.
///
/// # Safety
/// `proof` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_check(proof: *const PkProof) -> PkStatus {
    guarded(|| {
        let Some(proof) = proof.as_ref() else {
            return fail(PkStatus::PkErrNullArgument, "null proof handle");
        };
        let report = proof.inner.check_legal();
        if report.is_legal() {
            ok()
        } else {
            let all: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            fail(
                PkStatus::PkErrIllegalProof,
                format!("{} violation(s): {}", all.len(), all.join("; ")),
            )
        }
    })
}

/// Serializes the proof as TraceCheck text.
///
/// # Safety
/// `proof` must be a valid handle; `out` must point at writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_write(
    proof: *const PkProof,
    out: *mut *mut c_char,
) -> PkStatus {
    guarded(|| {
        let Some(proof) = proof.as_ref() else {
            return fail(PkStatus::PkErrNullArgument, "null proof handle");
        };
        match write_tracecheck(&proof.inner) {
            Ok(text) => string_out(out, text),
            Err(e) => fail(PkStatus::PkErrIllegalProof, e.to_string()),
        }
    })
}

/// Renders the proof as GraphViz DOT text.
///
/// # Safety
/// As [`pk_proof_write`].
#[no_mangle]
pub unsafe extern "C" fn pk_proof_dot(proof: *const PkProof, out: *mut *mut c_char) -> PkStatus {
    guarded(|| {
        let Some(proof) = proof.as_ref() else {
            return fail(PkStatus::PkErrNullArgument, "null proof handle");
        };
        string_out(out, export_dot(&proof.inner))
    })
}

/// Runs a compression pipeline in place. `plan` is the comma-separated
/// stage list (`pu`, `sh`, `rp`, `rpi`, `re`); `loops` ≥ 1 repeats it;
/// `travs` is the traversal count per `re` stage; `time_limit_ms` bounds
/// the run. `out_metrics` may be null.
///
/// # Safety
/// `proof` must be a valid handle; `plan` a NUL-terminated string;
/// `out_metrics` null or writable.
#[no_mangle]
pub unsafe extern "C" fn pk_proof_compress(
    proof: *mut PkProof,
    plan: *const c_char,
    loops: u32,
    travs: u32,
    time_limit_ms: u64,
    out_metrics: *mut PkMetrics,
) -> PkStatus {
    guarded(|| {
        let Some(proof) = proof.as_mut() else {
            return fail(PkStatus::PkErrNullArgument, "null proof handle");
        };
        let plan = match utf8_in(plan) {
            Ok(t) => t,
            Err(status) => return status,
        };
        if loops == 0 {
            return fail(PkStatus::PkErrParse, "loops must be at least 1");
        }
        let plan =
            match PipelinePlan::parse(plan, travs, loops, Duration::from_millis(time_limit_ms)) {
                Ok(plan) => plan,
                Err(e) => return fail(PkStatus::PkErrParse, e.to_string()),
            };
        let metrics = run_pipeline(&mut proof.inner, &plan, &CompressionStrategy);
        if !out_metrics.is_null() {
            *out_metrics = metrics.into();
        }
        ok()
    })
}

/// Derives a Craig interpolant for two DIMACS CNF partitions, writing its
/// prefix text (`and(or(1,-2),3)`) to `out_formula`. `verify` additionally
/// checks the contract with the truth-table oracle (≤ 24 variables).
///
/// # Safety
/// `a_dimacs` and `b_dimacs` must be NUL-terminated strings; `out_formula`
/// must point at writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn pk_interpolate(
    a_dimacs: *const c_char,
    b_dimacs: *const c_char,
    algo: PkAlgo,
    reorder: PkReorder,
    verify: bool,
    seed: u64,
    out_formula: *mut *mut c_char,
) -> PkStatus {
    guarded(|| {
        if out_formula.is_null() {
            return fail(PkStatus::PkErrNullArgument, "null output argument");
        }
        let (a_text, b_text) = match (utf8_in(a_dimacs), utf8_in(b_dimacs)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let parse = |text: &str| {
            parse_dimacs(text)
                .map(|(cnf, _)| cnf)
                .map_err(|e| fail(PkStatus::PkErrParse, e.to_string()))
        };
        let a = match parse(a_text) {
            Ok(cnf) => cnf,
            Err(status) => return status,
        };
        let b = match parse(b_text) {
            Ok(cnf) => cnf,
            Err(status) => return status,
        };
        let mut combined = a.clone();
        for clause in b.iter() {
            combined.push(clause.clone());
        }
        let mut proof = match solve_to_proof(&combined, seed) {
            Ok(proof) => proof,
            Err(status) => return status,
        };
        let labeling = label_variables(&a, &b);
        match reorder {
            PkReorder::PkReorderNone => {}
            PkReorder::PkReorderCnf => pivot_reordering(&mut proof, &labeling.light_for_cnf()),
            PkReorder::PkReorderDnf => pivot_reordering(&mut proof, &labeling.light_for_dnf()),
        }
        let interpolant = match algo {
            PkAlgo::PkAlgoMcmillan => itp_mcmillan(&proof, &labeling),
            PkAlgo::PkAlgoMcmillanPrime => itp_mcmillan_prime(&proof, &labeling),
        };
        let interpolant = match interpolant {
            Ok(i) => i,
            Err(e) => return fail(PkStatus::PkErrContract, e.to_string()),
        };
        if verify {
            match verify_interpolant(&a, &b, &interpolant) {
                Ok(true) => {}
                Ok(false) => {
                    return fail(
                        PkStatus::PkErrVerification,
                        format!("not an interpolant: {interpolant}"),
                    )
                }
                Err(e) => return fail(PkStatus::PkErrResourceLimit, e.to_string()),
            }
        }
        string_out(out_formula, interpolant.to_string())
    })
}
