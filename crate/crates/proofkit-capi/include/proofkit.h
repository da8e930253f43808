#ifndef PROOFKIT_H
#define PROOFKIT_H

/* Generated by cbindgen from proofkit-capi; edit the Rust source, then run `cargo test -p proofkit-capi -- --ignored regenerate`. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Interpolation system selector.
typedef enum PkAlgo {
  // McMillan's system.
  PK_ALGO_MCMILLAN = 0,
  // The dual system (McMillan').
  PK_ALGO_MCMILLAN_PRIME = 1,
} PkAlgo;

// Pivot-reordering target applied before interpolation.
typedef enum PkReorder {
  // Interpolate the proof as produced.
  PK_REORDER_NONE = 0,
  // Lift A-local pivots leafward (clausal interpolants under McMillan).
  PK_REORDER_CNF = 1,
  // Lift B-local pivots leafward (dual shape under McMillan').
  PK_REORDER_DNF = 2,
} PkReorder;

// Result of every fallible call in this interface.
typedef enum PkStatus {
  // The call succeeded.
  PK_OK = 0,
  // A required pointer argument was null.
  PK_ERR_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  PK_ERR_INVALID_UTF8 = 2,
  // Input text was rejected by a parser (DIMACS, TraceCheck, plan).
  PK_ERR_PARSE = 3,
  // The proof failed its legality check.
  PK_ERR_ILLEGAL_PROOF = 4,
  // The formula (or A ∧ B) is satisfiable, so no refutation exists.
  PK_ERR_SATISFIABLE = 5,
  // An interpolation precondition was violated (mixed variable present,
  // leaf in neither partition, unlabeled variable).
  PK_ERR_CONTRACT = 6,
  // The requested verification failed: the result is not an interpolant.
  PK_ERR_VERIFICATION = 7,
  // A resource limit was hit (solver conflict budget, oracle size).
  PK_ERR_RESOURCE_LIMIT = 8,
  // An internal invariant broke; the operation was abandoned safely.
  PK_ERR_INTERNAL = 9,
} PkStatus;

// A resolution proof. Opaque; create with [`pk_proof_parse`] or
// [`pk_proof_from_cnf`], destroy with [`pk_proof_free`].
typedef struct PkProof PkProof;

// Before/after sizes of a compression run.
typedef struct PkMetrics {
  size_t nodes_before;
  size_t nodes_after;
  size_t edges_before;
  size_t edges_after;
  size_t core_before;
  size_t core_after;
} PkMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message for the most recent failing call on this thread. Empty after
// a success; the pointer stays valid until the next call on this thread.
const char *pk_last_error(void);

// Releases a string obtained from any `char**` out-parameter here. Null is
// allowed.
//
// # Safety
// `text` must be null or a pointer previously returned through an
// out-parameter of this library, not yet freed.
void pk_string_free(char *text);

// Parses a TraceCheck proof. `validate` compares each stated clause with
// the recomputed resolvent during parsing.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must point at writable
// pointer storage.
enum PkStatus pk_proof_parse(const char *text, bool validate, struct PkProof **out);

// Solves a DIMACS CNF and returns its refutation, or
// [`PkStatus::PkErrSatisfiable`] when a model exists.
//
// # Safety
// As [`pk_proof_parse`].
enum PkStatus pk_proof_from_cnf(const char *dimacs, uint64_t seed, struct PkProof **out);

// Destroys a proof handle. Null is allowed.
//
// # Safety
// `proof` must be null or a handle from this library, not yet freed.
void pk_proof_free(struct PkProof *proof);

// Number of live nodes, or 0 for null.
//
// # Safety
// `proof` must be null or a valid handle.
size_t pk_proof_node_count(const struct PkProof *proof);

// Whether the proof ends in the empty clause. False for null.
//
// # Safety
// `proof` must be null or a valid handle.
bool pk_proof_is_refutation(const struct PkProof *proof);

// Checks legality; [`PkStatus::PkErrIllegalProof`] carries the violation
// count in the error text.
//
// # Safety
// `proof` must be a valid handle.
enum PkStatus pk_proof_check(const struct PkProof *proof);

// Serializes the proof as TraceCheck text.
//
// # Safety
// `proof` must be a valid handle; `out` must point at writable pointer
// storage.
enum PkStatus pk_proof_write(const struct PkProof *proof, char **out);

// Renders the proof as GraphViz DOT text.
//
// # Safety
// As [`pk_proof_write`].
enum PkStatus pk_proof_dot(const struct PkProof *proof, char **out);

// Runs a compression pipeline in place. `plan` is the comma-separated
// stage list (`pu`, `sh`, `rp`, `rpi`, `re`); `loops` ≥ 1 repeats it;
// `travs` is the traversal count per `re` stage; `time_limit_ms` bounds
// the run. `out_metrics` may be null.
//
// # Safety
// `proof` must be a valid handle; `plan` a NUL-terminated string;
// `out_metrics` null or writable.
enum PkStatus pk_proof_compress(struct PkProof *proof,
                                const char *plan,
                                uint32_t loops,
                                uint32_t travs,
                                uint64_t time_limit_ms,
                                struct PkMetrics *out_metrics);

// Derives a Craig interpolant for two DIMACS CNF partitions, writing its
// prefix text (`and(or(1,-2),3)`) to `out_formula`. `verify` additionally
// checks the contract with the truth-table oracle (≤ 24 variables).
//
// # Safety
// `a_dimacs` and `b_dimacs` must be NUL-terminated strings; `out_formula`
// must point at writable pointer storage.
enum PkStatus pk_interpolate(const char *a_dimacs,
                             const char *b_dimacs,
                             enum PkAlgo algo,
                             enum PkReorder reorder,
                             bool verify,
                             uint64_t seed,
                             char **out_formula);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PROOFKIT_H */
