#ifndef UNCOPY_H
#define UNCOPY_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum UncopyStatus {
  UNCOPY_STATUS_OK = 0,
  UNCOPY_STATUS_NULL_POINTER = 1,
  UNCOPY_STATUS_INVALID_ARGUMENT = 2,
  UNCOPY_STATUS_DIMENSION_MISMATCH = 3,
  UNCOPY_STATUS_NOT_NORMALIZED = 4,
  UNCOPY_STATUS_INFEASIBLE = 5,
  UNCOPY_STATUS_COMPLETION_FAILED = 6,
  UNCOPY_STATUS_UNKNOWN_SCENARIO = 7,
  UNCOPY_STATUS_INVALID_CONFIG = 8,
  UNCOPY_STATUS_PANIC = 9,
} UncopyStatus;

typedef enum UncopyCopyMode {
  UNCOPY_COPY_MODE_COPY = 0,
  UNCOPY_COPY_MODE_DELETE = 1,
} UncopyCopyMode;

/**
 * Opaque state vector.
 */
typedef struct UncopyKet UncopyKet;

/**
 * Opaque deleting machine: operator plus its defining ancilla states.
 */
typedef struct UncopyMachine UncopyMachine;

/**
 * Opaque dense square operator.
 */
typedef struct UncopyOperator UncopyOperator;

typedef struct UncopyMachineReport {
  bool feasible;
  double ancilla_overlap_re;
  double ancilla_overlap_im;
  double gram_residual;
  double constraint_residual;
  double unitarity_deviation;
  bool is_swap;
  double swap_deviation;
  double uncopy_residual;
} UncopyMachineReport;

/**
 * Scenario parameters; see [`uncopy_config_default`].
 */
typedef struct UncopyConfig {
  double alpha_re;
  double alpha_im;
  double beta_re;
  double beta_im;
  double tolerance;
  uint64_t seed;
  size_t trials;
  uint8_t sigma_index;
} UncopyConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or null. The
 * pointer stays valid until the next call into the library on this thread.
 */
const char *uncopy_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *uncopy_version(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer returned by this library and not yet freed.
 */
void uncopy_string_free(char *s);

/**
 * Creates a ket from `len` amplitudes over the factor dimensions `dims`.
 * `im` may be null for real amplitudes.
 *
 * # Safety
 * `re` (and `im` when non-null) must be valid for `len` reads, `dims` for
 * `ndims` reads, and `out` for one write.
 */
enum UncopyStatus uncopy_ket_new(const double *re,
                                 const double *im,
                                 size_t len,
                                 const size_t *dims,
                                 size_t ndims,
                                 struct UncopyKet **out);

/**
 * Computational basis vector `index` of the given shape.
 *
 * # Safety
 * `dims` must be valid for `ndims` reads and `out` for one write.
 */
enum UncopyStatus uncopy_ket_basis(const size_t *dims,
                                   size_t ndims,
                                   size_t index,
                                   struct UncopyKet **out);

/**
 * Seeded uniformly random unit vector of dimension `dim`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_ket_haar(size_t dim, uint64_t seed, struct UncopyKet **out);

/**
 * # Safety
 * `k` must be null or a handle from this library that has not been freed.
 */
void uncopy_ket_free(struct UncopyKet *k);

/**
 * Total dimension, or 0 for a null handle.
 *
 * # Safety
 * `k` must be null or a live handle.
 */
size_t uncopy_ket_dim(const struct UncopyKet *k);

/**
 * Euclidean norm, or NaN for a null handle.
 *
 * # Safety
 * `k` must be null or a live handle.
 */
double uncopy_ket_norm(const struct UncopyKet *k);

/**
 * Copies the amplitudes into `re`/`im`, each with room for `len` values;
 * `len` must equal the ket dimension.
 *
 * # Safety
 * `k` must be a live handle; `re` and `im` must be valid for `len` writes.
 */
enum UncopyStatus uncopy_ket_amplitudes(const struct UncopyKet *k,
                                        double *re,
                                        double *im,
                                        size_t len);

/**
 * `⟨a|b⟩`, conjugate-linear in `a`.
 *
 * # Safety
 * `a`, `b` must be live handles; `re`, `im` valid for one write each.
 */
enum UncopyStatus uncopy_ket_inner(const struct UncopyKet *a,
                                   const struct UncopyKet *b,
                                   double *re,
                                   double *im);

/**
 * Kronecker product of `count` kets in order.
 *
 * # Safety
 * `parts` must be valid for `count` reads of live handles; `out` for one write.
 */
enum UncopyStatus uncopy_ket_tensor(const struct UncopyKet *const *parts,
                                    size_t count,
                                    struct UncopyKet **out);

/**
 * # Safety
 * `k` must be a live handle; `out` valid for one write.
 */
enum UncopyStatus uncopy_ket_normalize(const struct UncopyKet *k, struct UncopyKet **out);

/**
 * `|⟨a|b⟩|²` for normalized kets.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` valid for one write.
 */
enum UncopyStatus uncopy_fidelity(const struct UncopyKet *a,
                                  const struct UncopyKet *b,
                                  double *out);

/**
 * Swap machine: exchanges the second copy with a one-qubit ancilla in `Σ`
 * (`sigma_index` 0 for H, 1 for V).
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_machine_swap(uint8_t sigma_index, struct UncopyMachine **out);

/**
 * Completed deleting machine with `A_H = (H+V)/√2`, `A_V = (H−V)/√2`, plus
 * `spectators` inert ancilla qubits.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_machine_counterexample(uint8_t sigma_index,
                                                size_t spectators,
                                                struct UncopyMachine **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that has not been freed.
 */
void uncopy_machine_free(struct UncopyMachine *m);

/**
 * # Safety
 * `m` must be a live handle; `report` valid for one write.
 */
enum UncopyStatus uncopy_machine_report(const struct UncopyMachine *m,
                                        struct UncopyMachineReport *report);

/**
 * Copy of the machine's operator as a new handle.
 *
 * # Safety
 * `m` must be a live handle; `out` valid for one write.
 */
enum UncopyStatus uncopy_machine_operator(const struct UncopyMachine *m,
                                          struct UncopyOperator **out);

/**
 * `‖U·ΨΨA − Ψ⊗Σ⊗(αA_H + βA_V)‖` for `Ψ = αH + βV`.
 *
 * # Safety
 * `m` must be a live handle; `residual` valid for one write.
 */
enum UncopyStatus uncopy_machine_verify_uncopy(const struct UncopyMachine *m,
                                               double alpha_re,
                                               double alpha_im,
                                               double beta_re,
                                               double beta_im,
                                               double *residual);

/**
 * Fidelity of plain C-NOT copying (`S0 → SS`) or deleting (`SS → S0`).
 *
 * # Safety
 * `fidelity` must be valid for one write.
 */
enum UncopyStatus uncopy_cnot_trial(double alpha_re,
                                    double alpha_im,
                                    double beta_re,
                                    double beta_im,
                                    enum UncopyCopyMode mode,
                                    double *fidelity);

/**
 * C-NOT conjugated by rotations for the known state `alpha|0⟩ + beta|1⟩`.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_mcnot_circuit(double alpha_re,
                                       double alpha_im,
                                       double beta_re,
                                       double beta_im,
                                       enum UncopyCopyMode mode,
                                       struct UncopyOperator **out);

/**
 * # Safety
 * `dims` must be valid for `ndims` reads and `out` for one write.
 */
enum UncopyStatus uncopy_operator_identity(const size_t *dims,
                                           size_t ndims,
                                           struct UncopyOperator **out);

/**
 * Row-major `n×n` matrix with `len = n²`; `im` may be null.
 *
 * # Safety
 * `re` (and non-null `im`) valid for `len` reads, `dims` for `ndims` reads,
 * `out` for one write.
 */
enum UncopyStatus uncopy_operator_from_matrix(const double *re,
                                              const double *im,
                                              size_t len,
                                              const size_t *dims,
                                              size_t ndims,
                                              struct UncopyOperator **out);

/**
 * Two-qubit C-NOT, first qubit controls.
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_operator_cnot(struct UncopyOperator **out);

/**
 * Permutation exchanging factors `i` and `j`.
 *
 * # Safety
 * `dims` must be valid for `ndims` reads and `out` for one write.
 */
enum UncopyStatus uncopy_operator_swap_factors(const size_t *dims,
                                               size_t ndims,
                                               size_t i,
                                               size_t j,
                                               struct UncopyOperator **out);

/**
 * Qubit rotation sending `alpha|0⟩ + beta|1⟩` to `|target⟩` (0 or 1).
 *
 * # Safety
 * `out` must be valid for one write.
 */
enum UncopyStatus uncopy_operator_rotation_to_basis(double alpha_re,
                                                    double alpha_im,
                                                    double beta_re,
                                                    double beta_im,
                                                    uint8_t target,
                                                    struct UncopyOperator **out);

/**
 * # Safety
 * `op` must be null or a handle from this library that has not been freed.
 */
void uncopy_operator_free(struct UncopyOperator *op);

/**
 * Side length, or 0 for a null handle.
 *
 * # Safety
 * `op` must be null or a live handle.
 */
size_t uncopy_operator_dim(const struct UncopyOperator *op);

/**
 * Copies the row-major entries; `len` must equal `dim²`.
 *
 * # Safety
 * `op` must be a live handle; `re`, `im` valid for `len` writes.
 */
enum UncopyStatus uncopy_operator_entries(const struct UncopyOperator *op,
                                          double *re,
                                          double *im,
                                          size_t len);

/**
 * # Safety
 * `op`, `x` must be live handles; `out` valid for one write.
 */
enum UncopyStatus uncopy_operator_apply(const struct UncopyOperator *op,
                                        const struct UncopyKet *x,
                                        struct UncopyKet **out);

/**
 * `a · b` (`b` acts first).
 *
 * # Safety
 * `a`, `b` must be live handles; `out` valid for one write.
 */
enum UncopyStatus uncopy_operator_compose(const struct UncopyOperator *a,
                                          const struct UncopyOperator *b,
                                          struct UncopyOperator **out);

/**
 * Writes whether `max|U†U − I| < tol` and the deviation itself.
 *
 * # Safety
 * `op` must be a live handle; `unitary`, `deviation` valid for one write each.
 */
enum UncopyStatus uncopy_operator_is_unitary(const struct UncopyOperator *op,
                                             double tol,
                                             bool *unitary,
                                             double *deviation);

/**
 * `alpha = beta = 1/√2`, tolerance 1e-10, seed 0, 100 trials, `Σ = H`.
 */
struct UncopyConfig uncopy_config_default(void);

/**
 * Runs one scenario and writes the JSON document (same schema as the CLI)
 * to `out_json`, to be released with `uncopy_string_free`. `passed` receives
 * the verdict.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `config` valid for one read;
 * `out_json` and `passed` valid for one write each.
 */
enum UncopyStatus uncopy_run_scenario_json(const char *name,
                                           const struct UncopyConfig *config,
                                           char **out_json,
                                           bool *passed);

/**
 * Runs all scenarios; `exit_code` receives 0 when all pass and 1 otherwise.
 *
 * # Safety
 * `config` valid for one read; `out_json` and `exit_code` valid for one write each.
 */
enum UncopyStatus uncopy_run_all_json(const struct UncopyConfig *config,
                                      char **out_json,
                                      int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNCOPY_H */
