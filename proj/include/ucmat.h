/* ucmat: unit-consistent generalized inverses and unit-invariant
 * matrix decompositions, exposed as a C shared-library API.
 *
 * All matrices are opaque handles to dense row-major double matrices.
 * Functions return UC_OK on success; on failure they return an error code
 * and leave a human-readable message retrievable with uc_last_error()
 * (thread local). Output handles are only written on success and must be
 * released with uc_matrix_free(); strings with uc_string_free().
 */
#ifndef UCMAT_H
#define UCMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct uc_matrix uc_matrix;

typedef enum uc_status {
  UC_OK = 0,
  UC_ERROR_INVALID_ARGUMENT = 1,
  UC_ERROR_PARSE = 2,
  UC_ERROR_IO = 3,
  UC_ERROR_NO_CONVERGENCE = 4,
  UC_ERROR_INTERNAL = 5
} uc_status;

const char* uc_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* uc_last_error(void);

/* ---- lifecycle and access ------------------------------------------- */

uc_status uc_matrix_create(size_t rows, size_t cols, const double* row_major,
                           uc_matrix** out);
void uc_matrix_free(uc_matrix* m);

size_t uc_matrix_rows(const uc_matrix* m);
size_t uc_matrix_cols(const uc_matrix* m);
uc_status uc_matrix_get(const uc_matrix* m, size_t i, size_t j, double* out);

/* Copies all rows*cols entries, row major. `len` is the buffer capacity in
 * elements and must be at least rows*cols. */
uc_status uc_matrix_copy_data(const uc_matrix* m, double* buffer, size_t len);

/* ---- comma-delimited matrix text ------------------------------------ */

uc_status uc_matrix_read_csv(const char* path, uc_matrix** out);
uc_status uc_matrix_write_csv(const uc_matrix* m, const char* path);
uc_status uc_matrix_to_csv(const uc_matrix* m, char** text);
void uc_string_free(char* text);

/* ---- inverses; pass tol < 0 for the default rank cutoff -------------- */

uc_status uc_pinv(const uc_matrix* a, double tol, uc_matrix** out);
uc_status uc_linv(const uc_matrix* a, double tol, uc_matrix** out);
uc_status uc_rinv(const uc_matrix* a, double tol, uc_matrix** out);
uc_status uc_uinv(const uc_matrix* a, double tol, uc_matrix** out);

/* Mixed inverse: the leading `split` variables are treated as carrying
 * incommensurate units, the rest as a common Euclidean block. */
uc_status uc_block_inverse(const uc_matrix* a, size_t split, double tol,
                           uc_matrix** out);

/* ---- diagonal balancing ---------------------------------------------- */

/* left and right come back as 1-row matrices. If the iteration hits
 * max_sweeps, *converged is 0, *residual holds the last mean absolute log
 * adjustment, and the partially balanced factors are still returned.
 * Pass tol <= 0 and/or max_sweeps <= 0 for the defaults (1e-15, 1000).
 * Any output pointer may be NULL if that factor is not wanted. */
uc_status uc_dscale(const uc_matrix* a, double tol, int max_sweeps,
                    uc_matrix** left, uc_matrix** scaled, uc_matrix** right,
                    int* converged, int* iterations, double* residual);

/* ---- unit-invariant decompositions ----------------------------------- */

/* Unit-invariant singular values as a 1-row matrix. */
uc_status uc_ui_singular_values(const uc_matrix* a, uc_matrix** out);

/* Five-factor decomposition a = diag(d) u diag(s) v^T diag(e); d, s, e are
 * returned as 1-row matrices. Any output pointer may be NULL. */
uc_status uc_ui_svd(const uc_matrix* a, uc_matrix** d, uc_matrix** u,
                    uc_matrix** s, uc_matrix** v, uc_matrix** e);

/* Scale-invariant eigenvalues of a square matrix as an n x 2 matrix of
 * (real, imag) rows, sorted by descending real then imaginary part. */
uc_status uc_si_eigenvalues(const uc_matrix* a, uc_matrix** out);

/* Unit-norm signature of the k leading singular values (plain or
 * unit-invariant), zero padded, as a 1-row matrix. */
uc_status uc_nsv_signature(const uc_matrix* a, size_t k, uc_matrix** out);
uc_status uc_unsv_signature(const uc_matrix* a, size_t k, uc_matrix** out);

/* Angular distance in [0, 1] between the k-term signatures of two
 * matrices; kind is "nsv" or "unsv". */
uc_status uc_signature_distance(const uc_matrix* a, const uc_matrix* b,
                                size_t k, const char* kind, double* out);

/* a (hadamard) uinv(a)^T */
uc_status uc_hadamard_signature(const uc_matrix* a, double tol,
                                uc_matrix** out);

/* ---- experiment harnesses -------------------------------------------- */

/* Compares per-sample prediction errors of the right unit-consistent fit
 * against the least-squares fit on random polynomial data. `norm` is "l1",
 * "l2" or "linf". The report is delimited text with a
 * "n,fraction,trials,norm,m" header. */
uc_status uc_fit_experiment(size_t m, const size_t* n_values, size_t n_count,
                            int trials, const char* norm, uint64_t seed,
                            char** report);

/* Multiplicative-noise robustness of plain vs unit-invariant signatures on
 * synthetic images. */
uc_status uc_signature_experiment(size_t rows, size_t cols, size_t k,
                                  double scale_spread, int quantize,
                                  int trials, uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* UCMAT_H */
