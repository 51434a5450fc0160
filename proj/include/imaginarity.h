/*
 * C API for the imaginarity resource-theory library.
 *
 * Matrices are opaque handles created from interleaved binary64 data
 * (re, im pairs, row-major).  Every function returns an img_status; outputs
 * are written through pointer arguments and matrix outputs must be released
 * with img_matrix_free.  img_last_error() returns a thread-local detail
 * message for the most recent failure.
 *
 * Conventions (shared with the file formats and the CLI):
 *   - composite index (a, b) on A (x) B sits at a*dimB + b (B fastest);
 *   - Choi matrices are ordered output (x) input and unnormalized
 *     (trace = dim_in); channel action is E(rho) = Tr_in[J (I (x) rho^T)];
 *   - vec stacks rows, so J = sum_k vec(K_k) vec(K_k)^dagger.
 */

#ifndef IMAGINARITY_H
#define IMAGINARITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IMG_API __declspec(dllexport)
#else
#define IMG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct img_matrix img_matrix;

typedef enum img_status {
  IMG_OK = 0,
  IMG_ERR_INVALID_ARGUMENT = 1,
  IMG_ERR_NOT_DENSITY = 2,
  IMG_ERR_NOT_CPTP = 3,
  IMG_ERR_NOT_UNITARY = 4,
  IMG_ERR_INFEASIBLE = 5,
  IMG_ERR_NUMERIC = 6
} img_status;

typedef struct img_tolerance {
  double atol;      /* entrywise absolute tolerance */
  double eig_floor; /* eigenvalue negativity allowance */
} img_tolerance;

IMG_API const char* img_version(void);
IMG_API const char* img_status_string(img_status status);
IMG_API const char* img_last_error(void);
IMG_API img_tolerance img_tolerance_default(void);

/* ---- matrices ---------------------------------------------------------- */

/* data: 2*rows*cols doubles, interleaved re/im, row-major; may be NULL for a
 * zero matrix. */
IMG_API img_status img_matrix_create(size_t rows, size_t cols,
                                     const double* data, img_matrix** out);
IMG_API void img_matrix_free(img_matrix* m);
IMG_API size_t img_matrix_rows(const img_matrix* m);
IMG_API size_t img_matrix_cols(const img_matrix* m);
/* out must hold 2*rows*cols doubles. */
IMG_API img_status img_matrix_data(const img_matrix* m, double* out);

/* ---- core linear algebra ----------------------------------------------- */

IMG_API img_status img_is_hermitian(const img_matrix* m,
                                    const img_tolerance* tol, int* out);
IMG_API img_status img_is_symmetric(const img_matrix* m,
                                    const img_tolerance* tol, int* out);
IMG_API img_status img_is_psd(const img_matrix* m, const img_tolerance* tol,
                              int* out);
IMG_API img_status img_trace_norm(const img_matrix* m, double* out);
IMG_API img_status img_partial_transpose_a(const img_matrix* m, size_t dim_a,
                                           size_t dim_b, img_matrix** out);

/* ---- states ------------------------------------------------------------ */

IMG_API img_status img_is_free_state(const img_matrix* rho,
                                     const img_tolerance* tol, int* out);
IMG_API img_status img_split_real_imag(const img_matrix* rho,
                                       img_matrix** rho_r, img_matrix** rho_i);
IMG_API img_status img_bloch_of_qubit(const img_matrix* rho, double xyz[3]);
IMG_API img_status img_qubit_of_bloch(const double xyz[3], img_matrix** rho);
IMG_API img_status img_maximally_imaginary(size_t dim, img_matrix** psi);

/* |psi><psi| from a dim x 1 unit vector. */
IMG_API img_status img_pure_density(const img_matrix* psi, img_matrix** rho);

/* psi is a dim x 1 unit vector.  On success *theta is in [0, pi/2], *phase in
 * [0, 2pi), and *u_free (optional) satisfies u_free psi = |theta>. */
IMG_API img_status img_canonical_pure_form(const img_matrix* psi,
                                           const img_tolerance* tol,
                                           double* theta, double* phase,
                                           img_matrix** u_free);
IMG_API img_status img_half_diagonal_form(const img_matrix* rho,
                                          const img_tolerance* tol, double* x,
                                          double* y, img_matrix** o);

/* ---- measures ---------------------------------------------------------- */

IMG_API img_status img_measure(const img_matrix* rho, double* value);
IMG_API img_status img_measure_qubit(const img_matrix* rho, double* value);
IMG_API img_status img_robustness(const img_matrix* rho,
                                  const img_tolerance* tol, double* value,
                                  int* iterations);

/* ---- channels (Choi matrices with explicit dims) ------------------------ */

IMG_API img_status img_channel_validate(const img_matrix* choi, size_t dim_out,
                                        size_t dim_in,
                                        const img_tolerance* tol);
IMG_API img_status img_channel_apply(const img_matrix* choi, size_t dim_out,
                                     size_t dim_in, const img_matrix* rho,
                                     img_matrix** out);
IMG_API img_status img_is_rng(const img_matrix* choi, size_t dim_out,
                              size_t dim_in, const img_tolerance* tol,
                              int* out);
IMG_API img_status img_is_completely_rng(const img_matrix* choi,
                                         size_t dim_out, size_t dim_in,
                                         const img_tolerance* tol, int* out);
IMG_API img_status img_is_transposition_covariant(const img_matrix* choi,
                                                  size_t dim_out,
                                                  size_t dim_in,
                                                  const img_tolerance* tol,
                                                  int* out);
IMG_API img_status img_rng_oracle(const img_matrix* choi, size_t dim_out,
                                  size_t dim_in, const img_tolerance* tol,
                                  int* out);

/* *is_free is 1 when u = e^{i theta} Q with Q real orthogonal; theta and q
 * (both optional) receive the factorization. */
IMG_API img_status img_is_free_unitary(const img_matrix* u,
                                       const img_tolerance* tol, int* is_free,
                                       double* theta, img_matrix** q);

/* Kraus lists are arrays of matrix handles; release with img_kraus_free. */
IMG_API img_status img_kraus_from_choi(const img_matrix* choi, size_t dim_out,
                                       size_t dim_in, const img_tolerance* tol,
                                       img_matrix*** ops, size_t* count);
IMG_API void img_kraus_free(img_matrix** ops, size_t count);
IMG_API img_status img_choi_from_kraus(const img_matrix* const* ops,
                                       size_t count, const img_tolerance* tol,
                                       img_matrix** choi);
IMG_API img_status img_dilation_from_kraus(const img_matrix* const* ops,
                                           size_t count,
                                           const img_tolerance* tol,
                                           img_matrix** u_ae, size_t* env_dim);

IMG_API img_status img_sample_channel(size_t dim, uint64_t seed,
                                      img_matrix** choi);
IMG_API img_status img_sample_real_choi_channel(size_t dim, uint64_t seed,
                                                img_matrix** choi);

/* ---- transformations ---------------------------------------------------- */

IMG_API img_status img_transform_exists(const img_matrix* psi,
                                        const img_matrix* phi, int* out);
/* t_mat is row-major 3x3. */
IMG_API img_status img_pure_conversion_affine(double theta, double theta_prime,
                                              double t_mat[9], double t_vec[3]);
IMG_API img_status img_bloch_affine_to_choi(const double t_mat[9],
                                            const double t_vec[3],
                                            img_matrix** choi);
/* On success *choi is the d x d total channel (d = max(dim psi, dim phi, 2))
 * and *fidelity the achieved target overlap. */
IMG_API img_status img_synthesize(const img_matrix* psi, const img_matrix* phi,
                                  img_matrix** choi, double* fidelity);
IMG_API img_status img_synthesize_to_mixed(const img_matrix* psi,
                                           const img_matrix* const* phis,
                                           const double* probs, size_t count,
                                           img_matrix** choi);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IMAGINARITY_H */
