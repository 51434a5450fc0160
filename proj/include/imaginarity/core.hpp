#ifndef IMAGINARITY_CORE_HPP
#define IMAGINARITY_CORE_HPP

#include "imaginarity/types.hpp"

namespace imaginarity {

// ---------------------------------------------------------------------------
// Dense complex linear algebra kernels.
//
// Conventions used by every module and file format in this library:
//   * composite spaces are ordered A (x) B with the B index iterated first,
//     i.e. row (a, b) of a Kronecker product sits at a*dimB + b;
//   * vec() stacks rows: vec(|i><j|) = |i> (x) |j>.  With the output (x) input
//     Choi ordering this makes J = sum_k vec(K_k) vec(K_k)^dagger exact.
// ---------------------------------------------------------------------------

double max_abs(const ComplexMatrix& m);
double max_abs_imag(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

// max-abs entry of m - m^dagger <= atol.  Throws on non-square input.
bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol = {});

// max-abs entry of m - m^T <= atol.  Throws on non-square input.
bool is_symmetric(const ComplexMatrix& m, const Tolerance& tol = {});

// min eigenvalue >= -eig_floor.  Input must be Hermitian within atol.
bool is_psd(const ComplexMatrix& m, const Tolerance& tol = {});

// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

// Transpose on the A factor of a (dim_a*dim_b)-sided square matrix:
// output block (j,k) equals input block (k,j).  An involution.
ComplexMatrix partial_transpose_a(const ComplexMatrix& m, Index dim_a,
                                  Index dim_b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Row-major vectorization and its inverse.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
// Real symmetric inputs (within atol) are solved over the reals, so their
// eigenvectors come out exactly real even in degenerate eigenspaces; complex
// inputs get each eigenvector's global phase rotated to make its
// largest-magnitude entry real positive.
struct HermitianEig {
  RealVector values;
  ComplexMatrix vectors;  // column k pairs with values[k]
};
HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerance& tol = {});

// Spectral square root of a PSD matrix (eigenvalues in [-eig_floor, 0) are
// clamped to zero; below that throws).
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerance& tol = {});

// Inverse square root of a positive definite matrix.
ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, const Tolerance& tol = {});

}  // namespace imaginarity

#endif  // IMAGINARITY_CORE_HPP
