#ifndef IMAGINARITY_STATES_HPP
#define IMAGINARITY_STATES_HPP

#include <utility>

#include "imaginarity/core.hpp"
#include "imaginarity/types.hpp"

namespace imaginarity {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// PSD, unit-trace Hermitian matrix.  Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat, const Tolerance& tol = {});

  const ComplexMatrix& mat() const { return mat_; }
  Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

// Unit-norm amplitude vector.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes, const Tolerance& tol = {});

  const ComplexVector& amps() const { return amps_; }
  Index dim() const { return amps_.size(); }
  DensityMatrix density(const Tolerance& tol = {}) const;

 private:
  ComplexVector amps_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Result of canonicalizing a pure state: u_free = e^{i phase} Q maps the
// source state exactly onto |theta> = (|0> + e^{i theta}|1>)/sqrt(2), padded
// with zeros.
struct CanonicalForm {
  double theta = 0.0;    // in [0, pi/2]
  ComplexMatrix u_free;  // free unitary, e^{i phase} times real orthogonal
  double phase = 0.0;    // in [0, 2pi)
};

// |psi> = a|psi_R> + i b|psi_I> with a, b >= 0 and real unit vectors,
// after the global phase of the largest-magnitude amplitude is removed.
struct PureDecomposition {
  double a = 0.0;
  double b = 0.0;
  RealVector psi_r;
  RealVector psi_i;
};

// O rho O^T = [[1/2, x - i y], [x + i y, 1/2]] with x, y >= 0.
struct HalfDiagonalForm {
  double x = 0.0;
  double y = 0.0;
  RealMatrix o;  // real orthogonal 2x2
};

// All entries real within atol (equivalently, rho symmetric).
bool is_free_state(const DensityMatrix& rho, const Tolerance& tol = {});

// rho = rho_R + i rho_I with rho_R = (rho + rho^T)/2 real symmetric and
// rho_I = (rho - rho^T)/(2i) real antisymmetric.  Both returned real-valued.
std::pair<ComplexMatrix, ComplexMatrix> split_real_imag(
    const DensityMatrix& rho);

BlochVector bloch_of_qubit(const DensityMatrix& rho);
DensityMatrix qubit_of_bloch(const BlochVector& r, const Tolerance& tol = {});

PureDecomposition decompose_pure(const PureState& psi,
                                 const Tolerance& tol = {});

CanonicalForm canonical_pure_form(const PureState& psi,
                                  const Tolerance& tol = {});

HalfDiagonalForm half_diagonal_form(const DensityMatrix& rho,
                                    const Tolerance& tol = {});

// (|0> + i|1>)/sqrt(2) zero-padded to dimension d (d >= 2).
PureState maximally_imaginary(Index d);

}  // namespace imaginarity

#endif  // IMAGINARITY_STATES_HPP
