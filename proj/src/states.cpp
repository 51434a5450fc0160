#include "imaginarity/states.hpp"

#include <cmath>
#include <numbers>

namespace imaginarity {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Householder reflection with H x = e0 for a real unit vector x.
RealMatrix householder_to_e0(const RealVector& x) {
  const Index d = x.size();
  RealVector v = x;
  v(0) -= 1.0;
  const double norm2 = v.squaredNorm();
  if (norm2 < 1e-24) return RealMatrix::Identity(d, d);
  return RealMatrix::Identity(d, d) - (2.0 / norm2) * (v * v.transpose());
}

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

}  // namespace

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, const Tolerance& tol)
    : mat_(std::move(mat)) {
  tol.validate();
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw Error(ErrorCode::not_density, "density matrix must be square");
  }
  if (!all_finite(mat_)) {
    throw Error(ErrorCode::not_density, "density matrix has non-finite entries");
  }
  if (!is_hermitian(mat_, tol)) {
    throw Error(ErrorCode::not_density, "density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > tol.atol) {
    throw Error(ErrorCode::not_density, "density matrix trace is not 1");
  }
  if (!is_psd(mat_, tol)) {
    throw Error(ErrorCode::not_density,
                "density matrix is not positive semidefinite");
  }
}

PureState::PureState(ComplexVector amplitudes, const Tolerance& tol)
    : amps_(std::move(amplitudes)) {
  tol.validate();
  if (amps_.size() < 1) {
    throw Error(ErrorCode::invalid_argument, "pure state must be nonempty");
  }
  if (!all_finite(amps_)) {
    throw Error(ErrorCode::invalid_argument,
                "pure state has non-finite amplitudes");
  }
  if (std::abs(amps_.norm() - 1.0) > tol.atol) {
    throw Error(ErrorCode::invalid_argument, "pure state is not normalized");
  }
}

DensityMatrix PureState::density(const Tolerance& tol) const {
  return DensityMatrix(amps_ * amps_.adjoint(), tol);
}

bool is_free_state(const DensityMatrix& rho, const Tolerance& tol) {
  return max_abs_imag(rho.mat()) <= tol.atol;
}

std::pair<ComplexMatrix, ComplexMatrix> split_real_imag(
    const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat();
  ComplexMatrix rho_r = ((m + m.transpose()) / 2.0).real().cast<Complex>();
  ComplexMatrix rho_i =
      ((m - m.transpose()) / Complex(0.0, 2.0)).real().cast<Complex>();
  return {rho_r, rho_i};
}

BlochVector bloch_of_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::invalid_argument, "bloch_of_qubit: dim must be 2");
  }
  const ComplexMatrix& m = rho.mat();
  return BlochVector{(m * pauli_x()).trace().real(),
                     (m * pauli_y()).trace().real(),
                     (m * pauli_z()).trace().real()};
}

DensityMatrix qubit_of_bloch(const BlochVector& r, const Tolerance& tol) {
  tol.validate();
  const double norm2 = r.x * r.x + r.y * r.y + r.z * r.z;
  if (norm2 > 1.0 + tol.atol) {
    throw Error(ErrorCode::invalid_argument,
                "qubit_of_bloch: vector lies outside the Bloch ball");
  }
  ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) + r.x * pauli_x() +
                           r.y * pauli_y() + r.z * pauli_z());
  return DensityMatrix(m, tol);
}

PureDecomposition decompose_pure(const PureState& psi, const Tolerance& tol) {
  tol.validate();
  const Index d = psi.dim();
  // Fix the global phase so that the largest-magnitude amplitude is real
  // positive; a and b below depend on this choice.
  Index imax = 0;
  psi.amps().cwiseAbs().maxCoeff(&imax);
  const Complex pivot = psi.amps()(imax);
  const ComplexVector fixed = psi.amps() * (std::conj(pivot) / std::abs(pivot));

  PureDecomposition out;
  RealVector re = fixed.real();
  RealVector im = fixed.imag();
  out.a = re.norm();
  out.b = im.norm();
  if (out.a > tol.atol) {
    out.psi_r = re / out.a;
  } else {
    out.psi_r = RealVector::Unit(d, 0);
  }
  if (out.b > tol.atol) {
    out.psi_i = im / out.b;
  } else {
    out.psi_i = RealVector::Unit(d, d > 1 ? 1 : 0);
  }
  return out;
}

HalfDiagonalForm half_diagonal_form(const DensityMatrix& rho,
                                    const Tolerance& tol) {
  tol.validate();
  if (rho.dim() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "half_diagonal_form: dim must be 2");
  }
  const double a = rho.mat()(0, 0).real();
  const double cc = 2.0 * rho.mat()(0, 1).real();  // c + conj(c)
  // Zero-diagonal condition for O = [[cos,sin],[-sin,cos]]:
  // (2a-1) cos(2 alpha) + (c + conj c) sin(2 alpha) = 0.
  const double alpha = 0.5 * std::atan2(-(2.0 * a - 1.0), cc);
  RealMatrix o(2, 2);
  o << std::cos(alpha), std::sin(alpha), -std::sin(alpha), std::cos(alpha);

  auto off_diag = [&](const RealMatrix& q) {
    return (q.cast<Complex>() * rho.mat() * q.transpose().cast<Complex>())(1,
                                                                           0);
  };
  Complex w = off_diag(o);  // x + i y, signs not yet fixed

  // Enforce x, y >= 0 with free orthogonal flips: conjugating by the swap
  // flips y, by diag(1,-1) flips both, by their product flips x.
  RealMatrix swap(2, 2), zflip(2, 2);
  swap << 0, 1, 1, 0;
  zflip << 1, 0, 0, -1;
  if (w.real() < 0.0 && w.imag() < 0.0) {
    o = zflip * o;
  } else if (w.real() < 0.0) {
    o = (zflip * swap) * o;
  } else if (w.imag() < 0.0) {
    o = swap * o;
  }
  w = off_diag(o);

  HalfDiagonalForm out;
  out.x = std::max(w.real(), 0.0);
  out.y = std::max(w.imag(), 0.0);
  out.o = o;
  return out;
}

CanonicalForm canonical_pure_form(const PureState& psi, const Tolerance& tol) {
  tol.validate();
  const Index d = psi.dim();

  // Global phase removal, as in decompose_pure.
  Index imax = 0;
  psi.amps().cwiseAbs().maxCoeff(&imax);
  const double alpha = std::arg(psi.amps()(imax));
  const ComplexVector fixed = psi.amps() * std::exp(Complex(0.0, -alpha));

  if (d == 1) {
    CanonicalForm cf;
    cf.theta = 0.0;
    cf.phase = wrap_phase(-alpha);
    cf.u_free = ComplexMatrix::Constant(1, 1, std::exp(Complex(0.0, cf.phase)));
    return cf;
  }

  PureDecomposition dec = decompose_pure(psi, tol);

  // Rotate psi_R onto |0>, leaving a |0> + i b |phi> with |phi> real.
  RealMatrix o1 = householder_to_e0(dec.psi_r);
  RealVector phi_vec = o1 * dec.psi_i;

  // Split |phi> = cos(gamma)|0> + sin(gamma)|chi| and rotate chi onto |1>
  // inside the complement of |0>.
  RealVector tail = phi_vec;
  tail(0) = 0.0;
  const double sin_gamma = tail.norm();
  RealMatrix o2 = RealMatrix::Identity(d, d);
  if (sin_gamma > tol.atol) {
    RealVector chi_sub = tail.segment(1, d - 1) / sin_gamma;
    o2.block(1, 1, d - 1, d - 1) = householder_to_e0(chi_sub);
  }

  // The state now lives on coordinates {0,1}; canonicalize the qubit block.
  ComplexVector v = (o2 * o1).cast<Complex>() * fixed;
  ComplexMatrix qubit = v.segment(0, 2) * v.segment(0, 2).adjoint();
  qubit /= qubit.trace();
  HalfDiagonalForm hd =
      half_diagonal_form(DensityMatrix(qubit, Tolerance{1e-6, 1e-6}), tol);

  CanonicalForm cf;
  cf.theta = std::atan2(hd.y, hd.x);

  RealMatrix q = RealMatrix::Identity(d, d);
  q.block(0, 0, 2, 2) = hd.o;
  q = q * o2 * o1;

  // Residual phase of q * fixed against |theta>, folded into u_free so that
  // u_free * psi equals |theta> exactly.
  ComplexVector canonical = ComplexVector::Zero(d);
  canonical(0) = Complex(1.0 / std::numbers::sqrt2, 0.0);
  canonical(1) = std::exp(Complex(0.0, cf.theta)) / std::numbers::sqrt2;
  const Complex overlap = canonical.adjoint() * (q.cast<Complex>() * fixed);
  const double beta = std::arg(overlap);

  cf.phase = wrap_phase(-(alpha + beta));
  cf.u_free = std::exp(Complex(0.0, cf.phase)) * q.cast<Complex>();
  return cf;
}

PureState maximally_imaginary(Index d) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_argument,
                "maximally_imaginary: dimension must be at least 2");
  }
  ComplexVector amps = ComplexVector::Zero(d);
  amps(0) = Complex(1.0 / std::numbers::sqrt2, 0.0);
  amps(1) = Complex(0.0, 1.0 / std::numbers::sqrt2);
  return PureState(amps);
}

}  // namespace imaginarity
