#include "imaginarity/core.hpp"

#include <cmath>

namespace imaginarity {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::invalid_argument,
                std::string(who) + ": matrix must be square");
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_imag(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& m, const Tolerance& tol) {
  tol.validate();
  require_square(m, "is_hermitian");
  return max_abs(m - m.adjoint()) <= tol.atol;
}

bool is_symmetric(const ComplexMatrix& m, const Tolerance& tol) {
  tol.validate();
  require_square(m, "is_symmetric");
  return max_abs(m - m.transpose()) <= tol.atol;
}

bool is_psd(const ComplexMatrix& m, const Tolerance& tol) {
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorCode::invalid_argument, "is_psd: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol.eig_floor;
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (std::max(m.rows(), m.cols()) <= 32) {
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues().sum();
  }
  return Eigen::BDCSVD<ComplexMatrix>(m).singularValues().sum();
}

ComplexMatrix partial_transpose_a(const ComplexMatrix& m, Index dim_a,
                                  Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::invalid_argument,
                "partial_transpose_a: dimension mismatch");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (Index j = 0; j < dim_a; ++j) {
    for (Index k = 0; k < dim_a; ++k) {
      out.block(j * dim_b, k * dim_b, dim_b, dim_b) =
          m.block(k * dim_b, j * dim_b, dim_b, dim_b);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  Index n = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      v(n++) = m(i, j);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::invalid_argument, "unvec: length mismatch");
  }
  ComplexMatrix m(rows, cols);
  Index n = 0;
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = v(n++);
    }
  }
  return m;
}

HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerance& tol) {
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorCode::invalid_argument,
                "hermitian_eig: input is not Hermitian");
  }
  HermitianEig result;
  if (max_abs_imag(m) <= tol.atol) {
    // Real symmetric path: eigenvectors are exactly real, including inside
    // degenerate eigenspaces.
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m.real());
    result.values = solver.eigenvalues();
    result.vectors = solver.eigenvectors().cast<Complex>();
    return result;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  result.values = solver.eigenvalues();
  result.vectors = solver.eigenvectors();
  // Deterministic phase: largest-magnitude entry real positive.
  for (Index k = 0; k < result.vectors.cols(); ++k) {
    Index imax = 0;
    result.vectors.col(k).cwiseAbs().maxCoeff(&imax);
    const Complex pivot = result.vectors(imax, k);
    if (std::abs(pivot) > 0.0) {
      result.vectors.col(k) *= std::conj(pivot) / std::abs(pivot);
    }
  }
  return result;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerance& tol) {
  HermitianEig eig = hermitian_eig(m, tol);
  RealVector roots(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -tol.eig_floor) {
      throw Error(ErrorCode::invalid_argument, "psd_sqrt: input is not PSD");
    }
    roots(k) = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, const Tolerance& tol) {
  HermitianEig eig = hermitian_eig(m, tol);
  RealVector roots(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda <= tol.eig_floor) {
      throw Error(ErrorCode::numeric,
                  "psd_inv_sqrt: matrix is numerically singular");
    }
    roots(k) = 1.0 / std::sqrt(lambda);
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace imaginarity
