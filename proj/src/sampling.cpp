#include "imaginarity/sampling.hpp"

#include <cmath>
#include <random>

namespace imaginarity {

namespace {

RealMatrix real_ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RealMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      g(i, j) = gauss(rng);
    }
  }
  return g;
}

ComplexMatrix complex_ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Channel normalize_to_channel(ComplexMatrix j, Index dim) {
  const Tolerance tol;
  constexpr int kMaxIterations = 200;
  constexpr double kConverged = 1e-12;
  const Index side = dim * dim;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    ComplexMatrix marginal = ComplexMatrix::Zero(dim, dim);
    for (Index a = 0; a < dim; ++a) {
      marginal += j.block(a * dim, a * dim, dim, dim);
    }
    if (max_abs(marginal - ComplexMatrix::Identity(dim, dim)) <= kConverged) {
      return Channel::from_choi(std::move(j), dim, dim, tol);
    }
    const ComplexMatrix w = psd_inv_sqrt(marginal, tol);
    ComplexMatrix sandwich = ComplexMatrix::Zero(side, side);
    for (Index a = 0; a < dim; ++a) {
      for (Index b = 0; b < dim; ++b) {
        sandwich.block(a * dim, b * dim, dim, dim) =
            w * j.block(a * dim, b * dim, dim, dim) * w;
      }
    }
    j = std::move(sandwich);
  }
  throw Error(ErrorCode::numeric,
              "channel sampler: trace normalization did not converge");
}

}  // namespace

Channel sample_channel(Index dim, std::uint64_t seed) {
  if (dim < 2) {
    throw Error(ErrorCode::invalid_argument, "sample_channel: dim must be >= 2");
  }
  std::mt19937_64 rng(seed);
  const Index side = dim * dim;
  const ComplexMatrix g = complex_ginibre(side, side, rng);
  return normalize_to_channel(g * g.adjoint(), dim);
}

Channel sample_real_choi_channel(Index dim, std::uint64_t seed) {
  if (dim < 2) {
    throw Error(ErrorCode::invalid_argument,
                "sample_real_choi_channel: dim must be >= 2");
  }
  std::mt19937_64 rng(seed);
  const Index side = dim * dim;
  const RealMatrix g = real_ginibre(side, side, rng);
  // M is real symmetric here, so its inverse square root is real and the
  // sandwich never leaves the real matrices.
  return normalize_to_channel((g * g.transpose()).cast<Complex>(), dim);
}

PureState sample_pure_state(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexVector v = complex_ginibre(dim, 1, rng).col(0);
  return PureState(v / v.norm());
}

DensityMatrix sample_density_matrix(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = complex_ginibre(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho));
}

DensityMatrix sample_real_density_matrix(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RealMatrix g = real_ginibre(dim, dim, rng);
  RealMatrix rho = g * g.transpose();
  rho /= rho.trace();
  return DensityMatrix(rho.cast<Complex>());
}

ComplexMatrix sample_haar_unitary(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = complex_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the R-diagonal phases for Haar distribution.
  for (Index k = 0; k < dim; ++k) {
    const Complex rkk = r(k, k);
    if (std::abs(rkk) > 0.0) q.col(k) *= rkk / std::abs(rkk);
  }
  return q;
}

RealMatrix sample_real_orthogonal(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RealMatrix g = real_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    if (r(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  return q;
}

}  // namespace imaginarity
