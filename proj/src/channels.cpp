#include "imaginarity/channels.hpp"

#include <cmath>
#include <numbers>

namespace imaginarity {

namespace {

// Trace preservation is validated at 10x atol: eigensolver error accumulates
// faster than entrywise comparisons at d <= 16.
constexpr double kTpFactor = 10.0;

ComplexMatrix trace_out_a(const ComplexMatrix& j, Index dim_a, Index dim_b) {
  ComplexMatrix m = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index a = 0; a < dim_a; ++a) {
    m += j.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return m;
}

}  // namespace

Channel Channel::from_choi(ComplexMatrix choi, Index dim_out, Index dim_in,
                           const Tolerance& tol) {
  tol.validate();
  if (dim_out < 1 || dim_in < 1 || choi.rows() != dim_out * dim_in ||
      choi.cols() != dim_out * dim_in) {
    throw Error(ErrorCode::invalid_argument,
                "Channel: Choi matrix side must equal dim_out*dim_in");
  }
  if (!all_finite(choi)) {
    throw Error(ErrorCode::invalid_argument,
                "Channel: Choi matrix has non-finite entries");
  }
  if (!is_hermitian(choi, tol)) {
    throw Error(ErrorCode::not_cptp, "Channel: Choi matrix is not Hermitian");
  }
  if (!is_psd(choi, tol)) {
    throw Error(ErrorCode::not_cptp,
                "Channel: Choi matrix is not PSD (map is not CP)");
  }
  const ComplexMatrix marginal = trace_out_a(choi, dim_out, dim_in);
  const double tp_dev =
      max_abs(marginal - ComplexMatrix::Identity(dim_in, dim_in));
  if (tp_dev > kTpFactor * tol.atol) {
    throw Error(ErrorCode::not_cptp, "Channel: map is not trace preserving");
  }
  return Channel(std::move(choi), dim_out, dim_in);
}

Channel Channel::identity(Index dim) {
  ComplexMatrix j = ComplexMatrix::Zero(dim * dim, dim * dim);
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      j(a * dim + a, b * dim + b) = 1.0;
    }
  }
  return Channel(std::move(j), dim, dim);
}

Channel Channel::from_unitary(const ComplexMatrix& u, const Tolerance& tol) {
  tol.validate();
  if (u.rows() != u.cols()) {
    throw Error(ErrorCode::not_unitary, "from_unitary: matrix must be square");
  }
  const Index d = u.rows();
  if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > tol.atol) {
    throw Error(ErrorCode::not_unitary, "from_unitary: matrix is not unitary");
  }
  const ComplexVector v = vec(u);
  return Channel(v * v.adjoint(), d, d);
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators, const Tolerance& tol)
    : operators_(std::move(operators)) {
  tol.validate();
  if (operators_.empty()) {
    throw Error(ErrorCode::invalid_argument, "KrausSet: no operators");
  }
  const Index rows = operators_.front().rows();
  const Index cols = operators_.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
  for (const ComplexMatrix& k : operators_) {
    if (k.rows() != rows || k.cols() != cols || !all_finite(k)) {
      throw Error(ErrorCode::invalid_argument,
                  "KrausSet: inconsistent or non-finite operator");
    }
    sum += k.adjoint() * k;
  }
  if (max_abs(sum - ComplexMatrix::Identity(cols, cols)) >
      kTpFactor * tol.atol) {
    throw Error(ErrorCode::invalid_argument,
                "KrausSet: completeness sum K^dagger K = I fails");
  }
}

bool KrausSet::all_real(const Tolerance& tol) const {
  for (const ComplexMatrix& k : operators_) {
    if (max_abs_imag(k) > tol.atol) return false;
  }
  return true;
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho,
                    const Tolerance& tol) {
  tol.validate();
  if (rho.dim() != ch.dim_in()) {
    throw Error(ErrorCode::invalid_argument,
                "apply: state dimension does not match channel input");
  }
  const Index da = ch.dim_out();
  const Index db = ch.dim_in();
  const ComplexMatrix& j = ch.choi();
  const ComplexMatrix& r = rho.mat();
  // E(rho)_{mn} = sum_{jk} J[(m,j),(n,k)] rho_{jk}  (= Tr_B[J (I (x) rho^T)])
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (Index m = 0; m < da; ++m) {
    for (Index n = 0; n < da; ++n) {
      Complex acc(0.0, 0.0);
      for (Index jj = 0; jj < db; ++jj) {
        for (Index kk = 0; kk < db; ++kk) {
          acc += j(m * db + jj, n * db + kk) * r(jj, kk);
        }
      }
      out(m, n) = acc;
    }
  }
  // Output inherits the channel's TP slack; validate at a matching scale.
  return DensityMatrix(out, Tolerance{10.0 * tol.atol, 10.0 * tol.eig_floor});
}

Channel choi_from_kraus(const KrausSet& ks, const Tolerance& tol) {
  const Index da = ks.dim_out();
  const Index db = ks.dim_in();
  ComplexMatrix j = ComplexMatrix::Zero(da * db, da * db);
  for (const ComplexMatrix& k : ks.operators()) {
    const ComplexVector v = vec(k);
    j += v * v.adjoint();
  }
  return Channel::from_choi(std::move(j), da, db, tol);
}

KrausSet kraus_from_choi(const Channel& ch, const Tolerance& tol) {
  tol.validate();
  const HermitianEig eig = hermitian_eig(ch.choi(), tol);
  std::vector<ComplexMatrix> ops;
  for (Index k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values(k);
    if (lambda < -tol.eig_floor) {
      throw Error(ErrorCode::not_cptp, "kraus_from_choi: Choi is not PSD");
    }
    if (lambda <= tol.eig_floor) continue;
    ops.push_back(
        unvec(std::sqrt(lambda) * eig.vectors.col(k), ch.dim_out(),
              ch.dim_in()));
  }
  return KrausSet(std::move(ops), tol);
}

Dilation dilation_from_kraus(const KrausSet& ks, const Tolerance& tol) {
  tol.validate();
  if (!ks.all_real(tol)) {
    throw Error(ErrorCode::invalid_argument,
                "dilation_from_kraus: Kraus operators must be real");
  }
  if (ks.dim_out() != ks.dim_in()) {
    throw Error(ErrorCode::invalid_argument,
                "dilation_from_kraus: channel must be square");
  }
  const Index d = ks.dim_out();
  const Index n_env = ks.size();
  const Index side = d * n_env;

  // Columns (n, e=0) hold K_j(m, n) at row m*n_env + j; they are orthonormal
  // because sum K^T K = I.
  RealMatrix stacked(side, d);
  for (Index n = 0; n < d; ++n) {
    for (Index m = 0; m < d; ++m) {
      for (Index j = 0; j < n_env; ++j) {
        stacked(m * n_env + j, n) = ks.operators()[j](m, n).real();
      }
    }
  }

  RealMatrix u = RealMatrix::Zero(side, side);
  for (Index n = 0; n < d; ++n) {
    u.col(n * n_env) = stacked.col(n);
  }
  if (n_env > 1) {
    // Remaining columns: an orthonormal basis of the complement of the
    // stacked column space, from a full QR factorization.
    Eigen::HouseholderQR<RealMatrix> qr(stacked);
    RealMatrix full_q = qr.householderQ();
    Index next = 0;
    for (Index n = 0; n < d; ++n) {
      for (Index e = 1; e < n_env; ++e) {
        u.col(n * n_env + e) = full_q.col(d + next);
        ++next;
      }
    }
  }
  if (max_abs(ComplexMatrix(u.cast<Complex>().transpose() *
                            u.cast<Complex>()) -
              ComplexMatrix::Identity(side, side)) > kTpFactor * tol.atol) {
    throw Error(ErrorCode::numeric,
                "dilation_from_kraus: completed matrix is not orthogonal");
  }
  return Dilation{u.cast<Complex>(), n_env};
}

DensityMatrix apply_dilation(const Dilation& dil, const DensityMatrix& rho,
                             const Tolerance& tol) {
  tol.validate();
  const Index n_env = dil.env_dim;
  const Index side = dil.u_ae.rows();
  const Index d = side / n_env;
  if (side != d * n_env || rho.dim() != d) {
    throw Error(ErrorCode::invalid_argument,
                "apply_dilation: dimension mismatch");
  }
  ComplexMatrix joint = ComplexMatrix::Zero(side, side);
  for (Index m = 0; m < d; ++m) {
    for (Index n = 0; n < d; ++n) {
      joint(m * n_env, n * n_env) = rho.mat()(m, n);  // rho (x) |0><0|
    }
  }
  const ComplexMatrix evolved = dil.u_ae * joint * dil.u_ae.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (Index m = 0; m < d; ++m) {
    for (Index n = 0; n < d; ++n) {
      Complex acc(0.0, 0.0);
      for (Index e = 0; e < n_env; ++e) {
        acc += evolved(m * n_env + e, n * n_env + e);
      }
      out(m, n) = acc;
    }
  }
  return DensityMatrix(out, Tolerance{10.0 * tol.atol, 10.0 * tol.eig_floor});
}

bool is_rng(const Channel& ch, const Tolerance& tol) {
  tol.validate();
  const ComplexMatrix diff =
      ch.choi() - partial_transpose_a(ch.choi(), ch.dim_out(), ch.dim_in());
  return max_abs(diff - diff.transpose()) <= tol.atol;
}

bool is_completely_rng(const Channel& ch, const Tolerance& tol) {
  tol.validate();
  return max_abs_imag(ch.choi()) <= tol.atol;
}

bool is_transposition_covariant(const Channel& ch, const Tolerance& tol) {
  tol.validate();
  return max_abs(ch.choi() - ch.choi().transpose()) <= tol.atol;
}

std::optional<FreeUnitaryFactorization> is_free_unitary(const ComplexMatrix& u,
                                                        const Tolerance& tol) {
  tol.validate();
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw Error(ErrorCode::not_unitary, "is_free_unitary: non-square input");
  }
  const Index d = u.rows();
  if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > tol.atol) {
    throw Error(ErrorCode::not_unitary, "is_free_unitary: input not unitary");
  }
  const ComplexMatrix m = u.transpose() * u;
  Index rmax = 0, cmax = 0;
  m.cwiseAbs().maxCoeff(&rmax, &cmax);
  const Complex pivot = m(rmax, cmax);
  const double two_theta = std::arg(pivot);
  const ComplexMatrix target =
      std::exp(Complex(0.0, two_theta)) * ComplexMatrix::Identity(d, d);
  if (max_abs(m - target) > kTpFactor * tol.atol) {
    return std::nullopt;
  }
  double theta = two_theta / 2.0;
  if (theta < 0.0) theta += std::numbers::pi;
  FreeUnitaryFactorization f;
  f.theta = theta;
  f.q = std::exp(Complex(0.0, -theta)) * u;
  if (max_abs_imag(f.q) > kTpFactor * tol.atol) {
    return std::nullopt;
  }
  f.q = f.q.real().cast<Complex>();
  return f;
}

bool rng_oracle(const Channel& ch, const Tolerance& tol) {
  tol.validate();
  const Index d = ch.dim_in();
  std::vector<ComplexMatrix> basis;
  for (Index j = 0; j < d; ++j) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(j, j) = 1.0;
    basis.push_back(std::move(m));
  }
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, j) = 0.5;
      m(k, k) = 0.5;
      m(j, k) = 0.5;
      m(k, j) = 0.5;
      basis.push_back(std::move(m));
    }
  }
  for (const ComplexMatrix& sigma : basis) {
    const DensityMatrix out = apply(ch, DensityMatrix(sigma, tol), tol);
    if (max_abs_imag(out.mat()) > tol.atol) return false;
  }
  return true;
}

Channel tensor_with_identity(const Channel& ch, Index k, const Tolerance& tol) {
  if (k < 1) {
    throw Error(ErrorCode::invalid_argument,
                "tensor_with_identity: k must be positive");
  }
  const KrausSet ks = kraus_from_choi(ch, tol);
  const ComplexMatrix eye = ComplexMatrix::Identity(k, k);
  std::vector<ComplexMatrix> extended;
  extended.reserve(ks.operators().size());
  for (const ComplexMatrix& op : ks.operators()) {
    extended.push_back(kron(op, eye));
  }
  return choi_from_kraus(KrausSet(std::move(extended), tol), tol);
}

}  // namespace imaginarity
