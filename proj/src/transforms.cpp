#include "imaginarity/transforms.hpp"

#include <cmath>
#include <numbers>

namespace imaginarity {

namespace {

constexpr double kConvertSlack = 1e-12;
constexpr double kHalfPi = std::numbers::pi / 2.0;

PureState zero_pad(const PureState& psi, Index d) {
  if (psi.dim() == d) return psi;
  ComplexVector amps = ComplexVector::Zero(d);
  amps.head(psi.dim()) = psi.amps();
  return PureState(std::move(amps));
}

// Real 2x2 Kraus pair carrying |theta> exactly onto |theta'>, theta' <= theta.
// Each K(mu, phi) = (mu/sin theta) [[sin(theta-phi), sin(phi)],
//                                   [sin(theta-theta'-phi), sin(theta'+phi)]]
// sends |theta> to a multiple of |theta'>; the pair phi in {0, theta} with
// weights below closes the completeness sum.
std::vector<ComplexMatrix> conversion_kraus(double theta, double theta_prime) {
  const double s = std::sin(theta);
  if (s < 1e-12) {
    // theta = theta' = 0: prepare |+> outright.
    ComplexMatrix k0(2, 2), k1(2, 2);
    const double r = 1.0 / std::numbers::sqrt2;
    k0 << r, 0, r, 0;
    k1 << 0, r, 0, r;
    return {k0, k1};
  }
  const double smm = std::sin(theta - theta_prime);
  const double spp = std::sin(theta + theta_prime);
  const double sp = std::sin(theta_prime);
  double ratio = 0.0;
  if (spp > 1e-12) ratio = smm / spp;  // else theta = theta' = pi/2
  const double a = s * s / (s * s + smm * smm + sp * sp * ratio);
  const double b = a * ratio;

  auto kraus_at = [&](double mu, double phi) {
    ComplexMatrix k(2, 2);
    k << std::sin(theta - phi), std::sin(phi),
        std::sin(theta - theta_prime - phi), std::sin(theta_prime + phi);
    return ComplexMatrix((mu / s) * k);
  };
  std::vector<ComplexMatrix> ops;
  ops.push_back(kraus_at(std::sqrt(a), 0.0));
  if (b > 1e-28) ops.push_back(kraus_at(std::sqrt(b), theta));
  return ops;
}

// Bloch affine data of a qubit Kraus channel.
AffineMap affine_of_kraus(const std::vector<ComplexMatrix>& ops) {
  const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
  auto act = [&](const ComplexMatrix& x) {
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (const ComplexMatrix& k : ops) out += k * x * k.adjoint();
    return out;
  };
  AffineMap am;
  const ComplexMatrix e_id = act(ComplexMatrix::Identity(2, 2));
  for (int l = 0; l < 3; ++l) {
    am.t_vec(l) = 0.5 * (sig[l] * e_id).trace().real();
    for (int k = 0; k < 3; ++k) {
      am.t_mat(l, k) = 0.5 * (sig[l] * act(sig[k])).trace().real();
    }
  }
  return am;
}

}  // namespace

bool transform_exists(const PureState& psi, const PureState& phi) {
  return measure_of_pure(psi) >= measure_of_pure(phi) - kConvertSlack;
}

AffineMap pure_conversion_affine(double theta, double theta_prime) {
  if (!(theta_prime >= 0.0 && theta_prime <= theta + 1e-15 &&
        theta <= kHalfPi + 1e-15)) {
    throw Error(ErrorCode::invalid_argument,
                "pure_conversion_affine: need 0 <= theta' <= theta <= pi/2");
  }
  AffineMap am;
  const double s = std::sin(theta);
  const double ratio = s > 0.0 ? std::sin(theta_prime) / s : 0.0;
  am.t_mat = RealMatrix::Zero(3, 3);
  am.t_mat(0, 0) = 1.0;
  am.t_mat(1, 1) = ratio;
  am.t_vec = RealVector::Zero(3);
  am.t_vec(0) = std::cos(theta_prime) - std::cos(theta);
  return am;
}

Channel bloch_affine_to_choi(const AffineMap& am, const Tolerance& tol) {
  tol.validate();
  if (am.t_mat.rows() != 3 || am.t_mat.cols() != 3 || am.t_vec.size() != 3) {
    throw Error(ErrorCode::invalid_argument,
                "bloch_affine_to_choi: affine data must be 3x3 and 3");
  }
  const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
  auto act = [&](const ComplexMatrix& x) {
    ComplexMatrix out = x.trace() * ComplexMatrix::Identity(2, 2);
    for (int l = 0; l < 3; ++l) {
      out += x.trace() * am.t_vec(l) * sig[l];
      for (int k = 0; k < 3; ++k) {
        out += am.t_mat(l, k) * (x * sig[k]).trace() * sig[l];
      }
    }
    return ComplexMatrix(0.5 * out);
  };
  ComplexMatrix j = ComplexMatrix::Zero(4, 4);
  for (Index jj = 0; jj < 2; ++jj) {
    for (Index kk = 0; kk < 2; ++kk) {
      ComplexMatrix basis = ComplexMatrix::Zero(2, 2);
      basis(jj, kk) = 1.0;
      const ComplexMatrix image = act(basis);
      for (Index m = 0; m < 2; ++m) {
        for (Index n = 0; n < 2; ++n) {
          j(m * 2 + jj, n * 2 + kk) += image(m, n);
        }
      }
    }
  }
  return Channel::from_choi(std::move(j), 2, 2, tol);
}

TransformPlan synthesize(const PureState& psi, const PureState& phi,
                         const Tolerance& tol) {
  tol.validate();
  if (!transform_exists(psi, phi)) {
    throw Error(ErrorCode::infeasible,
                "not convertible: M(source) < M(target)");
  }
  const Index d = std::max<Index>({psi.dim(), phi.dim(), 2});
  const PureState source = zero_pad(psi, d);
  const PureState target = zero_pad(phi, d);

  CanonicalForm source_form = canonical_pure_form(source, tol);
  CanonicalForm target_form = canonical_pure_form(target, tol);
  const double theta = source_form.theta;
  const double theta_prime = std::min(target_form.theta, theta);

  // Phase-stripped real orthogonal factors; the channels they generate are
  // unaffected by the global phases.
  const RealMatrix q_pre =
      (std::exp(Complex(0.0, -source_form.phase)) * source_form.u_free).real();
  const RealMatrix q_post =
      (std::exp(Complex(0.0, -target_form.phase)) * target_form.u_free)
          .real()
          .transpose();

  // Compression d -> 2: keep the qubit block, collapse the complement to |0>.
  std::vector<ComplexMatrix> compress_ops;
  {
    ComplexMatrix keep = ComplexMatrix::Zero(2, d);
    keep(0, 0) = 1.0;
    keep(1, 1) = 1.0;
    compress_ops.push_back(std::move(keep));
    for (Index jj = 2; jj < d; ++jj) {
      ComplexMatrix drop = ComplexMatrix::Zero(2, d);
      drop(0, jj) = 1.0;
      compress_ops.push_back(std::move(drop));
    }
  }
  KrausSet compress(compress_ops, tol);

  const std::vector<ComplexMatrix> qubit_ops =
      conversion_kraus(theta, theta_prime);
  Channel qubit_choi = choi_from_kraus(KrausSet(qubit_ops, tol), tol);

  // Embedding 2 -> d.
  RealMatrix embed = RealMatrix::Zero(d, 2);
  embed(0, 0) = 1.0;
  embed(1, 1) = 1.0;

  std::vector<ComplexMatrix> total_ops;
  for (const ComplexMatrix& kq : qubit_ops) {
    for (const ComplexMatrix& c : compress_ops) {
      total_ops.push_back(q_post.cast<Complex>() * embed.cast<Complex>() * kq *
                          c * q_pre.cast<Complex>());
    }
  }
  Channel total = choi_from_kraus(KrausSet(std::move(total_ops), tol), tol);

  const DensityMatrix out = apply(total, source.density(tol), tol);
  const double fidelity =
      (target.amps().adjoint() * out.mat() * target.amps())(0, 0).real();

  TransformPlan plan{theta,
                     theta_prime,
                     source_form.u_free,
                     target_form.u_free.adjoint(),
                     std::move(compress),
                     std::move(qubit_choi),
                     affine_of_kraus(qubit_ops),
                     std::move(total),
                     fidelity};
  return plan;
}

Channel synthesize_to_mixed(
    const PureState& psi,
    const std::vector<std::pair<double, PureState>>& ensemble,
    const Tolerance& tol) {
  tol.validate();
  if (ensemble.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "synthesize_to_mixed: empty ensemble");
  }
  double total_p = 0.0;
  Index d = std::max<Index>(psi.dim(), 2);
  for (const auto& [p, phi] : ensemble) {
    if (p < -1e-15) {
      throw Error(ErrorCode::invalid_argument,
                  "synthesize_to_mixed: negative probability");
    }
    total_p += p;
    d = std::max(d, phi.dim());
  }
  if (std::abs(total_p - 1.0) > tol.atol) {
    throw Error(ErrorCode::invalid_argument,
                "synthesize_to_mixed: probabilities must sum to 1");
  }
  const PureState source = zero_pad(psi, d);
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& [p, phi] : ensemble) {
    const TransformPlan plan = synthesize(source, zero_pad(phi, d), tol);
    j += p * plan.total.choi();
  }
  return Channel::from_choi(std::move(j), d, d, tol);
}

}  // namespace imaginarity
