#ifndef IMAGINARITY_TRANSFORMS_HPP
#define IMAGINARITY_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "imaginarity/channels.hpp"
#include "imaginarity/measures.hpp"
#include "imaginarity/states.hpp"
#include "imaginarity/types.hpp"

namespace imaginarity {

// Bloch-sphere affine data r' = T r + t of a qubit map.
struct AffineMap {
  RealMatrix t_mat = RealMatrix::Identity(3, 3);
  RealVector t_vec = RealVector::Zero(3);
};

// Staged free channel converting |psi> to |phi>:
//   total = u_post o embed o qubit stage o compress o u_pre,
// every stage individually free (factorizable unitaries, real Kraus sets,
// real-Choi qubit stage).
struct TransformPlan {
  double theta_source = 0.0;
  double theta_target = 0.0;
  ComplexMatrix u_pre;    // canonicalizes the source onto |theta>
  ComplexMatrix u_post;   // maps |theta'> onto the target
  KrausSet compress;      // d -> 2 collapse of the complement onto |0>
  Channel qubit_choi;     // 2 -> 2 canonical conversion stage
  AffineMap affine;       // Bloch action of the qubit stage
  Channel total;          // d -> d composition
  double fidelity = 0.0;  // <phi| total(|psi><psi|) |phi>
};

// True iff M(|psi><psi|) >= M(|phi><phi|) (within 1e-12); dimensions may
// differ.
bool transform_exists(const PureState& psi, const PureState& phi);

// The closed-form affine data T = diag(1, sin(theta')/sin(theta), 0),
// t = (cos(theta') - cos(theta), 0, 0) for |theta> -> |theta'>; the ratio is
// taken as 0 when sin(theta) = 0.  Note: this map is not completely positive
// (bloch_affine_to_choi rejects it); synthesize() uses an exact Kraus
// construction instead.  Requires 0 <= theta' <= theta <= pi/2.
AffineMap pure_conversion_affine(double theta, double theta_prime);

// Qubit channel reconstruction
//   E(X) = 1/2 [ Tr(X)(I + t.sigma) + sum_{kl} T_{lk} Tr(X sigma_k) sigma_l ],
// assembled into a Choi matrix.  Throws when the affine map is not a channel
// (Choi not PSD).
Channel bloch_affine_to_choi(const AffineMap& am, const Tolerance& tol = {});

// Explicit free channel with apply(total, |psi><psi|) = |phi><phi|; requires
// transform_exists(psi, phi).  States of different dimension are zero-padded
// to a common dimension (at least 2).
TransformPlan synthesize(const PureState& psi, const PureState& phi,
                         const Tolerance& tol = {});

// Convex combination of per-target plans: maps |psi><psi| to
// sum_j p_j |phi_j><phi_j|.
Channel synthesize_to_mixed(
    const PureState& psi,
    const std::vector<std::pair<double, PureState>>& ensemble,
    const Tolerance& tol = {});

}  // namespace imaginarity

#endif  // IMAGINARITY_TRANSFORMS_HPP
