#ifndef IMAGINARITY_CHANNELS_HPP
#define IMAGINARITY_CHANNELS_HPP

#include <optional>
#include <vector>

#include "imaginarity/states.hpp"
#include "imaginarity/types.hpp"

namespace imaginarity {

// CPTP map stored as its Choi matrix J = sum_{jk} E(|j><k|) (x) |j><k| on
// H_out (x) H_in, unnormalized (Tr J = dim_in).  Channel action:
// E(rho) = Tr_in[ J (I (x) rho^T) ].
class Channel {
 public:
  static Channel from_choi(ComplexMatrix choi, Index dim_out, Index dim_in,
                           const Tolerance& tol = {});
  static Channel identity(Index dim);
  static Channel from_unitary(const ComplexMatrix& u, const Tolerance& tol = {});

  const ComplexMatrix& choi() const { return choi_; }
  Index dim_out() const { return dim_out_; }
  Index dim_in() const { return dim_in_; }

 private:
  Channel(ComplexMatrix choi, Index dim_out, Index dim_in)
      : choi_(std::move(choi)), dim_out_(dim_out), dim_in_(dim_in) {}

  ComplexMatrix choi_;
  Index dim_out_;
  Index dim_in_;
};

// Kraus operators with sum K^dagger K = I verified on construction.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators,
                    const Tolerance& tol = {});

  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  Index size() const { return static_cast<Index>(operators_.size()); }
  Index dim_out() const { return operators_.front().rows(); }
  Index dim_in() const { return operators_.front().cols(); }
  bool all_real(const Tolerance& tol = {}) const;

 private:
  std::vector<ComplexMatrix> operators_;
};

// Real orthogonal dilation unitary on H_A (x) H_E (E index fastest), with
// environment prepared in |0>: E(rho) = Tr_E[ U (rho (x) |0><0|) U^T ].
struct Dilation {
  ComplexMatrix u_ae;
  Index env_dim = 1;
};

// U = e^{i theta} Q with Q real orthogonal.
struct FreeUnitaryFactorization {
  double theta = 0.0;  // in [0, 2pi)
  ComplexMatrix q;
};

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho,
                    const Tolerance& tol = {});

Channel choi_from_kraus(const KrausSet& ks, const Tolerance& tol = {});

// Spectral extraction: vec(K_j) = sqrt(lambda_j) |v_j>; eigenvalues below
// eig_floor are dropped.  Real Choi matrices yield real Kraus operators.
KrausSet kraus_from_choi(const Channel& ch, const Tolerance& tol = {});

// Requires all-real Kraus operators on a square channel; the first
// block-column of u_ae stacks the K_j.
Dilation dilation_from_kraus(const KrausSet& ks, const Tolerance& tol = {});

// Evaluates Tr_E[ U (rho (x) |0><0|) U^dagger ] for roundtrip checks.
DensityMatrix apply_dilation(const Dilation& dil, const DensityMatrix& rho,
                             const Tolerance& tol = {});

// Resource non-generating: J - J^{Gamma_A} is symmetric.
bool is_rng(const Channel& ch, const Tolerance& tol = {});

// Completely resource non-generating: Choi matrix real.
bool is_completely_rng(const Channel& ch, const Tolerance& tol = {});

// E commutes with transposition: equivalent to J = J^T.
bool is_transposition_covariant(const Channel& ch, const Tolerance& tol = {});

// Factorization U = e^{i theta} Q when U^T U = e^{2 i theta} I; nullopt
// otherwise.  Throws on non-unitary input.
std::optional<FreeUnitaryFactorization> is_free_unitary(
    const ComplexMatrix& u, const Tolerance& tol = {});

// Brute-force check that the channel maps a spanning set of real density
// matrices (|j><j| and (|j>+|k>)(<j|+<k|)/2) to real states.
bool rng_oracle(const Channel& ch, const Tolerance& tol = {});

// Choi of E (x) id_k.
Channel tensor_with_identity(const Channel& ch, Index k,
                             const Tolerance& tol = {});

}  // namespace imaginarity

#endif  // IMAGINARITY_CHANNELS_HPP
