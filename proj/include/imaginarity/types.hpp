#ifndef IMAGINARITY_TYPES_HPP
#define IMAGINARITY_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace imaginarity {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Absolute tolerances used throughout. All matrices in scope are
// trace-normalized or unitary (magnitudes O(1)), so no relative scaling.
struct Tolerance {
  double atol = 1e-9;       // entrywise comparisons
  double eig_floor = 1e-9;  // eigenvalue negativity allowance in PSD tests

  void validate() const;
};

enum class ErrorCode {
  invalid_argument,  // bad dimensions, null input, non-finite entries
  not_density,       // matrix fails the density-operator invariants
  not_cptp,          // Choi matrix fails complete positivity / trace preservation
  not_unitary,       // matrix fails the unitarity check
  infeasible,        // requested transformation does not exist
  numeric,           // iteration failed to converge or similar
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline void Tolerance::validate() const {
  if (!(atol > 0.0 && atol < 1e-2) || !(eig_floor > 0.0 && eig_floor < 1e-2)) {
    throw Error(ErrorCode::invalid_argument,
                "tolerances must be strictly positive and below 1e-2");
  }
}

}  // namespace imaginarity

#endif  // IMAGINARITY_TYPES_HPP
