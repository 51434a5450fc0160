#ifndef IMAGINARITY_MEASURES_HPP
#define IMAGINARITY_MEASURES_HPP

#include "imaginarity/states.hpp"
#include "imaginarity/types.hpp"

namespace imaginarity {

enum class MeasureMethod {
  trace_distance,
  qubit_closed_form,
  robustness_bisection,
};

const char* to_string(MeasureMethod method);

struct MeasureReport {
  double value = 0.0;
  MeasureMethod method = MeasureMethod::trace_distance;
  int iterations = 0;  // robustness only
};

// Trace distance to the free set: M(rho) = (1/2) ||rho - rho^T||_1, attained
// at sigma = (rho + rho^T)/2.  Normalized so the maximally imaginary qubit
// state scores 1.
MeasureReport measure(const DensityMatrix& rho);

// Qubit closed form |Tr(rho sigma_y)| = |y|; agrees with measure().
MeasureReport measure_qubit(const DensityMatrix& rho);

// Robustness: least s >= 0 such that (s pi + rho)/(1 + s) is free for some
// density matrix pi.  Bisection over s with an explicit feasibility witness
// at every probe; converges to 1e-8.
MeasureReport robustness(const DensityMatrix& rho, const Tolerance& tol = {});

double measure_of_pure(const PureState& psi);

}  // namespace imaginarity

#endif  // IMAGINARITY_MEASURES_HPP
