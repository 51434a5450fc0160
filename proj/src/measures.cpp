#include "imaginarity/measures.hpp"

#include <cmath>

namespace imaginarity {

const char* to_string(MeasureMethod method) {
  switch (method) {
    case MeasureMethod::trace_distance:
      return "trace-distance";
    case MeasureMethod::qubit_closed_form:
      return "qubit-closed-form";
    case MeasureMethod::robustness_bisection:
      return "robustness-bisection";
  }
  return "unknown";
}

MeasureReport measure(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.mat();
  MeasureReport report;
  report.value = 0.5 * trace_norm(m - m.transpose());
  report.method = MeasureMethod::trace_distance;
  return report;
}

MeasureReport measure_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::invalid_argument, "measure_qubit: dim must be 2");
  }
  MeasureReport report;
  report.value = std::abs((rho.mat() * pauli_y()).trace().real());
  report.method = MeasureMethod::qubit_closed_form;
  return report;
}

namespace {

// Feasibility witness for the robustness subproblem at mixing weight s:
// pi must satisfy Im(pi) = -Im(rho)/s.  The least-trace real completion of a
// fixed antisymmetric imaginary part B is sqrt(B^T B), with trace ||B||_1;
// identity padding lifts the trace to 1 when that fits.  Returns the witness
// state, or nothing when infeasible.
struct Feasibility {
  bool feasible = false;
  ComplexMatrix pi;
};

Feasibility try_witness(const DensityMatrix& rho, double s,
                        const Tolerance& tol) {
  Feasibility result;
  if (s <= 0.0) return result;
  const Index d = rho.dim();
  const RealMatrix b =
      (-1.0 / s) *
      ((rho.mat() - rho.mat().transpose()) / Complex(0.0, 2.0)).real();
  const RealMatrix gram = b.transpose() * b;
  const ComplexMatrix x = psd_sqrt(gram.cast<Complex>(), tol);
  const double trace_x = x.trace().real();
  if (trace_x > 1.0 + tol.atol) return result;
  ComplexMatrix pi = x + Complex(0.0, 1.0) * b.cast<Complex>();
  pi += ((1.0 - trace_x) / static_cast<double>(d)) *
        ComplexMatrix::Identity(d, d);

  // Direct verification: pi is a state and the mixture is free.
  const Tolerance check{10.0 * tol.atol, 10.0 * tol.eig_floor};
  try {
    DensityMatrix pi_state(pi, check);
    const ComplexMatrix mixture = (s * pi + rho.mat()) / (1.0 + s);
    if (max_abs_imag(mixture) > check.atol) return result;
  } catch (const Error&) {
    return result;
  }
  result.feasible = true;
  result.pi = std::move(pi);
  return result;
}

}  // namespace

MeasureReport robustness(const DensityMatrix& rho, const Tolerance& tol) {
  tol.validate();
  MeasureReport report;
  report.method = MeasureMethod::robustness_bisection;
  if (is_free_state(rho, tol)) {
    report.value = 0.0;
    return report;
  }

  constexpr double kBisectTol = 1e-8;
  constexpr int kMaxIterations = 60;
  double lo = 0.0;
  double hi = static_cast<double>(rho.dim());  // always feasible
  if (!try_witness(rho, hi, tol).feasible) {
    throw Error(ErrorCode::numeric,
                "robustness: bracket endpoint unexpectedly infeasible");
  }
  int iterations = 0;
  while (hi - lo > kBisectTol && iterations < kMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    if (try_witness(rho, mid, tol).feasible) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  report.value = hi;
  report.iterations = iterations;
  return report;
}

double measure_of_pure(const PureState& psi) {
  return measure(psi.density()).value;
}

}  // namespace imaginarity
