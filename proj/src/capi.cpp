#include "imaginarity.h"

#include <cstring>
#include <new>
#include <string>

#include "imaginarity/channels.hpp"
#include "imaginarity/core.hpp"
#include "imaginarity/measures.hpp"
#include "imaginarity/sampling.hpp"
#include "imaginarity/states.hpp"
#include "imaginarity/transforms.hpp"

using namespace imaginarity;

struct img_matrix {
  ComplexMatrix m;
};

namespace {

thread_local std::string g_last_error;

img_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return IMG_ERR_INVALID_ARGUMENT;
    case ErrorCode::not_density:
      return IMG_ERR_NOT_DENSITY;
    case ErrorCode::not_cptp:
      return IMG_ERR_NOT_CPTP;
    case ErrorCode::not_unitary:
      return IMG_ERR_NOT_UNITARY;
    case ErrorCode::infeasible:
      return IMG_ERR_INFEASIBLE;
    case ErrorCode::numeric:
      return IMG_ERR_NUMERIC;
  }
  return IMG_ERR_NUMERIC;
}

img_status fail(img_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
img_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return IMG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return IMG_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IMG_ERR_NUMERIC;
  }
}

Tolerance tol_of(const img_tolerance* tol) {
  if (tol == nullptr) return Tolerance{};
  return Tolerance{tol->atol, tol->eig_floor};
}

img_matrix* wrap(ComplexMatrix m) { return new img_matrix{std::move(m)}; }

bool bad(const img_matrix* m) { return m == nullptr; }

DensityMatrix density_of(const img_matrix* rho, const Tolerance& tol = {}) {
  return DensityMatrix(rho->m, tol);
}

PureState pure_of(const img_matrix* psi, const Tolerance& tol = {}) {
  if (psi->m.cols() != 1) {
    throw Error(ErrorCode::invalid_argument,
                "pure state must be a column vector");
  }
  return PureState(psi->m.col(0), tol);
}

Channel channel_of(const img_matrix* choi, size_t dim_out, size_t dim_in,
                   const Tolerance& tol = {}) {
  return Channel::from_choi(choi->m, static_cast<Index>(dim_out),
                            static_cast<Index>(dim_in), tol);
}

KrausSet kraus_of(const img_matrix* const* ops, size_t count,
                  const Tolerance& tol) {
  if (ops == nullptr || count == 0) {
    throw Error(ErrorCode::invalid_argument, "empty Kraus list");
  }
  std::vector<ComplexMatrix> list;
  list.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (ops[i] == nullptr) {
      throw Error(ErrorCode::invalid_argument, "null Kraus operator");
    }
    list.push_back(ops[i]->m);
  }
  return KrausSet(std::move(list), tol);
}

}  // namespace

extern "C" {

const char* img_version(void) { return "1.0.0"; }

const char* img_status_string(img_status status) {
  switch (status) {
    case IMG_OK:
      return "ok";
    case IMG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case IMG_ERR_NOT_DENSITY:
      return "not a density matrix";
    case IMG_ERR_NOT_CPTP:
      return "not a CPTP channel";
    case IMG_ERR_NOT_UNITARY:
      return "not unitary";
    case IMG_ERR_INFEASIBLE:
      return "transformation infeasible";
    case IMG_ERR_NUMERIC:
      return "numeric failure";
  }
  return "unknown";
}

const char* img_last_error(void) { return g_last_error.c_str(); }

img_tolerance img_tolerance_default(void) {
  Tolerance t;
  return img_tolerance{t.atol, t.eig_floor};
}

img_status img_matrix_create(size_t rows, size_t cols, const double* data,
                             img_matrix** out) {
  if (out == nullptr || rows == 0 || cols == 0) {
    return fail(IMG_ERR_INVALID_ARGUMENT, "img_matrix_create: bad arguments");
  }
  return guarded([&] {
    ComplexMatrix m(rows, cols);
    if (data == nullptr) {
      m.setZero();
    } else {
      size_t k = 0;
      for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
          m(i, j) = Complex(data[2 * k], data[2 * k + 1]);
          ++k;
        }
      }
      if (!all_finite(m)) {
        throw Error(ErrorCode::invalid_argument,
                    "matrix entries must be finite");
      }
    }
    *out = wrap(std::move(m));
  });
}

void img_matrix_free(img_matrix* m) { delete m; }

size_t img_matrix_rows(const img_matrix* m) {
  return m == nullptr ? 0 : static_cast<size_t>(m->m.rows());
}

size_t img_matrix_cols(const img_matrix* m) {
  return m == nullptr ? 0 : static_cast<size_t>(m->m.cols());
}

img_status img_matrix_data(const img_matrix* m, double* out) {
  if (bad(m) || out == nullptr) {
    return fail(IMG_ERR_INVALID_ARGUMENT, "img_matrix_data: bad arguments");
  }
  size_t k = 0;
  for (Index i = 0; i < m->m.rows(); ++i) {
    for (Index j = 0; j < m->m.cols(); ++j) {
      out[2 * k] = m->m(i, j).real();
      out[2 * k + 1] = m->m(i, j).imag();
      ++k;
    }
  }
  return IMG_OK;
}

img_status img_is_hermitian(const img_matrix* m, const img_tolerance* tol,
                            int* out) {
  if (bad(m) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = is_hermitian(m->m, tol_of(tol)) ? 1 : 0; });
}

img_status img_is_symmetric(const img_matrix* m, const img_tolerance* tol,
                            int* out) {
  if (bad(m) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = is_symmetric(m->m, tol_of(tol)) ? 1 : 0; });
}

img_status img_is_psd(const img_matrix* m, const img_tolerance* tol,
                      int* out) {
  if (bad(m) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = is_psd(m->m, tol_of(tol)) ? 1 : 0; });
}

img_status img_trace_norm(const img_matrix* m, double* out) {
  if (bad(m) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = trace_norm(m->m); });
}

img_status img_partial_transpose_a(const img_matrix* m, size_t dim_a,
                                   size_t dim_b, img_matrix** out) {
  if (bad(m) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = wrap(partial_transpose_a(m->m, static_cast<Index>(dim_a),
                                    static_cast<Index>(dim_b)));
  });
}

img_status img_is_free_state(const img_matrix* rho, const img_tolerance* tol,
                             int* out) {
  if (bad(rho) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *out = is_free_state(density_of(rho, t), t) ? 1 : 0;
  });
}

img_status img_split_real_imag(const img_matrix* rho, img_matrix** rho_r,
                               img_matrix** rho_i) {
  if (bad(rho) || rho_r == nullptr || rho_i == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto [r, i] = split_real_imag(density_of(rho));
    *rho_r = wrap(std::move(r));
    *rho_i = wrap(std::move(i));
  });
}

img_status img_bloch_of_qubit(const img_matrix* rho, double xyz[3]) {
  if (bad(rho) || xyz == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const BlochVector r = bloch_of_qubit(density_of(rho));
    xyz[0] = r.x;
    xyz[1] = r.y;
    xyz[2] = r.z;
  });
}

img_status img_qubit_of_bloch(const double xyz[3], img_matrix** rho) {
  if (xyz == nullptr || rho == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *rho = wrap(qubit_of_bloch(BlochVector{xyz[0], xyz[1], xyz[2]}).mat());
  });
}

img_status img_maximally_imaginary(size_t dim, img_matrix** psi) {
  if (psi == nullptr) return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *psi = wrap(maximally_imaginary(static_cast<Index>(dim)).amps());
  });
}

img_status img_pure_density(const img_matrix* psi, img_matrix** rho) {
  if (bad(psi) || rho == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *rho = wrap(pure_of(psi).density().mat()); });
}

img_status img_canonical_pure_form(const img_matrix* psi,
                                   const img_tolerance* tol, double* theta,
                                   double* phase, img_matrix** u_free) {
  if (bad(psi) || theta == nullptr || phase == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    const CanonicalForm cf = canonical_pure_form(pure_of(psi, t), t);
    *theta = cf.theta;
    *phase = cf.phase;
    if (u_free != nullptr) *u_free = wrap(cf.u_free);
  });
}

img_status img_half_diagonal_form(const img_matrix* rho,
                                  const img_tolerance* tol, double* x,
                                  double* y, img_matrix** o) {
  if (bad(rho) || x == nullptr || y == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    const HalfDiagonalForm hd = half_diagonal_form(density_of(rho, t), t);
    *x = hd.x;
    *y = hd.y;
    if (o != nullptr) *o = wrap(hd.o.cast<Complex>());
  });
}

img_status img_measure(const img_matrix* rho, double* value) {
  if (bad(rho) || value == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *value = measure(density_of(rho)).value; });
}

img_status img_measure_qubit(const img_matrix* rho, double* value) {
  if (bad(rho) || value == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *value = measure_qubit(density_of(rho)).value; });
}

img_status img_robustness(const img_matrix* rho, const img_tolerance* tol,
                          double* value, int* iterations) {
  if (bad(rho) || value == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    const MeasureReport report = robustness(density_of(rho, t), t);
    *value = report.value;
    if (iterations != nullptr) *iterations = report.iterations;
  });
}

img_status img_channel_validate(const img_matrix* choi, size_t dim_out,
                                size_t dim_in, const img_tolerance* tol) {
  if (bad(choi)) return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { channel_of(choi, dim_out, dim_in, tol_of(tol)); });
}

img_status img_channel_apply(const img_matrix* choi, size_t dim_out,
                             size_t dim_in, const img_matrix* rho,
                             img_matrix** out) {
  if (bad(choi) || bad(rho) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Channel ch = channel_of(choi, dim_out, dim_in);
    *out = wrap(apply(ch, density_of(rho)).mat());
  });
}

img_status img_is_rng(const img_matrix* choi, size_t dim_out, size_t dim_in,
                      const img_tolerance* tol, int* out) {
  if (bad(choi) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *out = is_rng(channel_of(choi, dim_out, dim_in, t), t) ? 1 : 0;
  });
}

img_status img_is_completely_rng(const img_matrix* choi, size_t dim_out,
                                 size_t dim_in, const img_tolerance* tol,
                                 int* out) {
  if (bad(choi) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *out = is_completely_rng(channel_of(choi, dim_out, dim_in, t), t) ? 1 : 0;
  });
}

img_status img_is_transposition_covariant(const img_matrix* choi,
                                          size_t dim_out, size_t dim_in,
                                          const img_tolerance* tol, int* out) {
  if (bad(choi) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *out = is_transposition_covariant(channel_of(choi, dim_out, dim_in, t), t)
               ? 1
               : 0;
  });
}

img_status img_rng_oracle(const img_matrix* choi, size_t dim_out,
                          size_t dim_in, const img_tolerance* tol, int* out) {
  if (bad(choi) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *out = rng_oracle(channel_of(choi, dim_out, dim_in, t), t) ? 1 : 0;
  });
}

img_status img_is_free_unitary(const img_matrix* u, const img_tolerance* tol,
                               int* is_free, double* theta, img_matrix** q) {
  if (bad(u) || is_free == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = is_free_unitary(u->m, tol_of(tol));
    *is_free = f.has_value() ? 1 : 0;
    if (f.has_value()) {
      if (theta != nullptr) *theta = f->theta;
      if (q != nullptr) *q = wrap(f->q);
    }
  });
}

img_status img_kraus_from_choi(const img_matrix* choi, size_t dim_out,
                               size_t dim_in, const img_tolerance* tol,
                               img_matrix*** ops, size_t* count) {
  if (bad(choi) || ops == nullptr || count == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    const KrausSet ks = kraus_from_choi(channel_of(choi, dim_out, dim_in, t), t);
    const size_t n = ks.operators().size();
    img_matrix** list = new img_matrix*[n];
    for (size_t i = 0; i < n; ++i) list[i] = wrap(ks.operators()[i]);
    *ops = list;
    *count = n;
  });
}

void img_kraus_free(img_matrix** ops, size_t count) {
  if (ops == nullptr) return;
  for (size_t i = 0; i < count; ++i) img_matrix_free(ops[i]);
  delete[] ops;
}

img_status img_choi_from_kraus(const img_matrix* const* ops, size_t count,
                               const img_tolerance* tol, img_matrix** choi) {
  if (choi == nullptr) return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    *choi = wrap(choi_from_kraus(kraus_of(ops, count, t), t).choi());
  });
}

img_status img_dilation_from_kraus(const img_matrix* const* ops, size_t count,
                                   const img_tolerance* tol, img_matrix** u_ae,
                                   size_t* env_dim) {
  if (u_ae == nullptr || env_dim == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const Tolerance t = tol_of(tol);
    const Dilation dil = dilation_from_kraus(kraus_of(ops, count, t), t);
    *u_ae = wrap(dil.u_ae);
    *env_dim = static_cast<size_t>(dil.env_dim);
  });
}

img_status img_sample_channel(size_t dim, uint64_t seed, img_matrix** choi) {
  if (choi == nullptr) return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *choi = wrap(sample_channel(static_cast<Index>(dim), seed).choi()); });
}

img_status img_sample_real_choi_channel(size_t dim, uint64_t seed,
                                        img_matrix** choi) {
  if (choi == nullptr) return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *choi = wrap(sample_real_choi_channel(static_cast<Index>(dim), seed).choi());
  });
}

img_status img_transform_exists(const img_matrix* psi, const img_matrix* phi,
                                int* out) {
  if (bad(psi) || bad(phi) || out == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = transform_exists(pure_of(psi), pure_of(phi)) ? 1 : 0; });
}

img_status img_pure_conversion_affine(double theta, double theta_prime,
                                      double t_mat[9], double t_vec[3]) {
  if (t_mat == nullptr || t_vec == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const AffineMap am = pure_conversion_affine(theta, theta_prime);
    for (int i = 0; i < 3; ++i) {
      t_vec[i] = am.t_vec(i);
      for (int j = 0; j < 3; ++j) t_mat[3 * i + j] = am.t_mat(i, j);
    }
  });
}

img_status img_bloch_affine_to_choi(const double t_mat[9],
                                    const double t_vec[3], img_matrix** choi) {
  if (t_mat == nullptr || t_vec == nullptr || choi == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    AffineMap am;
    for (int i = 0; i < 3; ++i) {
      am.t_vec(i) = t_vec[i];
      for (int j = 0; j < 3; ++j) am.t_mat(i, j) = t_mat[3 * i + j];
    }
    *choi = wrap(bloch_affine_to_choi(am).choi());
  });
}

img_status img_synthesize(const img_matrix* psi, const img_matrix* phi,
                          img_matrix** choi, double* fidelity) {
  if (bad(psi) || bad(phi) || choi == nullptr)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const TransformPlan plan = synthesize(pure_of(psi), pure_of(phi));
    *choi = wrap(plan.total.choi());
    if (fidelity != nullptr) *fidelity = plan.fidelity;
  });
}

img_status img_synthesize_to_mixed(const img_matrix* psi,
                                   const img_matrix* const* phis,
                                   const double* probs, size_t count,
                                   img_matrix** choi) {
  if (bad(psi) || phis == nullptr || probs == nullptr || choi == nullptr ||
      count == 0)
    return fail(IMG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::pair<double, PureState>> ensemble;
    ensemble.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (phis[i] == nullptr) {
        throw Error(ErrorCode::invalid_argument, "null ensemble state");
      }
      ensemble.emplace_back(probs[i], pure_of(phis[i]));
    }
    *choi = wrap(synthesize_to_mixed(pure_of(psi), ensemble).choi());
  });
}

}  // extern "C"
