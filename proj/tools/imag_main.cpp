// Command-line front end for the imaginarity library.  All numerics go
// through the C API in imaginarity.h; this file only does file I/O,
// formatting, and exit-code plumbing.
//
// Exit codes: 0 success / predicate true, 1 predicate false or infeasible
// transformation, 2 file parse or usage error, 3 invalid matrix payload,
// 4 non-CPTP Choi matrix.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imaginarity.h"
#include "matrix_file.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitNotCptp = 4;

int exit_code_of(img_status status) {
  switch (status) {
    case IMG_OK:
      return kExitOk;
    case IMG_ERR_INFEASIBLE:
      return kExitFalse;
    case IMG_ERR_NOT_CPTP:
      return kExitNotCptp;
    case IMG_ERR_INVALID_ARGUMENT:
    case IMG_ERR_NOT_DENSITY:
    case IMG_ERR_NOT_UNITARY:
    case IMG_ERR_NUMERIC:
      return kExitInvalid;
  }
  return kExitInvalid;
}

// Reports a failed C API call on stderr and yields its exit code.
int report(img_status status) {
  std::cerr << "error: " << img_status_string(status);
  const std::string detail = img_last_error();
  if (!detail.empty()) std::cerr << " (" << detail << ")";
  std::cerr << "\n";
  return exit_code_of(status);
}

// Value with `sig` significant digits in fixed notation; exact zero prints
// as "0".
std::string format_sig(double v, int sig = 12) {
  if (v == 0.0) return "0";
  char probe[64];
  std::snprintf(probe, sizeof(probe), "%.*e", sig - 1, v);
  int exponent = 0;
  if (const char* e = std::strchr(probe, 'e')) exponent = std::atoi(e + 1);
  int decimals = sig - 1 - exponent;
  if (decimals < 0) decimals = 0;
  char out[330];
  std::snprintf(out, sizeof(out), "%.*f", decimals, v);
  return out;
}

struct Matrix {
  img_matrix* h = nullptr;
  Matrix() = default;
  explicit Matrix(img_matrix* handle) : h(handle) {}
  Matrix(Matrix&& other) noexcept : h(other.h) { other.h = nullptr; }
  Matrix& operator=(Matrix&& other) noexcept {
    if (this != &other) {
      img_matrix_free(h);
      h = other.h;
      other.h = nullptr;
    }
    return *this;
  }
  Matrix(const Matrix&) = delete;
  Matrix& operator=(const Matrix&) = delete;
  ~Matrix() { img_matrix_free(h); }
};

img_status to_handle(const imagcli::MatrixFile& mf, Matrix* out) {
  std::vector<double> interleaved;
  interleaved.reserve(2 * mf.data.size());
  for (const auto& z : mf.data) {
    interleaved.push_back(z.real());
    interleaved.push_back(z.imag());
  }
  return img_matrix_create(mf.rows, mf.cols, interleaved.data(), &out->h);
}

imagcli::MatrixFile to_file(const img_matrix* m, const std::string& kind,
                            std::size_t dim0, std::size_t dim1) {
  imagcli::MatrixFile mf;
  mf.kind = kind;
  mf.dims[0] = dim0;
  mf.dims[1] = dim1;
  mf.rows = img_matrix_rows(m);
  mf.cols = img_matrix_cols(m);
  std::vector<double> interleaved(2 * mf.rows * mf.cols);
  img_matrix_data(m, interleaved.data());
  mf.data.reserve(mf.rows * mf.cols);
  for (std::size_t k = 0; k < mf.rows * mf.cols; ++k) {
    mf.data.emplace_back(interleaved[2 * k], interleaved[2 * k + 1]);
  }
  return mf;
}

struct LoadedState {
  Matrix density;  // always filled
  std::size_t dim = 0;
};

// Accepts kind "state" (square density) or "pure" (column vector).
int load_state(const std::string& path, LoadedState* out) {
  imagcli::MatrixFile mf = imagcli::read_matrix_file(path);
  if (mf.kind != "state" && mf.kind != "pure") {
    throw imagcli::ParseError(path + ": expected kind 'state' or 'pure'");
  }
  if (mf.kind == "state" && mf.rows != mf.cols) {
    throw imagcli::ParseError(path + ": state matrix must be square");
  }
  if (mf.kind == "pure" && mf.cols != 1) {
    throw imagcli::ParseError(path + ": pure state must be a column vector");
  }
  Matrix raw;
  if (img_status s = to_handle(mf, &raw); s != IMG_OK) return report(s);
  if (mf.kind == "pure") {
    if (img_status s = img_pure_density(raw.h, &out->density.h); s != IMG_OK) {
      return report(s);
    }
  } else {
    out->density = std::move(raw);
  }
  out->dim = img_matrix_rows(out->density.h);
  return kExitOk;
}

int load_kind(const std::string& path, const std::string& kind,
              imagcli::MatrixFile* mf_out, Matrix* out) {
  imagcli::MatrixFile mf = imagcli::read_matrix_file(path);
  if (mf.kind != kind) {
    throw imagcli::ParseError(path + ": expected kind '" + kind + "'");
  }
  if (kind == "pure" && mf.cols != 1) {
    throw imagcli::ParseError(path + ": pure state must be a column vector");
  }
  if ((kind == "unitary" || kind == "state") && mf.rows != mf.cols) {
    throw imagcli::ParseError(path + ": matrix must be square");
  }
  if (img_status s = to_handle(mf, out); s != IMG_OK) return report(s);
  if (mf_out != nullptr) *mf_out = std::move(mf);
  return kExitOk;
}

img_tolerance tolerance_from(double atol) {
  img_tolerance tol = img_tolerance_default();
  tol.atol = atol;
  tol.eig_floor = atol;
  return tol;
}

int cmd_measure(const std::string& state_path, bool want_robustness,
                double atol) {
  LoadedState state;
  if (int rc = load_state(state_path, &state); rc != kExitOk) return rc;
  const img_tolerance tol = tolerance_from(atol);
  if (want_robustness) {
    double value = 0.0;
    int iterations = 0;
    if (img_status s = img_robustness(state.density.h, &tol, &value, &iterations);
        s != IMG_OK) {
      return report(s);
    }
    std::printf("R = %.6f\n", value);
    return kExitOk;
  }
  double value = 0.0;
  if (img_status s = img_measure(state.density.h, &value); s != IMG_OK) {
    return report(s);
  }
  std::printf("M = %s\n", format_sig(value).c_str());
  return kExitOk;
}

int cmd_check(const std::string& choi_path, const std::string& unitary_path,
              const std::string& predicate, double atol) {
  const img_tolerance tol = tolerance_from(atol);
  if (predicate == "free-unitary") {
    if (unitary_path.empty()) {
      std::cerr << "error: --predicate free-unitary requires --unitary\n";
      return kExitParse;
    }
    Matrix u;
    if (int rc = load_kind(unitary_path, "unitary", nullptr, &u);
        rc != kExitOk) {
      return rc;
    }
    int is_free = 0;
    double theta = 0.0;
    if (img_status s = img_is_free_unitary(u.h, &tol, &is_free, &theta, nullptr);
        s != IMG_OK) {
      return report(s);
    }
    if (is_free) {
      std::printf("true\ntheta = %s\nq_extracted = true\n",
                  format_sig(theta).c_str());
      return kExitOk;
    }
    std::printf("false\n");
    return kExitFalse;
  }

  if (choi_path.empty()) {
    std::cerr << "error: --predicate " << predicate << " requires --choi\n";
    return kExitParse;
  }
  imagcli::MatrixFile mf;
  Matrix choi;
  if (int rc = load_kind(choi_path, "choi", &mf, &choi); rc != kExitOk) {
    return rc;
  }
  const std::size_t dim_out = mf.dims[0];
  const std::size_t dim_in = mf.dims[1];
  int verdict = 0;
  img_status s = IMG_ERR_INVALID_ARGUMENT;
  if (predicate == "rng") {
    s = img_is_rng(choi.h, dim_out, dim_in, &tol, &verdict);
  } else if (predicate == "real") {
    s = img_is_completely_rng(choi.h, dim_out, dim_in, &tol, &verdict);
  } else if (predicate == "covariant") {
    s = img_is_transposition_covariant(choi.h, dim_out, dim_in, &tol, &verdict);
  } else {
    std::cerr << "error: unknown predicate '" << predicate << "'\n";
    return kExitParse;
  }
  if (s != IMG_OK) return report(s);
  std::printf("%s\n", verdict ? "true" : "false");
  return verdict ? kExitOk : kExitFalse;
}

int cmd_canonicalize(const std::string& pure_path, const std::string& out_path,
                     double atol) {
  Matrix psi;
  if (int rc = load_kind(pure_path, "pure", nullptr, &psi); rc != kExitOk) {
    return rc;
  }
  const img_tolerance tol = tolerance_from(atol);
  double theta = 0.0;
  double phase = 0.0;
  Matrix u;
  if (img_status s = img_canonical_pure_form(psi.h, &tol, &theta, &phase, &u.h);
      s != IMG_OK) {
    return report(s);
  }
  const std::size_t d = img_matrix_rows(u.h);
  imagcli::MatrixFile mf = to_file(u.h, "unitary", d, d);
  mf.phase = phase;
  imagcli::write_matrix_file(out_path, mf);
  std::printf("theta = %s\nphase = %s\n", format_sig(theta).c_str(),
              format_sig(phase).c_str());
  return kExitOk;
}

int cmd_synth(const std::string& from_path, const std::string& to_path,
              const std::string& out_path) {
  Matrix psi;
  if (int rc = load_kind(from_path, "pure", nullptr, &psi); rc != kExitOk) {
    return rc;
  }
  Matrix phi;
  if (int rc = load_kind(to_path, "pure", nullptr, &phi); rc != kExitOk) {
    return rc;
  }
  Matrix choi;
  double fidelity = 0.0;
  const img_status s = img_synthesize(psi.h, phi.h, &choi.h, &fidelity);
  if (s == IMG_ERR_INFEASIBLE) {
    std::printf("not convertible: M(source) < M(target)\n");
    return kExitFalse;
  }
  if (s != IMG_OK) return report(s);
  std::size_t side = img_matrix_rows(choi.h);
  std::size_t d = 1;
  while (d * d < side) ++d;  // side is always a perfect square
  imagcli::write_matrix_file(out_path, to_file(choi.h, "choi", d, d));
  std::printf("fidelity = %s\n", format_sig(fidelity).c_str());
  return kExitOk;
}

int cmd_apply(const std::string& choi_path, const std::string& state_path,
              const std::string& out_path, double atol) {
  imagcli::MatrixFile mf;
  Matrix choi;
  if (int rc = load_kind(choi_path, "choi", &mf, &choi); rc != kExitOk) {
    return rc;
  }
  const img_tolerance tol = tolerance_from(atol);
  if (img_status s = img_channel_validate(choi.h, mf.dims[0], mf.dims[1], &tol);
      s != IMG_OK) {
    return report(s);
  }
  LoadedState state;
  if (int rc = load_state(state_path, &state); rc != kExitOk) return rc;
  Matrix out;
  if (img_status s = img_channel_apply(choi.h, mf.dims[0], mf.dims[1],
                                       state.density.h, &out.h);
      s != IMG_OK) {
    return report(s);
  }
  imagcli::write_matrix_file(out_path,
                             to_file(out.h, "state", mf.dims[0], mf.dims[0]));
  return kExitOk;
}

int cmd_sample(const std::string& kind, std::size_t dim, std::uint64_t seed,
               const std::string& out_path) {
  Matrix choi;
  img_status s = IMG_ERR_INVALID_ARGUMENT;
  if (kind == "channel") {
    s = img_sample_channel(dim, seed, &choi.h);
  } else if (kind == "real-choi") {
    s = img_sample_real_choi_channel(dim, seed, &choi.h);
  } else {
    std::cerr << "error: unknown sample kind '" << kind << "'\n";
    return kExitParse;
  }
  if (s != IMG_OK) return report(s);
  imagcli::write_matrix_file(out_path, to_file(choi.h, "choi", dim, dim));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imaginarity resource-theory toolkit"};
  app.require_subcommand(1);

  double atol = 1e-9;

  auto* measure = app.add_subcommand("measure", "imaginarity of a state");
  std::string measure_state;
  bool want_robustness = false;
  measure->add_option("state", measure_state, "state or pure JSON file")
      ->required();
  measure->add_flag("--robustness", want_robustness,
                    "compute the robustness instead of the trace-distance "
                    "measure");
  measure->add_option("--tol", atol, "absolute tolerance");

  auto* check = app.add_subcommand("check", "free-operation predicates");
  std::string check_choi, check_unitary, predicate;
  check->add_option("--choi", check_choi, "choi JSON file");
  check->add_option("--unitary", check_unitary, "unitary JSON file");
  check->add_option("--predicate", predicate,
                    "one of rng | real | covariant | free-unitary")
      ->required();
  check->add_option("--tol", atol, "absolute tolerance");

  auto* canonicalize =
      app.add_subcommand("canonicalize", "canonical |theta> form of a pure state");
  std::string canon_in, canon_out;
  canonicalize->add_option("pure", canon_in, "pure JSON file")->required();
  canonicalize->add_option("-o,--output", canon_out, "output unitary file")
      ->required();
  canonicalize->add_option("--tol", atol, "absolute tolerance");

  auto* synth = app.add_subcommand("synth", "synthesize a free conversion channel");
  std::string synth_from, synth_to, synth_out;
  synth->add_option("--from", synth_from, "source pure JSON file")->required();
  synth->add_option("--to", synth_to, "target pure JSON file")->required();
  synth->add_option("-o,--output", synth_out, "output choi file")->required();

  auto* apply = app.add_subcommand("apply", "apply a channel to a state");
  std::string apply_choi, apply_state, apply_out;
  apply->add_option("--choi", apply_choi, "choi JSON file")->required();
  apply->add_option("--state", apply_state, "state or pure JSON file")
      ->required();
  apply->add_option("-o,--output", apply_out, "output state file")->required();
  apply->add_option("--tol", atol, "absolute tolerance");

  auto* sample = app.add_subcommand("sample", "sample a random channel");
  std::string sample_kind = "channel";
  std::string sample_out;
  std::size_t sample_dim = 2;
  std::uint64_t sample_seed = 0;
  sample->add_option("--kind", sample_kind, "channel | real-choi");
  sample->add_option("--dim", sample_dim, "system dimension")->required();
  sample->add_option("--seed", sample_seed, "sampler seed")->required();
  sample->add_option("-o,--output", sample_out, "output choi file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (measure->parsed()) {
      return cmd_measure(measure_state, want_robustness, atol);
    }
    if (check->parsed()) {
      return cmd_check(check_choi, check_unitary, predicate, atol);
    }
    if (canonicalize->parsed()) {
      return cmd_canonicalize(canon_in, canon_out, atol);
    }
    if (synth->parsed()) {
      return cmd_synth(synth_from, synth_to, synth_out);
    }
    if (apply->parsed()) {
      return cmd_apply(apply_choi, apply_state, apply_out, atol);
    }
    if (sample->parsed()) {
      return cmd_sample(sample_kind, sample_dim, sample_seed, sample_out);
    }
  } catch (const imagcli::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
