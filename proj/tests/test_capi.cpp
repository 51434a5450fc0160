// Exercises the extern-C surface in imaginarity.h the way an external client
// would: raw interleaved buffers, opaque handles, status codes.

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "imaginarity.h"

namespace {

struct Handle {
  img_matrix* h = nullptr;
  ~Handle() { img_matrix_free(h); }
};

Handle make(std::size_t rows, std::size_t cols,
            std::initializer_list<double> interleaved) {
  Handle out;
  std::vector<double> data(interleaved);
  EXPECT_EQ(img_matrix_create(rows, cols, data.data(), &out.h), IMG_OK);
  return out;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

Handle plus_i_vector() {
  return make(2, 1, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

Handle plus_i_density() {
  return make(2, 2, {0.5, 0, 0, -0.5, 0, 0.5, 0.5, 0});
}

// J = I/2 - (1/4) sigma_z (x) sigma_y.
Handle witness_choi() {
  return make(4, 4,
              {0.5, 0,    0, 0.25, 0, 0,    0, 0,     //
               0,   -0.25, 0.5, 0, 0, 0,    0, 0,     //
               0,   0,    0, 0,    0.5, 0,  0, -0.25,  //
               0,   0,    0, 0,    0, 0.25, 0.5, 0});
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(img_version(), "");
  EXPECT_STREQ(img_status_string(IMG_OK), "ok");
  EXPECT_STREQ(img_status_string(IMG_ERR_NOT_CPTP), "not a CPTP channel");
}

TEST(CApi, MatrixRoundtrip) {
  Handle m = make(2, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  EXPECT_EQ(img_matrix_rows(m.h), 2u);
  EXPECT_EQ(img_matrix_cols(m.h), 3u);
  std::array<double, 12> out{};
  EXPECT_EQ(img_matrix_data(m.h, out.data()), IMG_OK);
  EXPECT_EQ(out[0], 1);
  EXPECT_EQ(out[11], 12);
}

TEST(CApi, RejectsNonFiniteAndNull) {
  img_matrix* h = nullptr;
  const double bad[2] = {std::nan(""), 0.0};
  EXPECT_EQ(img_matrix_create(1, 1, bad, &h), IMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(img_matrix_create(0, 1, nullptr, &h), IMG_ERR_INVALID_ARGUMENT);
  double dummy = 0.0;
  EXPECT_EQ(img_trace_norm(nullptr, &dummy), IMG_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(img_last_error(), "");
}

TEST(CApi, CorePredicates) {
  Handle sy = make(2, 2, {0, 0, 0, -1, 0, 1, 0, 0});
  int flag = -1;
  EXPECT_EQ(img_is_hermitian(sy.h, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 1);
  EXPECT_EQ(img_is_symmetric(sy.h, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 0);
  double tn = 0.0;
  EXPECT_EQ(img_trace_norm(sy.h, &tn), IMG_OK);
  EXPECT_NEAR(tn, 2.0, 1e-14);
}

TEST(CApi, MeasureAndRobustness) {
  Handle rho = plus_i_density();
  double value = 0.0;
  EXPECT_EQ(img_measure(rho.h, &value), IMG_OK);
  EXPECT_NEAR(value, 1.0, 1e-12);
  EXPECT_EQ(img_measure_qubit(rho.h, &value), IMG_OK);
  EXPECT_NEAR(value, 1.0, 1e-12);
  int iterations = 0;
  EXPECT_EQ(img_robustness(rho.h, nullptr, &value, &iterations), IMG_OK);
  EXPECT_NEAR(value, 1.0, 1e-7);
  EXPECT_GT(iterations, 0);
}

TEST(CApi, MeasureRejectsNonDensity) {
  Handle not_density = make(2, 2, {1, 0, 0, 0, 0, 0, 1, 0});  // trace 2
  double value = 0.0;
  EXPECT_EQ(img_measure(not_density.h, &value), IMG_ERR_NOT_DENSITY);
}

TEST(CApi, PureDensityAndCanonicalForm) {
  Handle psi = plus_i_vector();
  Handle rho;
  ASSERT_EQ(img_pure_density(psi.h, &rho.h), IMG_OK);
  double value = 0.0;
  EXPECT_EQ(img_measure(rho.h, &value), IMG_OK);
  EXPECT_NEAR(value, 1.0, 1e-12);

  double theta = 0.0, phase = 0.0;
  Handle u;
  ASSERT_EQ(img_canonical_pure_form(psi.h, nullptr, &theta, &phase, &u.h),
            IMG_OK);
  EXPECT_NEAR(theta, std::numbers::pi / 2.0, 1e-12);
  int is_free = 0;
  double utheta = 0.0;
  EXPECT_EQ(img_is_free_unitary(u.h, nullptr, &is_free, &utheta, nullptr),
            IMG_OK);
  EXPECT_EQ(is_free, 1);
}

TEST(CApi, ChannelPredicatesOnWitness) {
  Handle choi = witness_choi();
  EXPECT_EQ(img_channel_validate(choi.h, 2, 2, nullptr), IMG_OK);
  int flag = -1;
  EXPECT_EQ(img_is_rng(choi.h, 2, 2, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 1);
  EXPECT_EQ(img_is_completely_rng(choi.h, 2, 2, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 0);
  EXPECT_EQ(img_is_transposition_covariant(choi.h, 2, 2, nullptr, &flag),
            IMG_OK);
  EXPECT_EQ(flag, 0);
  EXPECT_EQ(img_rng_oracle(choi.h, 2, 2, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 1);

  Handle rho = plus_i_density();
  Handle out;
  ASSERT_EQ(img_channel_apply(choi.h, 2, 2, rho.h, &out.h), IMG_OK);
  std::array<double, 8> data{};
  img_matrix_data(out.h, data.data());
  EXPECT_NEAR(data[0], 0.75, 1e-12);  // (0,0) re
  EXPECT_NEAR(data[6], 0.25, 1e-12);  // (1,1) re
}

TEST(CApi, NonCptpChoiIsRejected) {
  Handle bogus = make(4, 4, {1, 0, 0, 0, 0, 0, 0, 0,  //
                             0, 0, 1, 0, 0, 0, 0, 0,  //
                             0, 0, 0, 0, 1, 0, 0, 0,  //
                             0, 0, 0, 0, 0, 0, -1, 0});
  EXPECT_EQ(img_channel_validate(bogus.h, 2, 2, nullptr), IMG_ERR_NOT_CPTP);
}

TEST(CApi, KrausAndDilation) {
  Handle choi;
  ASSERT_EQ(img_sample_real_choi_channel(2, 424242, &choi.h), IMG_OK);
  int flag = 0;
  EXPECT_EQ(img_is_completely_rng(choi.h, 2, 2, nullptr, &flag), IMG_OK);
  EXPECT_EQ(flag, 1);

  img_matrix** ops = nullptr;
  size_t count = 0;
  ASSERT_EQ(img_kraus_from_choi(choi.h, 2, 2, nullptr, &ops, &count), IMG_OK);
  ASSERT_GT(count, 0u);

  Handle rebuilt;
  EXPECT_EQ(img_choi_from_kraus(ops, count, nullptr, &rebuilt.h), IMG_OK);
  std::vector<double> a(2 * 16), b(2 * 16);
  img_matrix_data(choi.h, a.data());
  img_matrix_data(rebuilt.h, b.data());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i], b[i], 1e-8);
  }

  Handle u_ae;
  size_t env_dim = 0;
  EXPECT_EQ(img_dilation_from_kraus(ops, count, nullptr, &u_ae.h, &env_dim),
            IMG_OK);
  EXPECT_EQ(env_dim, count);
  EXPECT_EQ(img_matrix_rows(u_ae.h), 2 * count);
  img_kraus_free(ops, count);
}

TEST(CApi, FreeUnitaryRejectsPhaseGate) {
  Handle s = make(2, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  int is_free = -1;
  EXPECT_EQ(img_is_free_unitary(s.h, nullptr, &is_free, nullptr, nullptr),
            IMG_OK);
  EXPECT_EQ(is_free, 0);
  Handle not_unitary = make(2, 2, {1, 0, 1, 0, 0, 0, 1, 0});
  EXPECT_EQ(
      img_is_free_unitary(not_unitary.h, nullptr, &is_free, nullptr, nullptr),
      IMG_ERR_NOT_UNITARY);
}

TEST(CApi, TransformsEndToEnd) {
  Handle psi = plus_i_vector();
  Handle phi = make(2, 1, {kInvSqrt2, 0, kInvSqrt2, 0});  // |+>
  int feasible = 0;
  EXPECT_EQ(img_transform_exists(psi.h, phi.h, &feasible), IMG_OK);
  EXPECT_EQ(feasible, 1);

  Handle choi;
  double fidelity = 0.0;
  ASSERT_EQ(img_synthesize(psi.h, phi.h, &choi.h, &fidelity), IMG_OK);
  EXPECT_GE(fidelity, 1.0 - 1e-9);
  int real = 0;
  EXPECT_EQ(img_is_completely_rng(choi.h, 2, 2, nullptr, &real), IMG_OK);
  EXPECT_EQ(real, 1);

  // The reverse direction is infeasible.
  Handle reverse;
  EXPECT_EQ(img_synthesize(phi.h, psi.h, &reverse.h, &fidelity),
            IMG_ERR_INFEASIBLE);

  const img_matrix* phis[1] = {phi.h};
  const double probs[1] = {1.0};
  Handle mixed;
  EXPECT_EQ(img_synthesize_to_mixed(psi.h, phis, probs, 1, &mixed.h), IMG_OK);
}

TEST(CApi, AffineHelpers) {
  double t_mat[9] = {0};
  double t_vec[3] = {0};
  EXPECT_EQ(img_pure_conversion_affine(std::numbers::pi / 2.0, 0.0, t_mat,
                                       t_vec),
            IMG_OK);
  EXPECT_NEAR(t_mat[0], 1.0, 1e-15);
  EXPECT_NEAR(t_mat[4], 0.0, 1e-15);
  EXPECT_NEAR(t_vec[0], 1.0, 1e-15);
  // That closed-form map is not a channel.
  Handle choi;
  EXPECT_EQ(img_bloch_affine_to_choi(t_mat, t_vec, &choi.h), IMG_ERR_NOT_CPTP);

  // The identity map is.
  double id_mat[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  double zero_vec[3] = {0, 0, 0};
  EXPECT_EQ(img_bloch_affine_to_choi(id_mat, zero_vec, &choi.h), IMG_OK);
  EXPECT_EQ(img_matrix_rows(choi.h), 4u);
}

TEST(CApi, SplitBlochAndStateHelpers) {
  Handle rho = plus_i_density();
  Handle r, i;
  ASSERT_EQ(img_split_real_imag(rho.h, &r.h, &i.h), IMG_OK);
  std::array<double, 8> rdat{}, idat{};
  img_matrix_data(r.h, rdat.data());
  img_matrix_data(i.h, idat.data());
  EXPECT_NEAR(rdat[0], 0.5, 1e-15);
  EXPECT_NEAR(idat[2], -0.5, 1e-15);  // (0,1) re of rho_I

  double xyz[3] = {0, 0, 0};
  EXPECT_EQ(img_bloch_of_qubit(rho.h, xyz), IMG_OK);
  EXPECT_NEAR(xyz[1], 1.0, 1e-12);
  Handle back;
  EXPECT_EQ(img_qubit_of_bloch(xyz, &back.h), IMG_OK);

  Handle max_im;
  EXPECT_EQ(img_maximally_imaginary(3, &max_im.h), IMG_OK);
  EXPECT_EQ(img_matrix_rows(max_im.h), 3u);

  Handle o;
  double x = 0, y = 0;
  EXPECT_EQ(img_half_diagonal_form(rho.h, nullptr, &x, &y, &o.h), IMG_OK);
  EXPECT_NEAR(x, 0.0, 1e-12);
  EXPECT_NEAR(y, 0.5, 1e-12);
}

}  // namespace
