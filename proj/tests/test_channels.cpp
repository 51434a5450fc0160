#include "imaginarity/channels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "imaginarity/sampling.hpp"
#include "test_util.hpp"

namespace imaginarity {
namespace {

// The qubit witness J = I/2 - (1/4) sigma_z (x) sigma_y: a valid channel that
// is RNG without having a real Choi matrix.
Channel witness_channel() {
  return Channel::from_choi(
      0.5 * ComplexMatrix::Identity(4, 4) - 0.25 * kron(pauli_z(), pauli_y()),
      2, 2);
}

Channel s_gate_channel() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, Complex(0, 1);
  return Channel::from_unitary(s);
}

Channel depolarizing_channel(Index d) {
  ComplexMatrix j = kron(ComplexMatrix::Identity(d, d) / double(d),
                         ComplexMatrix::Identity(d, d));
  return Channel::from_choi(j, d, d);
}

DensityMatrix plus_i_state() {
  ComplexMatrix m(2, 2);
  m << Complex(0.5, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0.5, 0);
  return DensityMatrix(m);
}

TEST(ChannelValidation, RejectsBadChoi) {
  EXPECT_THROW(Channel::from_choi(ComplexMatrix::Identity(4, 4), 2, 3), Error);
  // Not PSD:
  EXPECT_THROW(
      Channel::from_choi(kron(pauli_z(), ComplexMatrix::Identity(2, 2)), 2, 2),
      Error);
  // Not TP (trace_A J = 2I):
  EXPECT_THROW(Channel::from_choi(ComplexMatrix::Identity(4, 4) * 2.0, 2, 2),
               Error);
}

TEST(Apply, IdentityChannel) {
  const Channel id = Channel::identity(3);
  const DensityMatrix rho = sample_density_matrix(3, 1);
  EXPECT_LT(max_abs(apply(id, rho).mat() - rho.mat()), 1e-14);
}

TEST(Apply, DepolarizingToMaximallyMixed) {
  const Channel dep = depolarizing_channel(2);
  const DensityMatrix rho = sample_density_matrix(2, 2);
  EXPECT_LT(max_abs(apply(dep, rho).mat() -
                    0.5 * ComplexMatrix::Identity(2, 2)),
            1e-14);
}

TEST(Apply, WitnessChannelOnMaximallyImaginary) {
  // E(|+i><+i|) = I/2 + (1/4) Tr(sigma_y rho^T) sigma_z = diag(3/4, 1/4),
  // confirmed by direct evaluation of the Tr_B formula.
  const DensityMatrix out = apply(witness_channel(), plus_i_state());
  ComplexMatrix expected(2, 2);
  expected << 0.75, 0, 0, 0.25;
  EXPECT_LT(max_abs(out.mat() - expected), 1e-14);
}

TEST(Apply, RejectsDimensionMismatch) {
  EXPECT_THROW(apply(Channel::identity(2), sample_density_matrix(3, 3)), Error);
}

TEST(ChoiKraus, DephasingExtractsProjectors) {
  ComplexMatrix j = ComplexMatrix::Zero(4, 4);
  j(0, 0) = 1.0;  // |0><0| (x) |0><0|
  j(3, 3) = 1.0;  // |1><1| (x) |1><1|
  const Channel dephasing = Channel::from_choi(j, 2, 2);
  const KrausSet ks = kraus_from_choi(dephasing);
  ASSERT_EQ(ks.size(), 2);
  for (const ComplexMatrix& k : ks.operators()) {
    // Each operator is +-|0><0| or +-|1><1|.
    EXPECT_NEAR(max_abs(k), 1.0, 1e-12);
    EXPECT_NEAR(std::abs((k.adjoint() * k).trace() - Complex(1, 0)), 0.0,
                1e-12);
    EXPECT_LT(max_abs(k - k.cwiseProduct(ComplexMatrix::Identity(2, 2))),
              1e-12);
  }
}

TEST(ChoiKraus, IdentityChannelIsRankOne) {
  const KrausSet ks = kraus_from_choi(Channel::identity(3));
  ASSERT_EQ(ks.size(), 1);
  const ComplexMatrix& k = ks.operators().front();
  EXPECT_LT(max_abs(k * k.adjoint() - ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(ChoiKraus, RoundtripOnSampledChannels) {
  for (int trial = 0; trial < 25; ++trial) {
    const Index d = 2 + trial % 2;
    const Channel ch = sample_channel(d, 100 + trial);
    const Channel back = choi_from_kraus(kraus_from_choi(ch));
    EXPECT_LT(max_abs(back.choi() - ch.choi()), 1e-8);
  }
}

TEST(ChoiKraus, RealChoiYieldsRealKraus) {
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = 2 + trial % 2;
    const KrausSet ks = kraus_from_choi(sample_real_choi_channel(d, trial));
    for (const ComplexMatrix& k : ks.operators()) {
      EXPECT_LE(max_abs_imag(k), 1e-8);
    }
  }
}

TEST(ChoiKraus, VecAssemblyConsistency) {
  // sum_k vec(K_k) vec(K_k)^dagger reproduces choi_from_kraus exactly.
  const KrausSet ks = kraus_from_choi(sample_channel(3, 9));
  ComplexMatrix assembled = ComplexMatrix::Zero(9, 9);
  for (const ComplexMatrix& k : ks.operators()) {
    const ComplexVector v = vec(k);
    assembled += v * v.adjoint();
  }
  EXPECT_LT(max_abs(assembled - choi_from_kraus(ks).choi()), 1e-15);
}

TEST(Dilation, SingleIdentityKraus) {
  const KrausSet ks({ComplexMatrix::Identity(3, 3)});
  const Dilation dil = dilation_from_kraus(ks);
  EXPECT_EQ(dil.env_dim, 1);
  EXPECT_LT(max_abs(dil.u_ae - ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(Dilation, DephasingRoundtrip) {
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(1, 1) = 1.0;
  const KrausSet ks({k0, k1});
  const Dilation dil = dilation_from_kraus(ks);
  EXPECT_EQ(dil.u_ae.rows(), 4);
  EXPECT_LE(max_abs_imag(dil.u_ae), 1e-12);
  EXPECT_LT(max_abs(dil.u_ae.transpose() * dil.u_ae -
                    ComplexMatrix::Identity(4, 4)),
            1e-12);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = sample_density_matrix(2, 200 + trial);
    const ComplexMatrix direct =
        k0 * rho.mat() * k0.adjoint() + k1 * rho.mat() * k1.adjoint();
    EXPECT_LT(max_abs(apply_dilation(dil, rho).mat() - direct), 1e-12);
  }
}

TEST(Dilation, RandomRealKrausRoundtrip) {
  for (int trial = 0; trial < 20; ++trial) {
    const KrausSet ks = kraus_from_choi(sample_real_choi_channel(3, 300 + trial));
    const Dilation dil = dilation_from_kraus(ks);
    const DensityMatrix rho = sample_density_matrix(3, 400 + trial);
    ComplexMatrix direct = ComplexMatrix::Zero(3, 3);
    for (const ComplexMatrix& k : ks.operators()) {
      direct += k * rho.mat() * k.adjoint();
    }
    EXPECT_LT(max_abs(apply_dilation(dil, rho).mat() - direct), 1e-9);
  }
}

TEST(Dilation, RejectsComplexKraus) {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, Complex(0, 1);
  EXPECT_THROW(dilation_from_kraus(KrausSet({s})), Error);
}

TEST(Predicates, RealChoiChannelsAreRng) {
  for (int trial = 0; trial < 20; ++trial) {
    const Channel ch = sample_real_choi_channel(2 + trial % 2, 500 + trial);
    EXPECT_TRUE(is_rng(ch));
    EXPECT_TRUE(is_completely_rng(ch));
    EXPECT_TRUE(is_transposition_covariant(ch));
  }
}

TEST(Predicates, WitnessChannelSeparatesRngFromReal) {
  const Channel w = witness_channel();  // construction validates CPTP
  EXPECT_TRUE(is_rng(w));
  EXPECT_FALSE(is_completely_rng(w));
  EXPECT_FALSE(is_transposition_covariant(w));
  EXPECT_TRUE(rng_oracle(w));
}

TEST(Predicates, SGateConjugationGeneratesImaginarity) {
  const Channel s = s_gate_channel();
  EXPECT_FALSE(is_rng(s));
  EXPECT_FALSE(is_completely_rng(s));
  EXPECT_FALSE(is_transposition_covariant(s));
  EXPECT_FALSE(rng_oracle(s));
}

TEST(Predicates, HadamardConjugationIsFree) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::numbers::sqrt2;
  const Channel ch = Channel::from_unitary(h);
  EXPECT_TRUE(is_completely_rng(ch));
  EXPECT_TRUE(is_rng(ch));
}

TEST(Predicates, CovariantAgreesWithRealOnRandomChannels) {
  int count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index d = 2 + trial % 2;
    const Channel ch = trial % 3 == 0
                           ? sample_real_choi_channel(d, 600 + trial)
                           : sample_channel(d, 600 + trial);
    EXPECT_EQ(is_completely_rng(ch), is_transposition_covariant(ch));
    ++count;
  }
  EXPECT_EQ(count, 1000);
}

TEST(FreeUnitary, HadamardIsReal) {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::numbers::sqrt2;
  const auto f = is_free_unitary(h);
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->theta, 0.0, 1e-12);
  EXPECT_LT(max_abs(f->q - h), 1e-12);
}

TEST(FreeUnitary, PauliYFactorsThroughHalfPi) {
  const auto f = is_free_unitary(pauli_y());
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->theta, std::numbers::pi / 2.0, 1e-12);
  ComplexMatrix expected(2, 2);
  expected << 0, -1, 1, 0;
  EXPECT_LT(max_abs(f->q - expected), 1e-12);
  EXPECT_LT(max_abs(std::exp(Complex(0, f->theta)) * f->q - pauli_y()), 1e-12);
}

TEST(FreeUnitary, PhaseGateIsNotFree) {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, Complex(0, 1);
  EXPECT_FALSE(is_free_unitary(s).has_value());
}

TEST(FreeUnitary, RejectsNonUnitary) {
  ComplexMatrix m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(is_free_unitary(m), Error);
}

TEST(FreeUnitary, ClosedUnderProductAndInverse) {
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 3;
    std::mt19937_64 rng(700 + trial);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const ComplexMatrix u1 = std::exp(Complex(0, angle(rng))) *
                             sample_real_orthogonal(d, 800 + trial)
                                 .cast<Complex>();
    const ComplexMatrix u2 = std::exp(Complex(0, angle(rng))) *
                             sample_real_orthogonal(d, 900 + trial)
                                 .cast<Complex>();
    EXPECT_TRUE(is_free_unitary(u1).has_value());
    EXPECT_TRUE(is_free_unitary(ComplexMatrix(u1 * u2)).has_value());
    EXPECT_TRUE(is_free_unitary(ComplexMatrix(u1.adjoint())).has_value());
  }
}

TEST(RngOracle, AgreesWithPartialTransposeCriterion) {
  int disagreements = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Index d = 2 + trial % 2;
    Channel ch = [&] {
      switch (trial % 4) {
        case 0:
          return sample_real_choi_channel(d, 1000 + trial);
        case 1:
          return sample_channel(d, 1000 + trial);
        case 2:
          return Channel::from_unitary(
              sample_real_orthogonal(d, 1000 + trial).cast<Complex>());
        default:
          return Channel::from_unitary(sample_haar_unitary(d, 1000 + trial));
      }
    }();
    if (is_rng(ch) != rng_oracle(ch)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(RngOracle, IdentityIsFree) {
  EXPECT_TRUE(rng_oracle(Channel::identity(3)));
}

TEST(Samplers, RealChoiSamplesAreRealCptp) {
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 3;
    const Channel ch = sample_real_choi_channel(d, 1100 + trial);
    EXPECT_TRUE(is_completely_rng(ch));  // construction keeps realness
    EXPECT_TRUE(is_hermitian(ch.choi()));
    EXPECT_TRUE(is_psd(ch.choi()));
  }
}

TEST(Samplers, GenericSamplesAreAlmostNeverReal) {
  int real_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    if (is_completely_rng(sample_channel(2, 1200 + trial))) ++real_count;
  }
  EXPECT_LE(real_count, 1);  // > 99% non-real
}

TEST(Samplers, Deterministic) {
  const Channel a = sample_channel(3, 77);
  const Channel b = sample_channel(3, 77);
  EXPECT_LT(max_abs(a.choi() - b.choi()), 0.0 + 1e-18);
}

// Four-way equivalence of the physically consistent class, exercised per
// sampled real-Choi channel: real Kraus, dilation roundtrip, tensor-extension
// freeness, and the partial-transpose RNG criterion.
TEST(RealChoiEquivalence, FourWaySuite) {
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 2;
    const Channel ch = sample_real_choi_channel(d, 1300 + trial);

    const KrausSet ks = kraus_from_choi(ch);
    EXPECT_TRUE(ks.all_real(Tolerance{1e-8, 1e-8}));

    const Dilation dil = dilation_from_kraus(ks);
    const DensityMatrix rho = sample_density_matrix(d, 1400 + trial);
    EXPECT_LT(max_abs(apply_dilation(dil, rho).mat() - apply(ch, rho).mat()),
              1e-9);

    for (Index k = 2; k <= 3; ++k) {
      const Channel ext = tensor_with_identity(ch, k);
      const DensityMatrix real_bipartite =
          sample_real_density_matrix(d * k, 1500 + 10 * trial + k);
      EXPECT_LE(max_abs_imag(apply(ext, real_bipartite).mat()), 1e-8);
    }

    EXPECT_TRUE(is_rng(ch));
  }
}

TEST(RngCriterion, PartialTransposeContractionVanishesOnSymmetricStates) {
  // For RNG channels, Tr_B[(J - J^Gamma_A)(I (x) rho^T)] = 0 whenever rho is
  // symmetric.
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + trial % 2;
    const Channel ch = trial % 2 == 0 ? sample_real_choi_channel(d, 1600 + trial)
                                      : witness_channel();
    if (ch.dim_in() != d) continue;
    ASSERT_TRUE(is_rng(ch));
    const ComplexMatrix diff =
        ch.choi() - partial_transpose_a(ch.choi(), d, d);
    const DensityMatrix rho = sample_real_density_matrix(d, 1700 + trial);
    ComplexMatrix contracted = ComplexMatrix::Zero(d, d);
    for (Index m = 0; m < d; ++m) {
      for (Index n = 0; n < d; ++n) {
        Complex acc(0, 0);
        for (Index j = 0; j < d; ++j) {
          for (Index k = 0; k < d; ++k) {
            acc += diff(m * d + j, n * d + k) * rho.mat()(j, k);
          }
        }
        contracted(m, n) = acc;
      }
    }
    EXPECT_LE(max_abs(contracted), 1e-9);
  }
}

TEST(Convexity, MixturesOfRealChoiChannelsStayReal) {
  for (int trial = 0; trial < 10; ++trial) {
    const Channel a = sample_real_choi_channel(2, 1800 + trial);
    const Channel b = sample_real_choi_channel(2, 1900 + trial);
    const double p = 0.1 + 0.08 * trial;
    const Channel mix =
        Channel::from_choi(p * a.choi() + (1.0 - p) * b.choi(), 2, 2);
    EXPECT_TRUE(is_completely_rng(mix));
  }
}

}  // namespace
}  // namespace imaginarity
