#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "graphene/fd_check.hpp"
#include "graphene/membrane.hpp"

using namespace graphene;

namespace {

struct State {
  SurfTensor2 C;
  LatticeFrame frame;
};

std::vector<State> states(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> e(0.7, 1.6), a(-std::numbers::pi, std::numbers::pi);
  std::vector<State> out;
  for (int i = 0; i < n; ++i) out.push_back({SurfTensor2::diag(e(rng), e(rng)).rotated(a(rng)), make_frame(a(rng))});
  return out;
}

const MaterialParams kSets[] = {MaterialParams::gga(), MaterialParams::lda()};

}  // namespace

TEST(Params, PresetsMatchTable) {
  const MaterialParams g = preset("gga");
  EXPECT_EQ(g.name, "GGA");
  EXPECT_DOUBLE_EQ(g.alpha_hat, 1.53);
  EXPECT_DOUBLE_EQ(g.epsilon, 93.84);
  EXPECT_DOUBLE_EQ(g.mu0, 172.18);
  EXPECT_DOUBLE_EQ(g.mu1, 27.03);
  EXPECT_DOUBLE_EQ(g.beta_hat, 5.16);
  EXPECT_DOUBLE_EQ(g.eta0, 94.65);
  EXPECT_DOUBLE_EQ(g.eta1, 4393.26);
  const MaterialParams l = preset("LDA");
  EXPECT_DOUBLE_EQ(l.alpha_hat, 1.38);
  EXPECT_DOUBLE_EQ(l.epsilon, 116.43);
  EXPECT_DOUBLE_EQ(l.mu0, 164.17);
  EXPECT_DOUBLE_EQ(l.mu1, 17.31);
  EXPECT_DOUBLE_EQ(l.beta_hat, 6.22);
  EXPECT_DOUBLE_EQ(l.eta0, 86.9);
  EXPECT_DOUBLE_EQ(l.eta1, 3611.5);
  EXPECT_THROW(preset("PBE"), std::invalid_argument);
}

TEST(MetricModel, ReferenceStateIsStressFree) {
  for (const auto& p : kSets) {
    const LatticeFrame f = make_frame(0.2);
    EXPECT_EQ(energy_metric(SurfTensor2::identity(), f, p), 0.0);
    EXPECT_LT(max_abs(pk2_stress_metric(SurfTensor2::identity(), f, p)), 1e-12 * p.epsilon);
  }
}

TEST(MetricModel, DilatationClosedForm) {
  for (const auto& p : kSets)
    for (double J : {0.8, 1.1, 1.3}) {
      const StressResult r = stress_metric(J * SurfTensor2::identity(), make_frame(0.4), p);
      const double h1 = p.epsilon * p.alpha_hat * p.alpha_hat * std::log(J) * std::exp(-p.alpha_hat * std::log(J));
      EXPECT_NEAR(r.S.c11, h1 / J, 1e-12 * p.epsilon);
      EXPECT_NEAR(r.S.c22, h1 / J, 1e-12 * p.epsilon);
      EXPECT_NEAR(r.S.c12, 0.0, 1e-12 * p.epsilon);
      EXPECT_NEAR(r.W, p.epsilon * (1.0 - (1.0 + p.alpha_hat * std::log(J)) * std::pow(J, -p.alpha_hat)),
                  1e-12 * p.epsilon);
    }
}

TEST(MetricModel, StressMatchesFiniteDifferenceOfEnergy) {
  for (const auto& p : kSets)
    for (const auto& s : states(50, 21)) {
      const SurfTensor2 fd = fd::gradient([&](const SurfTensor2& c) { return energy_metric(c, s.frame, p); }, s.C);
      EXPECT_LT(fd::relative_error(pk2_stress_metric(s.C, s.frame, p), fd), 1e-6);
    }
}

TEST(MetricModel, TangentMatchesFiniteDifferenceOfStress) {
  for (const auto& p : kSets)
    for (const auto& s : states(50, 22)) {
      const Tangent4 t = tangent_metric(s.C, s.frame, p);
      const Tangent4 fd =
          fd::jacobian([&](const SurfTensor2& c) { return pk2_stress_metric(c, s.frame, p); }, s.C);
      EXPECT_LT(fd::relative_error(fd, t), 1e-4);
      EXPECT_LT(fd::relative_error(t.major_transposed(), t), 1e-10);
    }
}

TEST(MetricModel, OplusAssemblyRearrangesToStandard) {
  for (const auto& s : states(50, 23)) {
    const Tangent4 t = tangent_metric(s.C, s.frame, MaterialParams::gga());
    const Tangent4 l = tangent_metric_oplus(s.C, s.frame, MaterialParams::gga());
    EXPECT_EQ(l.layout, TangentLayout::oplus);
    EXPECT_LT(fd::relative_error(rearrange(l), t), 1e-12);
  }
}

TEST(MetricModel, CombinedStressTangentMatchesSeparateCalls) {
  for (const auto& s : states(10, 24)) {
    const StressTangent st = stress_tangent_metric(s.C, s.frame, MaterialParams::lda());
    EXPECT_EQ(max_abs(st.S - pk2_stress_metric(s.C, s.frame, MaterialParams::lda())), 0.0);
    EXPECT_EQ(max_abs(st.C - tangent_metric(s.C, s.frame, MaterialParams::lda())), 0.0);
  }
}

TEST(MetricModel, PushForwardDefinitions) {
  const Mat2 f{1.15, 0.1, -0.05, 0.95};
  const StressResult r = stress_metric(f, make_frame(0.1), MaterialParams::gga());
  const double J = f.det();
  EXPECT_LT(max_abs(r.tau - push_forward(f, r.S)), 1e-13);
  EXPECT_LT(max_abs(r.sigma - (1.0 / J) * r.tau), 1e-13);
}

TEST(MetricModel, RejectsInvalidDeformation) {
  EXPECT_THROW(stress_metric(SurfTensor2::diag(1.0, -1.0), make_frame(0.0), MaterialParams::gga()),
               NotPositiveDefinite);
  EXPECT_THROW(tangent_metric(SurfTensor2::diag(0.0, 1.0), make_frame(0.0), MaterialParams::gga()),
               NotPositiveDefinite);
}

TEST(LogModel, ReferenceStateIsStressFree) {
  for (const auto& p : kSets) {
    const LatticeFrame f = make_frame(0.7);
    EXPECT_EQ(energy_log(SurfTensor2::identity(), f, p), 0.0);
    EXPECT_LT(max_abs(pk2_stress_log(SurfTensor2::identity(), f, p)), 1e-12 * p.epsilon);
  }
}

TEST(LogModel, DilatationEqualsMetricModel) {
  for (const auto& p : kSets)
    for (double J : {0.75, 1.2, 1.5}) {
      const SurfTensor2 c = J * SurfTensor2::identity();
      const LatticeFrame f = make_frame(0.3);
      EXPECT_LT(max_abs(pk2_stress_log(c, f, p) - pk2_stress_metric(c, f, p)), 1e-12 * p.epsilon);
      EXPECT_NEAR(energy_log(c, f, p), energy_metric(c, f, p), 1e-12 * p.epsilon);
    }
}

TEST(LogModel, StressMatchesFiniteDifferenceOfEnergy) {
  for (const auto& p : kSets)
    for (const auto& s : states(50, 25)) {
      const SurfTensor2 fd = fd::gradient([&](const SurfTensor2& c) { return energy_log(c, s.frame, p); }, s.C);
      EXPECT_LT(fd::relative_error(pk2_stress_log(s.C, s.frame, p), fd), 1e-6);
    }
}

TEST(LogModel, ContinuousThroughCoincidentEigenvalues) {
  const LatticeFrame f = make_frame(0.2);
  const MaterialParams p = MaterialParams::gga();
  const SurfTensor2 iso = SurfTensor2::diag(1.2, 1.2);
  const SurfTensor2 s0 = pk2_stress_log(iso, f, p);
  for (double d : {1e-13, 1e-10, 1e-8, 1e-6}) {
    const SurfTensor2 c = SurfTensor2::diag(1.2 + d, 1.2).rotated(0.4);
    const SurfTensor2 s = pk2_stress_log(c, f, p);
    EXPECT_TRUE(std::isfinite(s.c11) && std::isfinite(s.c12));
    EXPECT_LT(max_abs(s - s0), 1e3 * d * p.epsilon + 1e-12);
  }
}

TEST(LogModel, AgreesWithMetricModelForModerateStretch) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> l(1.0, 1.1), a(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    const double l1 = l(rng), l2 = l(rng);
    const SurfTensor2 c = SurfTensor2::diag(l1 * l1, l2 * l2).rotated(a(rng));
    const LatticeFrame f = make_frame(a(rng));
    const StressResult m = stress_metric(c, f, MaterialParams::gga()), g = stress_log(c, f, MaterialParams::gga());
    EXPECT_LT(max_abs(m.sigma - g.sigma), 0.01 * std::max(max_abs(g.sigma), 1e-3));
  }
}

TEST(LogModel, FiniteDifferenceTangentIsNearlySymmetric) {
  for (const auto& s : states(20, 27)) {
    const Tangent4 t = tangent_log(s.C, s.frame, MaterialParams::lda());
    EXPECT_LT(fd::relative_error(t.major_transposed(), t), 1e-6);
  }
}

TEST(RightStretch, SquaresToC) {
  const SurfTensor2 c = SurfTensor2{1.4, 0.9, 0.25};
  const SurfTensor2 u = right_stretch(c);
  EXPECT_NEAR(u.c11 * u.c11 + u.c12 * u.c12, c.c11, 1e-14);
  EXPECT_NEAR(u.c11 * u.c12 + u.c12 * u.c22, c.c12, 1e-14);
  EXPECT_NEAR(u.c12 * u.c12 + u.c22 * u.c22, c.c22, 1e-14);
}
