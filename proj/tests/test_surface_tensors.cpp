#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "graphene/surface_tensors.hpp"

using namespace graphene;

namespace {

SurfTensor2 random_spd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> e(0.5, 2.0), a(-3.2, 3.2);
  return SurfTensor2::diag(e(rng), e(rng)).rotated(a(rng));
}

SurfTensor2 random_sym(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST(SurfTensor2, InverseTimesSelfIsIdentity) {
  const SurfTensor2 c{1.3, 0.8, 0.2};
  const SurfTensor2 ci = c.inverse();
  EXPECT_NEAR(c.c11 * ci.c11 + c.c12 * ci.c12, 1.0, 1e-15);
  EXPECT_NEAR(c.c11 * ci.c12 + c.c12 * ci.c22, 0.0, 1e-15);
  EXPECT_NEAR(c.c12 * ci.c12 + c.c22 * ci.c22, 1.0, 1e-15);
}

TEST(SurfTensor2, DeviatorIsTraceless) {
  const SurfTensor2 d = SurfTensor2{2.0, -0.5, 0.7}.deviator();
  EXPECT_DOUBLE_EQ(d.trace(), 0.0);
  EXPECT_DOUBLE_EQ(d.c12, 0.7);
}

TEST(SurfTensor2, FrameMismatchThrows) {
  const SurfTensor2 g = SurfTensor2::identity();
  const SurfTensor2 c = SurfTensor2::identity(FrameId::convected);
  EXPECT_THROW(g + c, FrameMismatch);
  EXPECT_THROW(contract(g, c), FrameMismatch);
}

TEST(SurfTensor2, RotationKeepsInvariants) {
  const SurfTensor2 c{1.4, 0.9, -0.3};
  const SurfTensor2 r = c.rotated(0.77);
  EXPECT_NEAR(r.trace(), c.trace(), 1e-14);
  EXPECT_NEAR(r.det(), c.det(), 1e-14);
}

TEST(SurfTensor2, RotationMatchesQAQt) {
  const double a = 0.4;
  const SurfTensor2 c{1.4, 0.9, -0.3};
  const Mat2 q = rotation(a);
  const Mat2 m{c.c11, c.c12, c.c12, c.c22};
  const Mat2 out = q * m * q.transposed();
  const SurfTensor2 r = c.rotated(a);
  EXPECT_NEAR(r.c11, out.a11, 1e-14);
  EXPECT_NEAR(r.c22, out.a22, 1e-14);
  EXPECT_NEAR(r.c12, out.a12, 1e-14);
}

TEST(SurfTensor2, PushForwardMatchesMatrixProduct) {
  const Mat2 f{1.1, 0.2, -0.1, 0.95};
  const SurfTensor2 s{2.0, 1.0, 0.5};
  const Mat2 out = f * Mat2{s.c11, s.c12, s.c12, s.c22} * f.transposed();
  const SurfTensor2 p = push_forward(f, s);
  EXPECT_NEAR(p.c11, out.a11, 1e-14);
  EXPECT_NEAR(p.c22, out.a22, 1e-14);
  EXPECT_NEAR(p.c12, out.a12, 1e-14);
  const SurfTensor2 c = right_cauchy_green(f);
  EXPECT_NEAR(c.c11, 1.1 * 1.1 + 0.1 * 0.1, 1e-15);
  EXPECT_NEAR(c.c12, 1.1 * 0.2 - 0.1 * 0.95, 1e-15);
}

TEST(Spectral, ReconstructsRandomTensors) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const SurfTensor2 c = random_sym(rng);
    const SpectralDecomp sp = spectral(c);
    EXPECT_LT(max_abs(sp.reconstruct() - c), 1e-14);
    EXPECT_GE(sp.Lambda1, sp.Lambda2);
  }
}

TEST(Spectral, NearCoincidentEigenvaluesStayAccurate) {
  const SurfTensor2 c = SurfTensor2::diag(1.2, 1.2 + 1e-13).rotated(0.3);
  const SpectralDecomp sp = spectral(c);
  EXPECT_NEAR(sp.Lambda1, 1.2 + 1e-13, 1e-15);
  EXPECT_NEAR(sp.Lambda2, 1.2, 1e-15);
  const SpectralDecomp iso = spectral(SurfTensor2::diag(2.0, 2.0));
  EXPECT_EQ(iso.theta, 0.0);
}

TEST(Spectral, StretchesOfSpd) {
  const SpectralDecomp sp = spectral(SurfTensor2::diag(4.0, 0.25));
  EXPECT_DOUBLE_EQ(sp.lambda1, 2.0);
  EXPECT_DOUBLE_EQ(sp.lambda2, 0.5);
  EXPECT_TRUE(std::isnan(spectral(SurfTensor2::diag(1.0, -1.0)).lambda2));
}

TEST(Tangent4, ProductDefinitions) {
  const SurfTensor2 a{1.0, 2.0, 0.5}, b{-0.3, 0.7, 0.2};
  const Tangent4 ox = tensor_product(a, b), op = oplus_product(a, b), bx = boxtimes_product(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          EXPECT_DOUBLE_EQ(ox(i, j, k, l), a(i, j) * b(k, l));
          EXPECT_DOUBLE_EQ(op(i, j, k, l), a(i, l) * b(j, k));
          EXPECT_DOUBLE_EQ(bx(i, j, k, l), a(i, k) * b(j, l));
        }
}

TEST(Tangent4, RearrangeMapsOplusToTensorProduct) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const SurfTensor2 a = random_sym(rng), b = random_sym(rng);
    EXPECT_LT(max_abs(rearrange(oplus_product(a, b)) - tensor_product(a, b)), 1e-15);
    const Tangent4 t = boxtimes_product(a, b) + 2.0 * tensor_product(b, a);
    EXPECT_LT(max_abs(rearrange_inverse(rearrange(t)) - t), 1e-15);
  }
}

TEST(Tangent4, ContractionWithTensorProduct) {
  const SurfTensor2 a{1.0, 2.0, 0.5}, b{-0.3, 0.7, 0.2}, x{0.4, 1.1, -0.6};
  const SurfTensor2 r = contract(tensor_product(a, b), x);
  const double bx = b.c11 * x.c11 + b.c22 * x.c22 + 2.0 * b.c12 * x.c12;
  EXPECT_NEAR(r.c11, a.c11 * bx, 1e-15);
  EXPECT_NEAR(r.c12, a.c12 * bx, 1e-15);
  EXPECT_NEAR(r.c22, a.c22 * bx, 1e-15);
}

TEST(Tangent4, MajorTranspose) {
  const SurfTensor2 a{1.0, 2.0, 0.5}, b{-0.3, 0.7, 0.2};
  EXPECT_EQ(max_abs(tensor_product(a, b).major_transposed() - tensor_product(b, a)), 0.0);
  EXPECT_EQ(max_abs(sym_tensor_product(a, b).major_transposed() - sym_tensor_product(a, b)), 0.0);
  std::mt19937_64 rng(1);
  const SurfTensor2 c = random_spd(rng);
  EXPECT_TRUE(c.positive_definite());
}
