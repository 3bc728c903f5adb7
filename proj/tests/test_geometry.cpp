#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "graphene/geometry.hpp"

using namespace graphene;

namespace {

void expect_consistent(const SurfacePointGeometry& g) {
  const SurfTensor2 I = SurfTensor2::identity(FrameId::convected);
  const auto product_is_identity = [&](const SurfTensor2& cov, const SurfTensor2& con) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0.0;
        for (int k = 0; k < 2; ++k) s += cov(a, k) * con(k, b);
        EXPECT_NEAR(s, I(a, b), 1e-12);
      }
  };
  product_is_identity(g.A_cov, g.A_con);
  product_is_identity(g.a_cov, g.a_con);
  EXPECT_NEAR(dot(g.normal, g.normal), 1.0, 1e-14);
  EXPECT_NEAR(dot(g.normal, g.a_tangent[0]), 0.0, 1e-12);
  EXPECT_NEAR(dot(g.normal, g.a_tangent[1]), 0.0, 1e-12);
  EXPECT_NEAR(g.H, 0.5 * (g.k1 + g.k2), 1e-12);
  EXPECT_NEAR(g.kappa_gauss, g.k1 * g.k2, 1e-12);
}

}  // namespace

TEST(Geometry, FlatPatchHasNoCurvature) {
  const SurfacePointGeometry g = evaluate_geometry(AnalyticSurface::flat({1.1, 0.2, 0.0, 0.9}), {0.1, 0.2});
  expect_consistent(g);
  EXPECT_EQ(g.b_cov.c11, 0.0);
  EXPECT_EQ(g.b_cov.c12, 0.0);
  EXPECT_EQ(g.H, 0.0);
  EXPECT_EQ(g.kappa_gauss, 0.0);
  EXPECT_NEAR(g.J, 1.1 * 0.9, 1e-15);
  for (const auto& layer : g.christoffel)
    for (const auto& row : layer)
      for (double v : row) EXPECT_EQ(v, 0.0);
}

TEST(Geometry, CylinderCurvatures) {
  for (Vec2 xi : {Vec2{0.0, 0.0}, Vec2{1.3, -2.0}, Vec2{-4.0, 5.0}}) {
    const SurfacePointGeometry g = evaluate_geometry(AnalyticSurface::cylinder(2.0), xi);
    expect_consistent(g);
    EXPECT_NEAR(g.H, 0.25, 1e-14);
    EXPECT_NEAR(g.kappa_gauss, 0.0, 1e-14);
    EXPECT_NEAR(g.k1, 0.5, 1e-14);
    EXPECT_NEAR(g.k2, 0.0, 1e-14);
    EXPECT_NEAR(g.J, 1.0, 1e-14);
  }
}

TEST(Geometry, SphereCurvaturesAndChristoffel) {
  const double phi = 0.8;
  const SurfacePointGeometry g = evaluate_geometry(AnalyticSurface::sphere(2.0), {0.3, phi});
  expect_consistent(g);
  EXPECT_NEAR(g.H, 0.5, 1e-14);
  EXPECT_NEAR(g.kappa_gauss, 0.25, 1e-14);
  EXPECT_NEAR(g.k1, 0.5, 1e-7);
  EXPECT_NEAR(g.k2, 0.5, 1e-7);
  EXPECT_NEAR(g.J, 1.0, 1e-14);
  // xi1 = azimuth, xi2 = polar angle
  EXPECT_NEAR(g.christoffel[0][0][1], std::cos(phi) / std::sin(phi), 1e-13);
  EXPECT_NEAR(g.christoffel[1][0][0], -std::sin(phi) * std::cos(phi), 1e-13);
  EXPECT_NEAR(g.christoffel[1][1][1], 0.0, 1e-13);
}

TEST(Geometry, ConeCurvatures) {
  const double beta = 0.4, s = 2.5;
  const SurfacePointGeometry g = evaluate_geometry(AnalyticSurface::cone(beta, 1.0), {s, 0.7});
  expect_consistent(g);
  EXPECT_NEAR(g.k1, 1.0 / (s * std::tan(beta)), 1e-13);
  EXPECT_NEAR(g.k2, 0.0, 1e-13);
  EXPECT_NEAR(g.J, 1.0, 1e-14);
}

TEST(Geometry, SingularAndOutOfBoundsPoints) {
  EXPECT_THROW(evaluate_geometry(AnalyticSurface::cone(0.4), {0.0, 0.1}), SingularGeometry);
  EXPECT_THROW(evaluate_geometry(AnalyticSurface::sphere(1.0), {0.2, 0.0}), SingularGeometry);
  EXPECT_THROW(evaluate_geometry(AnalyticSurface::flat(), {2.0, 0.0}), std::out_of_range);
  EXPECT_THROW(evaluate_geometry(AnalyticSurface::flat({1.0, 1.0, 1.0, 1.0}), {0.0, 0.0}), SingularGeometry);
}

TEST(Geometry, ReparametrizationKeepsScalarCurvatures) {
  const Mat2 p{1.0, 0.4, 0.1, 1.3};
  const SurfacePointGeometry a = evaluate_geometry(AnalyticSurface::cylinder(1.5, p), {0.2, 0.3});
  expect_consistent(a);
  EXPECT_NEAR(a.H, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(a.kappa_gauss, 0.0, 1e-14);
  EXPECT_GT(std::abs(a.a_cov.c12), 0.1);
}
