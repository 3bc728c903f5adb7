#include "graphene/geometry.hpp"

#include <cmath>
#include <numbers>

namespace graphene {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

Vec3 axpy(double s, const Vec3& x, const Vec3& y) { return {s * x[0] + y[0], s * x[1] + y[1], s * x[2] + y[2]}; }

SurfTensor2 gram(const std::array<Vec3, 2>& t) {
  return {dot(t[0], t[0]), dot(t[1], t[1]), dot(t[0], t[1]), FrameId::convected};
}

SurfTensor2 invert_metric(const SurfTensor2& g, const char* which) {
  if (!(g.det() > 0.0)) throw SingularGeometry(std::string("degenerate ") + which + " metric");
  return g.inverse();
}

/// a^ag b_gd a^db
SurfTensor2 raise_both(const SurfTensor2& con, const SurfTensor2& cov) {
  double r[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double s = 0.0;
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) s += con(a, g) * cov(g, d) * con(d, b);
      r[a][b] = s;
    }
  return {r[0][0], r[1][1], 0.5 * (r[0][1] + r[1][0]), FrameId::convected};
}

}  // namespace

SurfacePointGeometry make_point_geometry(const std::array<Vec3, 2>& A_tangent, const std::array<Vec3, 2>& a_tangent,
                                         const std::array<std::array<Vec3, 2>, 2>& a_second) {
  SurfacePointGeometry g;
  g.A_tangent = A_tangent;
  g.a_tangent = a_tangent;
  g.A_cov = gram(A_tangent);
  g.a_cov = gram(a_tangent);
  g.A_con = invert_metric(g.A_cov, "reference");
  g.a_con = invert_metric(g.a_cov, "current");

  const Vec3 n = cross(a_tangent[0], a_tangent[1]);
  const double len = std::sqrt(dot(n, n));
  g.normal = {n[0] / len, n[1] / len, n[2] / len};

  double b[2][2];
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) b[a][c] = dot(g.normal, a_second[a][c]);
  g.b_cov = {b[0][0], b[1][1], 0.5 * (b[0][1] + b[1][0]), FrameId::convected};
  g.b_con = raise_both(g.a_con, g.b_cov);

  // dual vectors a^g = a^gd a_d
  std::array<Vec3, 2> dual{};
  for (int k = 0; k < 2; ++k) dual[k] = axpy(g.a_con(k, 0), a_tangent[0], {g.a_con(k, 1) * a_tangent[1][0],
                                                                            g.a_con(k, 1) * a_tangent[1][1],
                                                                            g.a_con(k, 1) * a_tangent[1][2]});
  for (int k = 0; k < 2; ++k)
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) g.christoffel[k][a][c] = dot(a_second[a][c], dual[k]);

  g.H = 0.5 * contract(g.a_con, g.b_cov);
  g.kappa_gauss = g.b_cov.det() / g.a_cov.det();
  const double disc = std::sqrt(std::max(g.H * g.H - g.kappa_gauss, 0.0));
  g.k1 = g.H + disc;
  g.k2 = g.H - disc;
  g.J = std::sqrt(g.a_cov.det() / g.A_cov.det());
  return g;
}

AnalyticSurface AnalyticSurface::flat(const Mat2& deformation, const Mat2& param_map) {
  AnalyticSurface s;
  s.kind = SurfaceKind::flat_patch;
  s.deformation = deformation;
  s.param_map = param_map;
  return s;
}

AnalyticSurface AnalyticSurface::cylinder(double radius, const Mat2& param_map) {
  AnalyticSurface s;
  s.kind = SurfaceKind::cylinder;
  s.radius = radius;
  s.param_map = param_map;
  s.lower = {-std::numbers::pi * radius, -10.0 * radius};
  s.upper = {std::numbers::pi * radius, 10.0 * radius};
  return s;
}

AnalyticSurface AnalyticSurface::cone(double apex_half_angle, double tip_offset, const Mat2& param_map) {
  AnalyticSurface s;
  s.kind = SurfaceKind::cone;
  s.apex_half_angle = apex_half_angle;
  s.tip_offset = tip_offset;
  s.param_map = param_map;
  s.lower = {0.0, -std::numbers::pi};
  s.upper = {100.0, std::numbers::pi};
  return s;
}

AnalyticSurface AnalyticSurface::sphere(double radius, const Mat2& param_map) {
  AnalyticSurface s;
  s.kind = SurfaceKind::sphere;
  s.radius = radius;
  s.param_map = param_map;
  s.lower = {-std::numbers::pi, 0.0};
  s.upper = {std::numbers::pi, std::numbers::pi};
  return s;
}

namespace {

/// Map value derivatives w.r.t. the base coordinates p.
struct BaseJet {
  std::array<Vec3, 2> X_p{};                 ///< reference dX/dp
  std::array<Vec3, 2> x_p{};                 ///< current dx/dp
  std::array<std::array<Vec3, 2>, 2> x_pp{};  ///< current d2x/dp dp
};

BaseJet base_jet(const AnalyticSurface& s, double p1, double p2) {
  BaseJet j;
  switch (s.kind) {
    case SurfaceKind::flat_patch: {
      const Mat2& f = s.deformation;
      j.X_p = {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}};
      j.x_p = {Vec3{f.a11, f.a21, 0.0}, Vec3{f.a12, f.a22, 0.0}};
      break;
    }
    case SurfaceKind::cylinder: {
      const double r = s.radius;
      const double c = std::cos(p1 / r), sn = std::sin(p1 / r);
      j.X_p = {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}};
      j.x_p = {Vec3{c, -sn, 0.0}, Vec3{0.0, 0.0, 1.0}};
      j.x_pp[0][0] = {-sn / r, -c / r, 0.0};
      break;
    }
    case SurfaceKind::cone: {
      if (p1 <= 0.0) throw SingularGeometry("cone evaluated at or beyond its apex");
      const double sb = std::sin(s.apex_half_angle), cb = std::cos(s.apex_half_angle);
      const double c = std::cos(p2), sn = std::sin(p2);
      j.x_p = {Vec3{sb * c, sb * sn, cb}, Vec3{-p1 * sb * sn, p1 * sb * c, 0.0}};
      j.x_pp[0][1] = j.x_pp[1][0] = {-sb * sn, sb * c, 0.0};
      j.x_pp[1][1] = {-p1 * sb * c, -p1 * sb * sn, 0.0};
      // developed sector: polar radius p1, polar angle p2 sin(b)
      const double phi = p2 * sb;
      j.X_p = {Vec3{std::cos(phi), std::sin(phi), 0.0}, Vec3{-p1 * sb * std::sin(phi), p1 * sb * std::cos(phi), 0.0}};
      break;
    }
    case SurfaceKind::sphere: {
      const double r = s.radius;
      const double s2 = std::sin(p2);
      if (std::abs(s2) < 1e-12) throw SingularGeometry("sphere evaluated at a pole");
      const double c1 = std::cos(p1), s1 = std::sin(p1), c2 = std::cos(p2);
      j.x_p = {Vec3{-r * s2 * s1, r * s2 * c1, 0.0}, Vec3{r * c2 * c1, r * c2 * s1, -r * s2}};
      j.x_pp[0][0] = {-r * s2 * c1, -r * s2 * s1, 0.0};
      j.x_pp[0][1] = j.x_pp[1][0] = {-r * c2 * s1, r * c2 * c1, 0.0};
      j.x_pp[1][1] = {-r * s2 * c1, -r * s2 * s1, -r * c2};
      j.X_p = j.x_p;
      break;
    }
  }
  return j;
}

}  // namespace

SurfacePointGeometry evaluate_geometry(const AnalyticSurface& s, Vec2 xi) {
  if (xi.x < s.lower.x || xi.x > s.upper.x || xi.y < s.lower.y || xi.y > s.upper.y)
    throw std::out_of_range("parametric point outside the surface bounds");

  const Mat2& p = s.param_map;
  const double p1 = p.a11 * xi.x + p.a12 * xi.y;
  const double p2 = p.a21 * xi.x + p.a22 * xi.y;
  const BaseJet jet = base_jet(s, p1, p2);

  // chain rule: d/dxi^a = sum_i P_ia d/dp_i
  const double pm[2][2] = {{p.a11, p.a12}, {p.a21, p.a22}};
  std::array<Vec3, 2> A{}, a{};
  std::array<std::array<Vec3, 2>, 2> a2{};
  for (int al = 0; al < 2; ++al) {
    for (int i = 0; i < 2; ++i) {
      A[al] = axpy(pm[i][al], jet.X_p[i], A[al]);
      a[al] = axpy(pm[i][al], jet.x_p[i], a[al]);
    }
    for (int be = 0; be < 2; ++be)
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) a2[al][be] = axpy(pm[i][al] * pm[k][be], jet.x_pp[i][k], a2[al][be]);
  }
  return make_point_geometry(A, a, a2);
}

}  // namespace graphene
