#include "graphene/curvilinear.hpp"

#include <cmath>

namespace graphene {

namespace {

/// P[a][i] = A^a . e_i
using Projector = std::array<std::array<double, 2>, 2>;

Projector projector(const SurfacePointGeometry& g, const ReferenceBasis& e) {
  Projector p{};
  for (int a = 0; a < 2; ++a) {
    Vec3 dual{};
    for (int k = 0; k < 3; ++k) dual[k] = g.A_con(a, 0) * g.A_tangent[0][k] + g.A_con(a, 1) * g.A_tangent[1][k];
    p[a][0] = dot(dual, e.e1);
    p[a][1] = dot(dual, e.e2);
  }
  return p;
}

SurfTensor2 project(const SurfTensor2& t, const Projector& p, FrameId target) {
  double r[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double s = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += p[a][i] * t(i, j) * p[b][j];
      r[a][b] = s;
    }
  return {r[0][0], r[1][1], 0.5 * (r[0][1] + r[1][0]), target};
}

/// A^ag x_gd A^db for covariant x.
SurfTensor2 raise_with(const SurfTensor2& con, const SurfTensor2& cov) {
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

ReferenceBasis default_basis(const SurfacePointGeometry& g) {
  const Vec3& a1 = g.A_tangent[0];
  const double l1 = std::sqrt(dot(a1, a1));
  ReferenceBasis e;
  e.e1 = {a1[0] / l1, a1[1] / l1, a1[2] / l1};
  Vec3 n = cross(g.A_tangent[0], g.A_tangent[1]);
  const double ln = std::sqrt(dot(n, n));
  n = {n[0] / ln, n[1] / ln, n[2] / ln};
  e.e2 = cross(n, e.e1);
  return e;
}

SurfTensor2 right_cauchy_green(const SurfacePointGeometry& g, const ReferenceBasis& e) {
  // C_ij = P[a][i] a_ab P[b][j]
  const Projector p = projector(g, e);
  double r[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += p[a][i] * g.a_cov(a, b) * p[b][j];
      r[i][j] = s;
    }
  return {r[0][0], r[1][1], 0.5 * (r[0][1] + r[1][0]), FrameId::global};
}

SurfTensor2 to_convected(const SurfTensor2& t, const SurfacePointGeometry& g, const ReferenceBasis& e) {
  if (t.frame != FrameId::global) throw FrameMismatch(t.frame, FrameId::global);
  return project(t, projector(g, e), FrameId::convected);
}

Tangent4 to_convected(const Tangent4& t, const SurfacePointGeometry& g, const ReferenceBasis& e) {
  if (t.frame != FrameId::global) throw FrameMismatch(t.frame, FrameId::global);
  const Projector p = projector(g, e);
  Tangent4 out{{}, t.layout, FrameId::convected};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          double s = 0.0;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s += p[a][i] * p[b][j] * p[c][k] * p[d][l] * t(i, j, k, l);
          out(a, b, c, d) = s;
        }
  return out;
}

InvariantState invariants_convected(const SurfacePointGeometry& g, const LatticeFrame& frame,
                                    const ReferenceBasis& e) {
  const Projector p = projector(g, e);
  const SurfTensor2 m = project(frame.m_hat, p, FrameId::convected);
  const SurfTensor2 n = project(frame.n_hat, p, FrameId::convected);
  const double J = std::sqrt(g.a_cov.det() / g.A_cov.det());
  const double trC = contract(g.a_cov, g.A_con);
  InvariantState inv;
  inv.J1 = J;
  inv.J2 = 0.25 * (trC / J) * (trC / J) - 1.0;
  inv.mC = contract(m, g.a_cov) / J;
  inv.nC = contract(n, g.a_cov) / J;
  inv.J3 = 0.125 * (inv.mC * inv.mC * inv.mC - 3.0 * inv.mC * inv.nC * inv.nC);
  return inv;
}

SurfTensor2 kirchhoff_curvilinear(const SurfacePointGeometry& g, const LatticeFrame& frame, const MaterialParams& p,
                                  const ReferenceBasis& e) {
  const Projector pr = projector(g, e);
  const SurfTensor2 m = project(frame.m_hat, pr, FrameId::convected);
  const SurfTensor2 n = project(frame.n_hat, pr, FrameId::convected);
  const InvariantState inv = invariants_convected(g, frame, e);
  const CoefficientSet h = coefficients(inv, p);
  const double J = inv.J1;
  const double trC = contract(g.a_cov, g.A_con);
  return h.H1 * g.a_con + (h.H2 / (J * J)) * (raise_with(g.A_con, g.a_cov) - 0.5 * trC * g.A_con) +
         (h.H3 / (4.0 * J)) * (h.aM * m + h.aN * n);
}

CurvilinearComponents curvilinear_components(const StressResult& s, const Tangent4& t, const SurfacePointGeometry& g,
                                             const ReferenceBasis& e) {
  return {to_convected(s.S, g, e), to_convected(t, g, e)};
}

}  // namespace graphene
