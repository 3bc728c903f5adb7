#pragma once

#include <array>
#include <stdexcept>

#include "graphene/surface_tensors.hpp"

namespace graphene {

using Vec3 = std::array<double, 3>;

class SingularGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Kinematics at one point of a parametrized surface, reference (upper case)
/// and current (lower case) configuration. Metric and curvature components
/// refer to the convected basis.
struct SurfacePointGeometry {
  std::array<Vec3, 2> A_tangent{};  ///< A_alpha = dX/dxi^alpha
  std::array<Vec3, 2> a_tangent{};  ///< a_alpha = dx/dxi^alpha
  Vec3 normal{};                    ///< n = a_1 x a_2 / |a_1 x a_2|
  SurfTensor2 A_cov, A_con;         ///< A_ab, A^ab
  SurfTensor2 a_cov, a_con;         ///< a_ab, a^ab
  SurfTensor2 b_cov, b_con;         ///< b_ab, b^ab
  /// christoffel[g][a][b] = Gamma^g_ab = a_a,b . a^g
  std::array<std::array<std::array<double, 2>, 2>, 2> christoffel{};
  double H{};            ///< mean curvature, 1/nm
  double kappa_gauss{};  ///< Gaussian curvature, 1/nm^2
  double k1{}, k2{};     ///< principal curvatures, k1 >= k2
  double J{1.0};         ///< area stretch sqrt(det a / det A)
};

/// Builds the point geometry from tangent vectors and second parametric
/// derivatives of the current surface. Throws SingularGeometry for a
/// degenerate tangent plane in either configuration.
SurfacePointGeometry make_point_geometry(const std::array<Vec3, 2>& A_tangent, const std::array<Vec3, 2>& a_tangent,
                                         const std::array<std::array<Vec3, 2>, 2>& a_second);

enum class SurfaceKind { flat_patch, cylinder, cone, sphere };

/// Analytically parametrized test surface.
///
/// The base coordinates p = param_map * xi are mapped as follows (the
/// parameter order makes n point to the concave side, so curvatures of the
/// closed shapes come out positive):
///  - flat_patch: X = (p1, p2, 0), x = deformation * X (in plane);
///  - cylinder:   x = (R sin(p1/R), R cos(p1/R), p2), p1 circumferential;
///                reference is the unrolled sheet X = (p1, p2, 0);
///  - cone:       x = (p1 sin(b) cos(p2), p1 sin(b) sin(p2), tip_offset + p1 cos(b)),
///                p1 = slant distance from the apex, b = apex half-angle;
///                reference is the developed sector;
///  - sphere:     x = R (sin p2 cos p1, sin p2 sin p1, cos p2); reference is
///                the sphere itself.
struct AnalyticSurface {
  SurfaceKind kind{SurfaceKind::flat_patch};
  double radius{1.0};
  double apex_half_angle{0.5};
  double tip_offset{0.0};
  Mat2 param_map{};
  Mat2 deformation{};
  Vec2 lower{-1.0, -1.0};  ///< parametric bounds on xi
  Vec2 upper{1.0, 1.0};

  static AnalyticSurface flat(const Mat2& deformation = {}, const Mat2& param_map = {});
  static AnalyticSurface cylinder(double radius, const Mat2& param_map = {});
  static AnalyticSurface cone(double apex_half_angle, double tip_offset = 0.0, const Mat2& param_map = {});
  static AnalyticSurface sphere(double radius, const Mat2& param_map = {});
};

/// Throws std::out_of_range outside the bounds and SingularGeometry at the
/// cone apex or the sphere poles.
SurfacePointGeometry evaluate_geometry(const AnalyticSurface& s, Vec2 xi);

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

}  // namespace graphene
