#pragma once

#include "graphene/geometry.hpp"
#include "graphene/surface_tensors.hpp"

namespace graphene {

/// Bending moduli c in nN nm.
namespace bending_modulus {
inline constexpr double kQM = 0.238;
inline constexpr double kFGBP = 0.133;
inline constexpr double kSGBP = 0.225;
}  // namespace bending_modulus

/// The pointwise state the Canham model depends on. a and b are treated as
/// independent symmetric tensors (convected components).
struct BendingKinematics {
  SurfTensor2 a_cov{1.0, 1.0, 0.0, FrameId::convected};
  SurfTensor2 b_cov{0.0, 0.0, 0.0, FrameId::convected};
  double det_A{1.0};

  static BendingKinematics from(const SurfacePointGeometry& g);
};

/// W_b = J c/2 (k1^2 + k2^2) = J c (2H^2 - kappa), per reference area.
double canham_energy(const BendingKinematics& k, double c_bend);
double canham_energy(const SurfacePointGeometry& g, double c_bend);

struct BendingStress {
  SurfTensor2 tau;  ///< tau_b^ab = 2 dW/da_ab
  SurfTensor2 M0;   ///< M0^ab = dW/db_ab
};

BendingStress bending_stress_moment(const BendingKinematics& k, double c_bend);
BendingStress bending_stress_moment(const SurfacePointGeometry& g, double c_bend);

/// Scalar weights of the bending tangents on the basis
/// a(x)a, a4, b(x)b, a(x)b, b(x)a with a4^abgd = -1/2 (a^ag a^bd + a^ad a^bg).
struct BendingCoefficients {
  double c_aa{}, c_a{}, c_bb{}, c_ab{};
  double d_aa{}, d_a{}, d_ab{}, d_ba{};
  double f_a{};
  /// c_aa exactly as typeset, -J(14H^2 + c kappa); kept for the report only.
  double c_aa_printed{};
};

BendingCoefficients bending_coefficients(const BendingKinematics& k, double c_bend);

struct BendingTangents {
  Tangent4 c;  ///< 2 d tau / da
  Tangent4 d;  ///< d tau / db
  Tangent4 e;  ///< 2 d M0 / da
  Tangent4 f;  ///< d M0 / db
};

BendingTangents bending_tangents(const BendingKinematics& k, double c_bend);
BendingTangents bending_tangents(const SurfacePointGeometry& g, double c_bend);

}  // namespace graphene
