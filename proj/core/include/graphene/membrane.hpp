#pragma once

#include <array>
#include <string>
#include <string_view>

#include "graphene/invariants.hpp"
#include "graphene/lattice.hpp"
#include "graphene/surface_tensors.hpp"

namespace graphene {

/// Membrane constants. Units: nm and nN, so moduli are in N/m (= nN/nm).
struct MaterialParams {
  std::string name;
  double alpha_hat{};
  double epsilon{};  ///< N/m
  double mu0{};      ///< N/m
  double mu1{};      ///< N/m
  double beta_hat{};
  double eta0{};  ///< N/m
  double eta1{};  ///< N/m

  static MaterialParams gga();
  static MaterialParams lda();
};

/// Looks up "GGA" or "LDA" (case-insensitive); throws std::invalid_argument otherwise.
MaterialParams preset(std::string_view name);

/// Energy derivative coefficients of the metric model.
struct CoefficientSet {
  double H1{}, H2{}, H3{};
  double aM{}, aN{};
  /// dH[i][j] = d H_{i+1} / d J_{j+1}
  std::array<std::array<double, 3>, 3> dH{};
};

CoefficientSet coefficients(const InvariantState& inv, const MaterialParams& p,
                            const ApproxConstants& k = kTaylorConstants);

struct StressResult {
  SurfTensor2 S;      ///< second Piola-Kirchhoff, N/m
  SurfTensor2 tau;    ///< Kirchhoff F S F^T, N/m
  SurfTensor2 sigma;  ///< Cauchy tau / J, N/m
  double W{};         ///< energy per reference area, N/m
};

/// Fills tau and sigma from S using the deformation gradient F.
void push_forward_stress(StressResult& r, const Mat2& f);

/// Metric model: W_m(J1, J2, J3) with the Taylor-approximated log invariants.
double energy_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);

/// 2 dW_m/dC only, without energy or push-forward.
SurfTensor2 pk2_stress_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);

/// tau/sigma are formed with the right stretch U = sqrt(C) unless F is given.
StressResult stress_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);
StressResult stress_metric(const Mat2& f, const LatticeFrame& frame, const MaterialParams& p);

/// 4 d^2 W_m / dC dC, standard layout.
Tangent4 tangent_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);

/// The same tangent assembled directly in the (+)-ordered layout; its
/// rearrange() equals tangent_metric().
Tangent4 tangent_metric_oplus(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);

struct StressTangent {
  SurfTensor2 S;
  Tangent4 C;
};

/// Stress and tangent sharing one invariant/coefficient evaluation.
StressTangent stress_tangent_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);

/// Log-strain reference model: the same functional evaluated on the exact
/// invariants of E0 = 1/2 ln C.
double energy_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);
/// S = 2 dW/dE0 : dE0/dC through the principal basis of C.
SurfTensor2 pk2_stress_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);
StressResult stress_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p);
StressResult stress_log(const Mat2& f, const LatticeFrame& frame, const MaterialParams& p);
/// Central difference of stress_log (relative step `rel_step` on C).
Tangent4 tangent_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p,
                     double rel_step = 1e-5);

/// Right stretch tensor U = sqrt(C).
SurfTensor2 right_stretch(const SurfTensor2& c);

}  // namespace graphene
