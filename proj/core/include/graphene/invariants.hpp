#pragma once

#include <array>

#include "graphene/lattice.hpp"
#include "graphene/surface_tensors.hpp"

namespace graphene {

/// Invariants of the right surface Cauchy-Green tensor w.r.t. the C6v lattice.
struct InvariantState {
  double J1{1.0};  ///< area stretch J = sqrt(det C)
  double J2{};     ///< 1/2 C_bar_perp : C_bar_perp
  double J3{};     ///< 1/8 H(C_bar, C_bar, C_bar)
  double mC{};     ///< M^ : C_bar
  double nC{};     ///< N^ : C_bar
};

/// Invariants of the logarithmic strain E0 = 1/2 ln C.
struct LogInvariantState {
  double J1E{};  ///< ln J
  double J2E{};  ///< (ln lambda)^2 with lambda = sqrt(lambda1 / lambda2)
  double J3E{};  ///< (ln lambda)^3 cos(6 theta)
};

/// Taylor constants of the approximation of J2E, J3E in terms of J2, J3.
struct ApproxConstants {
  double e1{0.25};
  double e2{0.0811};
  double g1{0.125};
  double g2{0.06057};
};

inline constexpr ApproxConstants kTaylorConstants{};

struct LogApprox {
  double f1{};  ///< approximates J2E
  double f2{};  ///< approximates J3E
};

/// Contraction form (smooth at coincident eigenvalues). Throws
/// NotPositiveDefinite for det C <= 0 or tr C <= 0.
InvariantState invariants_C(const SurfTensor2& c, const LatticeFrame& frame);

/// Same invariants from the eigenvalue closed forms
/// J2 = 1/4 (L1/L2 + L2/L1 - 2), J3 = 1/8 (l1/l2 - l2/l1)^3 cos(6 theta).
/// Kept as an independent cross-check of invariants_C().
InvariantState invariants_C_spectral(const SurfTensor2& c, const LatticeFrame& frame);

LogInvariantState invariants_log_exact(const SurfTensor2& c, const LatticeFrame& frame);

LogApprox approx_log_invariants(const InvariantState& inv, const ApproxConstants& k = kTaylorConstants);

/// The nine joint invariants of C and the curvature tensor kappa, indexed
/// 0..8 for J1C, J2C, J3C, J4k, J5k, J6k, J7Ck, J8Ck, J9Ck.
using CurvatureInvariants = std::array<double, 9>;

CurvatureInvariants invariants_C_kappa(const SurfTensor2& c, const SurfTensor2& kappa, const LatticeFrame& frame);

/// Throws NotPositiveDefinite unless C is a valid right Cauchy-Green tensor.
void require_positive_definite(const SurfTensor2& c);

}  // namespace graphene
