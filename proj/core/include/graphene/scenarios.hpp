#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphene/bending.hpp"
#include "graphene/lattice.hpp"
#include "graphene/membrane.hpp"

namespace graphene {

enum class ProtocolKind { dilatation, uniaxial, pure_shear };
enum class Model { metric, log };

std::string to_string(ProtocolKind k);
std::string to_string(Model m);
/// Accepts "dilatation", "uniaxial", "pure-shear" (or "pure_shear"); throws std::invalid_argument.
ProtocolKind parse_protocol(const std::string& s);
Model parse_model(const std::string& s);

/// Homogeneous sweep. `theta` is the pull direction measured from the
/// armchair axis (radians); all stresses are reported in the pull frame, in
/// which the lattice sits at -theta.
///  - uniaxial:   C = diag(lambda^2, 1)
///  - pure_shear: C = diag(lambda^2, lambda^-2)
///  - dilatation: C = J I, the sweep parameter being J
struct DeformationProtocol {
  ProtocolKind kind{ProtocolKind::uniaxial};
  double theta{0.0};
  double start{1.0};
  double end{1.25};
  int steps{26};
};

inline constexpr double kStretchMin = 0.7;
inline constexpr double kStretchMax = 1.6;

struct CurvePoint {
  int step{};
  double stretch{};  ///< lambda, or J for dilatation
  double sigma11{}, sigma22{}, sigma12{};
  double W{};
};

/// Stretch tensor F of the protocol at parameter value s.
Mat2 protocol_deformation(ProtocolKind kind, double s);

/// Throws std::invalid_argument for a range outside [0.7, 1.6] or steps < 1.
std::vector<CurvePoint> run_curve(const DeformationProtocol& p, Model model, const MaterialParams& params);

struct ModelComparison {
  double max_rel_sigma11{};
  double max_rel_sigma22{};
  double max_rel_sigma12{};
};

/// max_i |sigma_metric - sigma_log| / max_i |sigma_log| per component. The
/// shear entry is scaled by the largest normal stress, since sigma12 vanishes
/// on mirror axes.
ModelComparison compare_models(const DeformationProtocol& p, const MaterialParams& params);

enum class VerifyModel { metric, log, bending };

struct VerifyTolerances {
  double stress{1e-6};
  double tangent{1e-4};
  double symmetry{1e-10};
  double rearrange{1e-12};
  double log_symmetry{1e-6};
  double bending_stress{1e-6};
  double bending_tangent{1e-5};
};

struct CheckResult {
  std::string name;
  double max_error{};
  double mean_error{};
  double tolerance{};
  bool gated{true};
  [[nodiscard]] bool passed() const { return !gated || max_error < tolerance; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool passed() const;
};

/// Random states: eigenvalues of C in [0.7, 1.6], random principal and
/// lattice angles (metric, log); random (a, b, det A) pairs (bending).
VerifyReport verify_derivatives(VerifyModel model, const MaterialParams& params, int n_samples, std::uint64_t seed,
                                const VerifyTolerances& tol = {}, double c_bend = bending_modulus::kQM);

struct RandomState {
  SurfTensor2 C;
  double theta_lattice{};
};

/// Eigenvalues of C drawn uniformly in [lo, hi], with random axes and lattice angle.
std::vector<RandomState> random_states(int n, std::uint64_t seed, double lo = kStretchMin, double hi = kStretchMax);

struct ContactParams {
  double h0{0.34};    ///< nm
  double gamma{0.14};  ///< N/m
};

struct ContactResult {
  double psi{};       ///< N/m
  double traction{};  ///< -dpsi/dr, N/m per nm
};

/// psi = -Gamma [3/2 (h0/r)^3 - 1/2 (h0/r)^9]. Throws std::domain_error for r <= 0.
ContactResult contact_potential(double r, const ContactParams& cp = {});

/// Location of the traction extremum, by golden-section search on [h0, 3 h0].
double traction_extremum(const ContactParams& cp = {}, double tol = 1e-10);

struct BeamParams {
  double E{340.0};     ///< 2D modulus, N/m
  double r_m{1.0};     ///< mean radius (r_i + r_o)/2, nm
  double L{38.19};     ///< nm
  double theta_w{};    ///< radians
  [[nodiscard]] double I_y() const;
};

struct BeamForces {
  double F_w{};  ///< nN
  double F_A{};  ///< nN
};

/// Throws std::invalid_argument unless L > 0, r_m > 0 and 0 < theta_w < pi/2.
BeamForces beam_force(const BeamParams& b, double delta_axial);

/// 2 asin(1 - d/360) in degrees for d in {60, 120, 180, 240, 300};
/// throws std::invalid_argument otherwise.
double apex_angle(double declination_deg);

struct BenchmarkReport {
  int n_evals{};
  std::uint64_t seed{};
  double consistency_max_rel{};
  double consistency_limit{0.01};
  bool consistency_passed{};
  double calibration_s{};
  double metric_stress_s{}, log_stress_s{};
  double metric_full_s{}, log_full_s{};
  double ratio_stress{};
  double ratio_full{};
  double published_ratio{1.5};
  std::string environment;
};

/// Throws std::invalid_argument for n_evals < 10^4.
BenchmarkReport benchmark_models(const MaterialParams& params, int n_evals, std::uint64_t seed);

}  // namespace graphene
