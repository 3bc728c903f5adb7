#include "graphene/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <stdexcept>

#include "graphene/fd_check.hpp"

namespace graphene {

std::string to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::dilatation:
      return "dilatation";
    case ProtocolKind::uniaxial:
      return "uniaxial";
    case ProtocolKind::pure_shear:
      return "pure-shear";
  }
  return "?";
}

std::string to_string(Model m) { return m == Model::metric ? "metric" : "log"; }

ProtocolKind parse_protocol(const std::string& s) {
  if (s == "dilatation") return ProtocolKind::dilatation;
  if (s == "uniaxial") return ProtocolKind::uniaxial;
  if (s == "pure-shear" || s == "pure_shear") return ProtocolKind::pure_shear;
  throw std::invalid_argument("unknown protocol '" + s + "'");
}

Model parse_model(const std::string& s) {
  if (s == "metric") return Model::metric;
  if (s == "log") return Model::log;
  throw std::invalid_argument("unknown model '" + s + "'");
}

Mat2 protocol_deformation(ProtocolKind kind, double s) {
  switch (kind) {
    case ProtocolKind::dilatation: {
      const double l = std::sqrt(s);
      return {l, 0.0, 0.0, l};
    }
    case ProtocolKind::uniaxial:
      return {s, 0.0, 0.0, 1.0};
    case ProtocolKind::pure_shear:
      return {s, 0.0, 0.0, 1.0 / s};
  }
  return {};
}

namespace {

void check_protocol(const DeformationProtocol& p) {
  const auto in_range = [](double v) { return v >= kStretchMin && v <= kStretchMax; };
  if (!in_range(p.start) || !in_range(p.end))
    throw std::invalid_argument("sweep range must lie within [0.7, 1.6]");
  if (p.steps < 1) throw std::invalid_argument("steps must be >= 1");
}

double sweep_value(const DeformationProtocol& p, int i) {
  if (p.steps == 1) return p.start;
  return p.start + (p.end - p.start) * static_cast<double>(i) / static_cast<double>(p.steps - 1);
}

}  // namespace

std::vector<CurvePoint> run_curve(const DeformationProtocol& p, Model model, const MaterialParams& params) {
  check_protocol(p);
  const LatticeFrame frame = make_frame(-p.theta);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(p.steps));
  for (int i = 0; i < p.steps; ++i) {
    const double s = sweep_value(p, i);
    const Mat2 f = protocol_deformation(p.kind, s);
    const StressResult r = model == Model::metric ? stress_metric(f, frame, params) : stress_log(f, frame, params);
    out.push_back({i, s, r.sigma.c11, r.sigma.c22, r.sigma.c12, r.W});
  }
  return out;
}

ModelComparison compare_models(const DeformationProtocol& p, const MaterialParams& params) {
  const auto metric = run_curve(p, Model::metric, params);
  const auto log = run_curve(p, Model::log, params);
  std::array<double, 3> diff{}, scale{};
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const std::array<double, 3> m{metric[i].sigma11, metric[i].sigma22, metric[i].sigma12};
    const std::array<double, 3> l{log[i].sigma11, log[i].sigma22, log[i].sigma12};
    for (int k = 0; k < 3; ++k) {
      diff[k] = std::max(diff[k], std::abs(m[k] - l[k]));
      scale[k] = std::max(scale[k], std::abs(l[k]));
    }
  }
  const auto rel = [&](int k, double sc) { return sc > 0.0 ? diff[k] / sc : diff[k]; };
  return {rel(0, scale[0]), rel(1, scale[1]), rel(2, std::max(scale[0], scale[1]))};
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::vector<RandomState> random_states(int n, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eig(lo, hi);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<RandomState> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const double l1 = eig(rng), l2 = eig(rng), phi = angle(rng), theta = angle(rng);
    out.push_back({SurfTensor2::diag(l1, l2).rotated(phi), theta});
  }
  return out;
}

namespace {

struct Accumulator {
  CheckResult r;
  int n{};
  void add(double e) {
    r.max_error = std::max(r.max_error, e);
    r.mean_error += e;
    ++n;
  }
  CheckResult done() {
    if (n > 0) r.mean_error /= n;
    return r;
  }
};

Accumulator make_acc(std::string name, double tol, bool gated = true) {
  Accumulator a;
  a.r.name = std::move(name);
  a.r.tolerance = tol;
  a.r.gated = gated;
  return a;
}

/// FD tangent error with one Richardson retry when the plain check misses.
double tangent_error(const fd::TensorFn& s, const SurfTensor2& at, const Tangent4& analytic, double tol,
                     double factor) {
  const double plain = fd::relative_error(fd::jacobian(s, at, 1e-5, factor), analytic);
  if (plain < tol) return plain;
  return std::min(plain, fd::relative_error(fd::jacobian_richardson(s, at, 1e-5, factor), analytic));
}

VerifyReport verify_metric(const MaterialParams& p, int n, std::uint64_t seed, const VerifyTolerances& tol) {
  auto stress = make_acc("metric.stress_vs_fd_energy", tol.stress);
  auto tangent = make_acc("metric.tangent_vs_fd_stress", tol.tangent);
  auto sym = make_acc("metric.tangent_major_symmetry", tol.symmetry);
  auto rearr = make_acc("metric.rearranged_oplus_tangent", tol.rearrange);
  for (const auto& s : random_states(n, seed)) {
    const LatticeFrame frame = make_frame(s.theta_lattice);
    const auto w = [&](const SurfTensor2& c) { return energy_metric(c, frame, p); };
    const auto sf = [&](const SurfTensor2& c) { return pk2_stress_metric(c, frame, p); };
    stress.add(fd::relative_error(fd::gradient(w, s.C), pk2_stress_metric(s.C, frame, p)));
    const Tangent4 t = tangent_metric(s.C, frame, p);
    tangent.add(tangent_error(sf, s.C, t, tol.tangent, 2.0));
    sym.add(fd::relative_error(t.major_transposed(), t));
    rearr.add(fd::relative_error(rearrange(tangent_metric_oplus(s.C, frame, p)), t));
  }
  return {{stress.done(), tangent.done(), sym.done(), rearr.done()}};
}

VerifyReport verify_log(const MaterialParams& p, int n, std::uint64_t seed, const VerifyTolerances& tol) {
  auto stress = make_acc("log.stress_vs_fd_energy", tol.stress);
  auto sym = make_acc("log.tangent_major_symmetry", tol.log_symmetry);
  for (const auto& s : random_states(n, seed)) {
    const LatticeFrame frame = make_frame(s.theta_lattice);
    const auto w = [&](const SurfTensor2& c) { return energy_log(c, frame, p); };
    stress.add(fd::relative_error(fd::gradient(w, s.C), pk2_stress_log(s.C, frame, p)));
    const Tangent4 t = tangent_log(s.C, frame, p);
    sym.add(fd::relative_error(t.major_transposed(), t));
  }
  return {{stress.done(), sym.done()}};
}

VerifyReport verify_bending(int n, std::uint64_t seed, const VerifyTolerances& tol, double c_bend) {
  auto tau = make_acc("bending.tau_vs_fd_energy", tol.bending_stress);
  auto m0 = make_acc("bending.moment_vs_fd_energy", tol.bending_stress);
  auto tc = make_acc("bending.c_vs_fd_tau", tol.bending_tangent);
  auto td = make_acc("bending.d_vs_fd_tau", tol.bending_tangent);
  auto te = make_acc("bending.e_vs_fd_moment", tol.bending_tangent);
  auto tf = make_acc("bending.f_vs_fd_moment", tol.bending_tangent);
  auto ed = make_acc("bending.e_equals_d_transposed", std::numeric_limits<double>::denorm_min());
  auto printed = make_acc("bending.c_aa_printed_minus_derived", 0.0, false);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eig(kStretchMin, kStretchMax);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> curv(-1.0, 1.0);
  std::uniform_real_distribution<double> ref_area(0.7, 1.3);
  constexpr FrameId cv = FrameId::convected;
  for (int i = 0; i < n; ++i) {
    BendingKinematics k;
    k.a_cov = SurfTensor2::diag(eig(rng), eig(rng), cv).rotated(angle(rng));
    k.b_cov = {curv(rng), curv(rng), curv(rng), cv};
    k.det_A = ref_area(rng);

    const auto with_a = [k](const SurfTensor2& a) {
      BendingKinematics q = k;
      q.a_cov = a;
      return q;
    };
    const auto with_b = [k](const SurfTensor2& b) {
      BendingKinematics q = k;
      q.b_cov = b;
      return q;
    };
    const BendingStress s = bending_stress_moment(k, c_bend);
    const BendingTangents t = bending_tangents(k, c_bend);

    tau.add(fd::relative_error(
        fd::gradient([&](const SurfTensor2& a) { return canham_energy(with_a(a), c_bend); }, k.a_cov, 1e-6, 2.0),
        s.tau));
    m0.add(fd::relative_error(
        fd::gradient([&](const SurfTensor2& b) { return canham_energy(with_b(b), c_bend); }, k.b_cov, 1e-6, 1.0),
        s.M0));

    const auto tau_a = [&](const SurfTensor2& a) { return bending_stress_moment(with_a(a), c_bend).tau; };
    const auto tau_b = [&](const SurfTensor2& b) { return bending_stress_moment(with_b(b), c_bend).tau; };
    const auto m_a = [&](const SurfTensor2& a) { return bending_stress_moment(with_a(a), c_bend).M0; };
    const auto m_b = [&](const SurfTensor2& b) { return bending_stress_moment(with_b(b), c_bend).M0; };
    tc.add(tangent_error(tau_a, k.a_cov, t.c, tol.bending_tangent, 2.0));
    td.add(tangent_error(tau_b, k.b_cov, t.d, tol.bending_tangent, 1.0));
    te.add(tangent_error(m_a, k.a_cov, t.e, tol.bending_tangent, 2.0));
    tf.add(tangent_error(m_b, k.b_cov, t.f, tol.bending_tangent, 1.0));
    ed.add(max_abs(t.e - t.d.major_transposed()));

    const BendingCoefficients w = bending_coefficients(k, c_bend);
    printed.add(std::abs(w.c_aa_printed - w.c_aa));
  }
  return {{tau.done(), m0.done(), tc.done(), td.done(), te.done(), tf.done(), ed.done(), printed.done()}};
}

}  // namespace

VerifyReport verify_derivatives(VerifyModel model, const MaterialParams& params, int n_samples, std::uint64_t seed,
                                const VerifyTolerances& tol, double c_bend) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  switch (model) {
    case VerifyModel::metric:
      return verify_metric(params, n_samples, seed, tol);
    case VerifyModel::log:
      return verify_log(params, n_samples, seed, tol);
    case VerifyModel::bending:
      return verify_bending(n_samples, seed, tol, c_bend);
  }
  return {};
}

ContactResult contact_potential(double r, const ContactParams& cp) {
  if (!(r > 0.0)) throw std::domain_error("contact distance must be positive");
  const double q = cp.h0 / r;
  const double q3 = q * q * q;
  const double q9 = q3 * q3 * q3;
  ContactResult out;
  out.psi = -cp.gamma * (1.5 * q3 - 0.5 * q9);
  out.traction = cp.gamma * (-4.5 * q3 + 4.5 * q9) / r;
  return out;
}

double traction_extremum(const ContactParams& cp, double tol) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = cp.h0, hi = 3.0 * cp.h0;
  const auto t = [&](double r) { return contact_potential(r, cp).traction; };
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = t(x1), f2 = t(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = t(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = t(x2);
    }
  }
  return 0.5 * (lo + hi);
}

double BeamParams::I_y() const { return std::numbers::pi * r_m * r_m * r_m; }

BeamForces beam_force(const BeamParams& b, double delta_axial) {
  if (!(b.L > 0.0) || !(b.r_m > 0.0)) throw std::invalid_argument("beam length and radius must be positive");
  if (!(b.theta_w > 0.0 && b.theta_w < 0.5 * std::numbers::pi)) throw std::invalid_argument("theta_w must lie in (0, pi/2)");
  const double cot = std::tan(0.5 * std::numbers::pi - b.theta_w);
  BeamForces f;
  f.F_w = 3.0 * b.E * b.I_y() / (b.L * b.L * b.L) * cot * delta_axial;
  f.F_A = f.F_w * cot;
  return f;
}

double apex_angle(double declination_deg) {
  constexpr std::array<double, 5> allowed{60.0, 120.0, 180.0, 240.0, 300.0};
  const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](double d) { return d == declination_deg; });
  if (!ok) throw std::invalid_argument("declination must be one of 60, 120, 180, 240, 300 degrees");
  return 2.0 * std::asin(1.0 - declination_deg / 360.0) * 180.0 / std::numbers::pi;
}

}  // namespace graphene
