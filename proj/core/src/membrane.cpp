#include "graphene/membrane.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "graphene/fd_check.hpp"

namespace graphene {

MaterialParams MaterialParams::gga() { return {"GGA", 1.53, 93.84, 172.18, 27.03, 5.16, 94.65, 4393.26}; }

// eta0/eta1 include the published correction of the LDA fit.
MaterialParams MaterialParams::lda() { return {"LDA", 1.38, 116.43, 164.17, 17.31, 6.22, 86.9, 3611.5}; }

MaterialParams preset(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (upper == "GGA") return MaterialParams::gga();
  if (upper == "LDA") return MaterialParams::lda();
  throw std::invalid_argument("unknown parameter set '" + std::string(name) + "' (expected GGA or LDA)");
}

namespace {

/// Dilatation term eps [1 - (1 + a ln J) J^-a], shared by both models.
double dilatation_energy(double log_j, const MaterialParams& p) {
  return p.epsilon * (1.0 - (1.0 + p.alpha_hat * log_j) * std::exp(-p.alpha_hat * log_j));
}

double metric_energy(const InvariantState& inv, const MaterialParams& p, const ApproxConstants& k) {
  const double log_j = std::log(inv.J1);
  const double mu = p.mu0 - p.mu1 * std::pow(inv.J1, p.beta_hat);
  const double eta = p.eta0 - p.eta1 * log_j * log_j;
  const LogApprox f = approx_log_invariants(inv, k);
  return dilatation_energy(log_j, p) + 2.0 * mu * f.f1 + eta * f.f2;
}

/// Shared pieces of stress and tangent evaluation.
struct MetricState {
  InvariantState inv;
  CoefficientSet h;
  SurfTensor2 c_inv;
  SurfTensor2 c_perp;
  SurfTensor2 z;
};

MetricState metric_state(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  MetricState st;
  st.inv = invariants_C(c, frame);
  st.h = coefficients(st.inv, p);
  st.c_inv = c.inverse();
  st.c_perp = ((1.0 / st.inv.J1) * c).deviator();
  st.z = st.h.aM * frame.m_hat + st.h.aN * frame.n_hat;
  return st;
}

SurfTensor2 metric_stress(const MetricState& st) {
  const double j = st.inv.J1;
  return st.h.H1 * st.c_inv + (st.h.H2 / j) * st.c_perp + (st.h.H3 / (4.0 * j)) * st.z;
}

enum class Order { standard, oplus };

/// Assembles the metric tangent. In `oplus` order every product is swapped
/// according to (x) <-> (+), [x] <-> [x], which is the inverse of rearrange().
Tangent4 metric_tangent(const MetricState& st, const LatticeFrame& frame, Order order) {
  const InvariantState& inv = st.inv;
  const CoefficientSet& h = st.h;
  const double j = inv.J1;
  const double j2 = j * j;
  const SurfTensor2 id = SurfTensor2::identity(st.c_inv.frame);
  const SurfTensor2& m = frame.m_hat;
  const SurfTensor2& n = frame.n_hat;

  const bool std_order = order == Order::standard;
  auto otimes = [&](const SurfTensor2& a, const SurfTensor2& b) {
    return std_order ? tensor_product(a, b) : oplus_product(a, b);
  };
  auto oplus = [&](const SurfTensor2& a, const SurfTensor2& b) {
    return std_order ? oplus_product(a, b) : tensor_product(a, b);
  };
  auto sym = [&](const SurfTensor2& a, const SurfTensor2& b) {
    return std_order ? sym_tensor_product(a, b) : sym_oplus_product(a, b);
  };

  const double dH1_dJ1 = h.dH[0][0];
  const double dH1_dJ2 = h.dH[0][1];
  const double dH1_dJ3 = h.dH[0][2];
  const double dH2_dJ2 = h.dH[1][1];
  const double dH3_dJ2 = h.dH[2][1];

  const double k_cc = 0.5 * j * dH1_dJ1 - inv.J2 * dH1_dJ2 - 1.5 * inv.J3 * dH1_dJ3;

  Tangent4 out = k_cc * otimes(st.c_inv, st.c_inv);
  out += (dH2_dJ2 / j2) * otimes(st.c_perp, st.c_perp);
  out += (2.0 / j * dH1_dJ2) * sym(st.c_inv, st.c_perp);
  out += (dH1_dJ3 / (4.0 * j)) * sym(st.c_inv, st.z);
  out += (dH3_dJ2 / (2.0 * j2)) * sym(st.z, st.c_perp);
  out -= (0.5 * h.H1) * (boxtimes_product(st.c_inv, st.c_inv) + oplus(st.c_inv, st.c_inv));
  out += (h.H2 / (2.0 * j2)) * (boxtimes_product(id, id) + oplus(id, id) - otimes(id, id));
  out += (1.5 * h.H3 / j2) *
         (inv.mC * (otimes(m, m) - otimes(n, n)) - inv.nC * (otimes(m, n) + otimes(n, m)));
  out *= 2.0;
  out.layout = std_order ? TangentLayout::standard : TangentLayout::oplus;
  return out;
}

}  // namespace

CoefficientSet coefficients(const InvariantState& inv, const MaterialParams& p, const ApproxConstants& k) {
  const double j = inv.J1;
  const double j2 = inv.J2;
  const double j3 = inv.J3;
  const double log_j = std::log(j);
  const double j_beta = std::pow(j, p.beta_hat);
  const double decay = std::exp(-p.alpha_hat * log_j);
  const double mu = p.mu0 - p.mu1 * j_beta;
  const double eta = p.eta0 - p.eta1 * log_j * log_j;
  const LogApprox f = approx_log_invariants(inv, k);
  const double shear_slope = k.e1 - 2.0 * k.e2 * j2;  // d f1 / d J2
  const double aniso_slope = k.g1 - k.g2 * j2;        // d f2 / d J3

  CoefficientSet out;
  out.H3 = eta * aniso_slope;
  out.H2 = 2.0 * (2.0 * mu * shear_slope - k.g2 * eta * j3);
  out.H1 = p.epsilon * p.alpha_hat * p.alpha_hat * log_j * decay - 2.0 * p.mu1 * p.beta_hat * j_beta * f.f1 -
           2.0 * p.eta1 * log_j * f.f2 - out.H2 * j2 - 3.0 * out.H3 * j3;

  out.aM = 3.0 * (inv.mC * inv.mC - inv.nC * inv.nC);
  out.aN = -6.0 * inv.mC * inv.nC;

  auto& d = out.dH;
  // d/dJ1
  d[1][0] = 2.0 * (2.0 * (-p.mu1 * p.beta_hat * j_beta / j * shear_slope) + 2.0 * k.g2 * p.eta1 / j * log_j * j3);
  d[2][0] = -2.0 * p.eta1 / j * log_j * aniso_slope;
  d[0][0] = p.epsilon * p.alpha_hat * p.alpha_hat / j * (1.0 - p.alpha_hat * log_j) * decay -
            2.0 * p.mu1 * p.beta_hat * p.beta_hat * j_beta / j * f.f1 - 2.0 * p.eta1 / j * f.f2 - d[1][0] * j2 -
            3.0 * d[2][0] * j3;
  // d/dJ2
  d[1][1] = -8.0 * mu * k.e2;
  d[2][1] = -eta * k.g2;
  d[0][1] = -2.0 * p.mu1 * p.beta_hat * j_beta * shear_slope + 2.0 * k.g2 * p.eta1 * log_j * j3 - out.H2 -
            d[1][1] * j2 - 3.0 * j3 * d[2][1];
  // d/dJ3
  d[1][2] = -2.0 * k.g2 * eta;
  d[2][2] = 0.0;
  d[0][2] = -2.0 * p.eta1 * aniso_slope * log_j - d[1][2] * j2 - 3.0 * out.H3;
  return out;
}

void push_forward_stress(StressResult& r, const Mat2& f) {
  r.tau = push_forward(f, r.S);
  r.sigma = (1.0 / f.det()) * r.tau;
}

SurfTensor2 right_stretch(const SurfTensor2& c) {
  require_positive_definite(c);
  SpectralDecomp sp = spectral(c);
  sp.Lambda1 = sp.lambda1;
  sp.Lambda2 = sp.lambda2;
  return sp.reconstruct();
}

namespace {

Mat2 as_mat(const SurfTensor2& u) { return {u.c11, u.c12, u.c12, u.c22}; }

}  // namespace

double energy_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  return metric_energy(invariants_C(c, frame), p, kTaylorConstants);
}

SurfTensor2 pk2_stress_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  return metric_stress(metric_state(c, frame, p));
}

StressResult stress_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  const MetricState st = metric_state(c, frame, p);
  StressResult r;
  r.S = metric_stress(st);
  r.W = metric_energy(st.inv, p, kTaylorConstants);
  push_forward_stress(r, as_mat(right_stretch(c)));
  return r;
}

StressResult stress_metric(const Mat2& f, const LatticeFrame& frame, const MaterialParams& p) {
  SurfTensor2 c = right_cauchy_green(f);
  c.frame = frame.m_hat.frame;
  const MetricState st = metric_state(c, frame, p);
  StressResult r;
  r.S = metric_stress(st);
  r.W = metric_energy(st.inv, p, kTaylorConstants);
  push_forward_stress(r, f);
  return r;
}

Tangent4 tangent_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  return metric_tangent(metric_state(c, frame, p), frame, Order::standard);
}

Tangent4 tangent_metric_oplus(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  return metric_tangent(metric_state(c, frame, p), frame, Order::oplus);
}

StressTangent stress_tangent_metric(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  const MetricState st = metric_state(c, frame, p);
  return {metric_stress(st), metric_tangent(st, frame, Order::standard)};
}

// ---------------------------------------------------------------------------
// log-strain reference model

namespace {

struct LogState {
  SpectralDecomp sp;
  SurfTensor2 e0;
  LogInvariantState inv;
};

LogState log_state(const SurfTensor2& c, const LatticeFrame& frame) {
  require_positive_definite(c);
  LogState st;
  st.sp = spectral(c);
  SpectralDecomp log_sp = st.sp;
  log_sp.Lambda1 = 0.5 * std::log(st.sp.Lambda1);
  log_sp.Lambda2 = 0.5 * std::log(st.sp.Lambda2);
  st.e0 = log_sp.reconstruct();
  const SurfTensor2 e_dev = st.e0.deviator();
  st.inv.J1E = st.e0.trace();
  st.inv.J2E = 0.5 * contract(e_dev, e_dev);
  st.inv.J3E = 0.125 * structural_contraction(frame, st.e0, st.e0, st.e0);
  return st;
}

double log_energy(const LogInvariantState& inv, const MaterialParams& p) {
  const double j = std::exp(inv.J1E);
  const double mu = p.mu0 - p.mu1 * std::pow(j, p.beta_hat);
  const double eta = p.eta0 - p.eta1 * inv.J1E * inv.J1E;
  return dilatation_energy(inv.J1E, p) + 2.0 * mu * inv.J2E + eta * inv.J3E;
}

/// (ln L1 - ln L2) / (L1 - L2), switching to its limit at coincidence.
double log_divided_difference(double l1, double l2) {
  if (std::abs(l1 - l2) < 1e-8 * (l1 + l2)) return 1.0 / std::sqrt(l1 * l2);
  const double x = (l1 - l2) / l2;
  return std::log1p(x) / (x * l2);
}

}  // namespace

double energy_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  return log_energy(log_state(c, frame).inv, p);
}

SurfTensor2 pk2_stress_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  const LogState st = log_state(c, frame);
  const LogInvariantState& inv = st.inv;

  const double j = std::exp(inv.J1E);
  const double mu = p.mu0 - p.mu1 * std::pow(j, p.beta_hat);
  const double eta = p.eta0 - p.eta1 * inv.J1E * inv.J1E;
  const double dw_dj1 = p.epsilon * p.alpha_hat * p.alpha_hat * inv.J1E * std::exp(-p.alpha_hat * inv.J1E) -
                        2.0 * p.mu1 * p.beta_hat * std::pow(j, p.beta_hat) * inv.J2E -
                        2.0 * p.eta1 * inv.J1E * inv.J3E;
  const double dw_dj2 = 2.0 * mu;
  const double dw_dj3 = eta;

  // T = dW/dE0
  const double me = contract(frame.m_hat, st.e0);
  const double ne = contract(frame.n_hat, st.e0);
  const SurfTensor2 z_e = 3.0 * (me * me - ne * ne) * frame.m_hat - 6.0 * me * ne * frame.n_hat;
  const SurfTensor2 t = dw_dj1 * SurfTensor2::identity(c.frame) + dw_dj2 * st.e0.deviator() + (0.125 * dw_dj3) * z_e;

  // S = 2 T : dE0/dC, diagonal in the principal basis of C apart from the
  // divided difference of the logarithm on the shear component.
  const SurfTensor2 t_principal = t.rotated(-st.sp.theta);
  const SurfTensor2 s_principal{t_principal.c11 / st.sp.Lambda1, t_principal.c22 / st.sp.Lambda2,
                                t_principal.c12 * log_divided_difference(st.sp.Lambda1, st.sp.Lambda2),
                                c.frame};

  return s_principal.rotated(st.sp.theta);
}

StressResult stress_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p) {
  StressResult r;
  r.S = pk2_stress_log(c, frame, p);
  r.W = energy_log(c, frame, p);
  push_forward_stress(r, as_mat(right_stretch(c)));
  return r;
}

StressResult stress_log(const Mat2& f, const LatticeFrame& frame, const MaterialParams& p) {
  SurfTensor2 c = right_cauchy_green(f);
  c.frame = frame.m_hat.frame;
  StressResult r;
  r.S = pk2_stress_log(c, frame, p);
  r.W = energy_log(c, frame, p);
  push_forward_stress(r, f);
  return r;
}

Tangent4 tangent_log(const SurfTensor2& c, const LatticeFrame& frame, const MaterialParams& p, double rel_step) {
  return fd::jacobian([&](const SurfTensor2& x) { return pk2_stress_log(x, frame, p); }, c, rel_step);
}

}  // namespace graphene
