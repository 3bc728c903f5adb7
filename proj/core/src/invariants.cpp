#include "graphene/invariants.hpp"

#include <cmath>
#include <sstream>

namespace graphene {

void require_positive_definite(const SurfTensor2& c) {
  if (!(c.det() > 0.0) || !(c.trace() > 0.0)) {
    std::ostringstream msg;
    msg << "right Cauchy-Green tensor is not positive definite (C11=" << c.c11 << ", C22=" << c.c22
        << ", C12=" << c.c12 << ")";
    throw NotPositiveDefinite(msg.str());
  }
}

InvariantState invariants_C(const SurfTensor2& c, const LatticeFrame& frame) {
  require_positive_definite(c);
  InvariantState out;
  out.J1 = std::sqrt(c.det());
  const SurfTensor2 c_bar = (1.0 / out.J1) * c;
  const SurfTensor2 c_perp = c_bar.deviator();
  out.J2 = 0.5 * contract(c_perp, c_perp);
  out.mC = contract(frame.m_hat, c_bar);
  out.nC = contract(frame.n_hat, c_bar);
  out.J3 = 0.125 * (out.mC * out.mC * out.mC - 3.0 * out.mC * out.nC * out.nC);
  return out;
}

InvariantState invariants_C_spectral(const SurfTensor2& c, const LatticeFrame& frame) {
  require_positive_definite(c);
  const SpectralDecomp sp = spectral(c);
  const double ratio = sp.lambda1 / sp.lambda2;
  const double skew = ratio - 1.0 / ratio;
  const double theta = sp.theta - frame.theta_lattice;

  InvariantState out;
  out.J1 = sp.lambda1 * sp.lambda2;
  out.J2 = 0.25 * skew * skew;
  out.J3 = 0.125 * skew * skew * skew * std::cos(6.0 * theta);
  // M^:C_bar = skew cos(2 theta), N^:C_bar = skew sin(2 theta)
  out.mC = skew * std::cos(2.0 * theta);
  out.nC = skew * std::sin(2.0 * theta);
  return out;
}

LogInvariantState invariants_log_exact(const SurfTensor2& c, const LatticeFrame& frame) {
  require_positive_definite(c);
  const SpectralDecomp sp = spectral(c);
  SpectralDecomp log_sp = sp;
  log_sp.Lambda1 = 0.5 * std::log(sp.Lambda1);
  log_sp.Lambda2 = 0.5 * std::log(sp.Lambda2);
  const SurfTensor2 e0 = log_sp.reconstruct();
  const SurfTensor2 e_dev = e0.deviator();

  LogInvariantState out;
  out.J1E = e0.trace();
  out.J2E = 0.5 * contract(e_dev, e_dev);
  out.J3E = 0.125 * structural_contraction(frame, e0, e0, e0);
  return out;
}

LogApprox approx_log_invariants(const InvariantState& inv, const ApproxConstants& k) {
  return {k.e1 * inv.J2 - k.e2 * inv.J2 * inv.J2, inv.J3 * (k.g1 - k.g2 * inv.J2)};
}

CurvatureInvariants invariants_C_kappa(const SurfTensor2& c, const SurfTensor2& kappa, const LatticeFrame& frame) {
  const InvariantState inv = invariants_C(c, frame);
  const SurfTensor2 c_bar = (1.0 / inv.J1) * c;
  return {inv.J1,
          inv.J2,
          inv.J3,
          0.5 * kappa.trace(),
          kappa.det(),
          0.125 * structural_contraction(frame, kappa, kappa, kappa),
          0.5 * contract(c_bar, kappa),
          0.125 * structural_contraction(frame, c_bar, c_bar, kappa),
          0.125 * structural_contraction(frame, kappa, kappa, c_bar)};
}

}  // namespace graphene
