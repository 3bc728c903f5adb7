#include "graphene/lattice.hpp"

#include <cmath>

namespace graphene {

LatticeFrame make_frame(double theta_lattice, FrameId frame) {
  const double c = std::cos(theta_lattice);
  const double s = std::sin(theta_lattice);
  const Vec2 x{c, s};
  const Vec2 y{-s, c};

  LatticeFrame out;
  out.theta_lattice = theta_lattice;
  out.armchair = x;
  out.zigzag = y;
  out.m_hat = SurfTensor2::sym_dyad(x, x, frame) - SurfTensor2::sym_dyad(y, y, frame);
  out.n_hat = 2.0 * SurfTensor2::sym_dyad(x, y, frame);
  return out;
}

double structural_contraction(const LatticeFrame& frame, const SurfTensor2& a, const SurfTensor2& b,
                              const SurfTensor2& c) {
  const double ma = contract(frame.m_hat, a), na = contract(frame.n_hat, a);
  const double mb = contract(frame.m_hat, b), nb = contract(frame.n_hat, b);
  const double mc = contract(frame.m_hat, c), nc = contract(frame.n_hat, c);
  return ma * mb * mc - ma * nb * nc - na * mb * nc - na * nb * mc;
}

LatticeAmplitude lattice_amplitude(const LatticeFrame& frame, const SurfTensor2& a) {
  const double m = contract(frame.m_hat, a);
  const double n = contract(frame.n_hat, a);
  return {std::hypot(m, n), std::atan2(n, m)};
}

}  // namespace graphene
