#pragma once

#include "graphene/surface_tensors.hpp"

namespace graphene {

/// Orientation of the hexagonal lattice in the surface frame.
///
/// The armchair axis x^ sits at `theta_lattice` (counter-clockwise) from the
/// frame's first axis, the zigzag axis y^ is 90 degrees further on.
struct LatticeFrame {
  double theta_lattice{};
  Vec2 armchair{1.0, 0.0};
  Vec2 zigzag{0.0, 1.0};
  SurfTensor2 m_hat{1.0, -1.0, 0.0};  ///< x^ (x) x^ - y^ (x) y^
  SurfTensor2 n_hat{0.0, 0.0, 1.0};   ///< x^ (x) y^ + y^ (x) x^
};

LatticeFrame make_frame(double theta_lattice, FrameId frame = FrameId::global);

/// Triple contraction of the sixth-order C6v structural tensor:
/// H(a,b,c) = (M:a)(M:b)(M:c) - (M:a)(N:b)(N:c) - (N:a)(M:b)(N:c) - (N:a)(N:b)(M:c).
/// Only traceless parts of the arguments contribute.
double structural_contraction(const LatticeFrame& frame, const SurfTensor2& a, const SurfTensor2& b,
                              const SurfTensor2& c);

/// Amplitude/angle diagnostic of a symmetric tensor relative to the lattice:
/// 2A = tr(A) I + amplitude [cos(angle) M^ + sin(angle) N^].
struct LatticeAmplitude {
  double amplitude{};
  double angle{};
};

LatticeAmplitude lattice_amplitude(const LatticeFrame& frame, const SurfTensor2& a);

}  // namespace graphene
