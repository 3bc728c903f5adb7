#pragma once

#include <functional>

#include "graphene/surface_tensors.hpp"

namespace graphene::fd {

/// Symmetric unit direction for the (i, j) component of a surface tensor:
/// 1/2 (e_i (x) e_j + e_j (x) e_i). Differentiating along it returns
/// dW/dC : E, i.e. one component of dW/dC.
SurfTensor2 unit_direction(int i, int j, FrameId frame = FrameId::global);

using ScalarFn = std::function<double(const SurfTensor2&)>;
using TensorFn = std::function<SurfTensor2(const SurfTensor2&)>;

/// 2 dW/dC by central differences with step rel_step * |C|.
SurfTensor2 gradient(const ScalarFn& w, const SurfTensor2& c, double rel_step = 1e-6, double factor = 2.0);

/// factor * dS/dC by central differences, standard layout.
Tangent4 jacobian(const TensorFn& s, const SurfTensor2& c, double rel_step = 1e-5, double factor = 2.0);

/// Same as jacobian() with one Richardson extrapolation step (h and h/2),
/// for checks that fail marginally at the plain step.
Tangent4 jacobian_richardson(const TensorFn& s, const SurfTensor2& c, double rel_step = 1e-5,
                             double factor = 2.0);

/// |a - b|_max / max(|b|_max, floor)
double relative_error(const SurfTensor2& a, const SurfTensor2& b, double floor = 1e-300);
double relative_error(const Tangent4& a, const Tangent4& b, double floor = 1e-300);

}  // namespace graphene::fd
