#include "graphene/fd_check.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace graphene::fd {

namespace {

constexpr std::array<std::pair<int, int>, 3> kComponents{{{0, 0}, {1, 1}, {0, 1}}};

double step_for(const SurfTensor2& c, double rel_step) { return rel_step * std::max(norm(c), 1e-12); }

void set_column(Tangent4& t, int k, int l, const SurfTensor2& col) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      t(i, j, k, l) = col(i, j);
      t(i, j, l, k) = col(i, j);
    }
}

}  // namespace

SurfTensor2 unit_direction(int i, int j, FrameId frame) {
  SurfTensor2 e{0.0, 0.0, 0.0, frame};
  if (i == j) {
    (i == 0 ? e.c11 : e.c22) = 1.0;
  } else {
    e.c12 = 0.5;
  }
  return e;
}

SurfTensor2 gradient(const ScalarFn& w, const SurfTensor2& c, double rel_step, double factor) {
  const double h = step_for(c, rel_step);
  std::array<double, 3> d{};
  for (std::size_t n = 0; n < kComponents.size(); ++n) {
    const auto [i, j] = kComponents[n];
    const SurfTensor2 e = unit_direction(i, j, c.frame);
    d[n] = factor * (w(c + h * e) - w(c - h * e)) / (2.0 * h);
  }
  return {d[0], d[1], d[2], c.frame};
}

Tangent4 jacobian(const TensorFn& s, const SurfTensor2& c, double rel_step, double factor) {
  const double h = step_for(c, rel_step);
  Tangent4 out{{}, TangentLayout::standard, c.frame};
  for (const auto& [k, l] : kComponents) {
    const SurfTensor2 e = unit_direction(k, l, c.frame);
    const SurfTensor2 col = (factor / (2.0 * h)) * (s(c + h * e) - s(c - h * e));
    set_column(out, k, l, col);
  }
  return out;
}

Tangent4 jacobian_richardson(const TensorFn& s, const SurfTensor2& c, double rel_step, double factor) {
  const Tangent4 coarse = jacobian(s, c, rel_step, factor);
  const Tangent4 fine = jacobian(s, c, 0.5 * rel_step, factor);
  // central differences are O(h^2): (4 fine - coarse) / 3
  return (1.0 / 3.0) * (4.0 * fine - coarse);
}

double relative_error(const SurfTensor2& a, const SurfTensor2& b, double floor) {
  return max_abs(a - b) / std::max(max_abs(b), floor);
}

double relative_error(const Tangent4& a, const Tangent4& b, double floor) {
  return max_abs(a - b) / std::max(max_abs(b), floor);
}

}  // namespace graphene::fd
