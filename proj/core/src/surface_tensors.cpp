#include "graphene/surface_tensors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>

namespace graphene {

namespace {

void require_same_frame(FrameId a, FrameId b) {
  if (a != b) throw FrameMismatch(a, b);
}

}  // namespace

FrameMismatch::FrameMismatch(FrameId a, FrameId b)
    : std::invalid_argument("surface tensors refer to different frames (" +
                            std::to_string(static_cast<std::uint32_t>(a)) + " vs " +
                            std::to_string(static_cast<std::uint32_t>(b)) + ")") {}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

SurfTensor2 SurfTensor2::sym_dyad(Vec2 a, Vec2 b, FrameId f) {
  return {a.x * b.x, a.y * b.y, 0.5 * (a.x * b.y + a.y * b.x), f};
}

SurfTensor2 SurfTensor2::inverse() const {
  const double d = det();
  if (d == 0.0) throw std::domain_error("inverse of a singular surface tensor");
  return {c22 / d, c11 / d, -c12 / d, frame};
}

SurfTensor2 SurfTensor2::deviator() const {
  const double half_tr = 0.5 * trace();
  return {c11 - half_tr, c22 - half_tr, c12, frame};
}

SurfTensor2 SurfTensor2::rotated(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  // Q A Q^T with Q = [[c, -s], [s, c]]
  const double r11 = c * c * c11 - 2.0 * c * s * c12 + s * s * c22;
  const double r22 = s * s * c11 + 2.0 * c * s * c12 + c * c * c22;
  const double r12 = c * s * (c11 - c22) + (c * c - s * s) * c12;
  return {r11, r22, r12, frame};
}

SurfTensor2 operator+(const SurfTensor2& a, const SurfTensor2& b) {
  require_same_frame(a.frame, b.frame);
  return {a.c11 + b.c11, a.c22 + b.c22, a.c12 + b.c12, a.frame};
}

SurfTensor2 operator-(const SurfTensor2& a, const SurfTensor2& b) {
  require_same_frame(a.frame, b.frame);
  return {a.c11 - b.c11, a.c22 - b.c22, a.c12 - b.c12, a.frame};
}

SurfTensor2 operator*(double s, const SurfTensor2& a) { return {s * a.c11, s * a.c22, s * a.c12, a.frame}; }

double contract(const SurfTensor2& a, const SurfTensor2& b) {
  require_same_frame(a.frame, b.frame);
  return a.c11 * b.c11 + a.c22 * b.c22 + 2.0 * a.c12 * b.c12;
}

double max_abs(const SurfTensor2& a) { return std::max({std::abs(a.c11), std::abs(a.c22), std::abs(a.c12)}); }

double norm(const SurfTensor2& a) { return std::sqrt(a.c11 * a.c11 + a.c22 * a.c22 + 2.0 * a.c12 * a.c12); }

SurfTensor2 push_forward(const Mat2& f, const SurfTensor2& s) {
  // (F S)
  const double m11 = f.a11 * s.c11 + f.a12 * s.c12;
  const double m12 = f.a11 * s.c12 + f.a12 * s.c22;
  const double m21 = f.a21 * s.c11 + f.a22 * s.c12;
  const double m22 = f.a21 * s.c12 + f.a22 * s.c22;
  return {m11 * f.a11 + m12 * f.a12, m21 * f.a21 + m22 * f.a22, m11 * f.a21 + m12 * f.a22, s.frame};
}

SurfTensor2 right_cauchy_green(const Mat2& f) {
  return {f.a11 * f.a11 + f.a21 * f.a21, f.a12 * f.a12 + f.a22 * f.a22, f.a11 * f.a12 + f.a21 * f.a22,
          FrameId::global};
}

Vec2 SpectralDecomp::y1() const { return {std::cos(theta), std::sin(theta)}; }
Vec2 SpectralDecomp::y2() const { return {-std::sin(theta), std::cos(theta)}; }

SurfTensor2 SpectralDecomp::reconstruct() const {
  return SurfTensor2::diag(Lambda1, Lambda2, frame).rotated(theta);
}

SpectralDecomp spectral(const SurfTensor2& t) {
  const double mean = 0.5 * (t.c11 + t.c22);
  const double half_diff = 0.5 * (t.c11 - t.c22);
  const double radius = std::hypot(half_diff, t.c12);

  SpectralDecomp out;
  out.frame = t.frame;
  // The eigenvalue of smaller magnitude comes from the product form, which
  // avoids cancellation.
  if (mean >= 0.0) {
    out.Lambda1 = mean + radius;
    out.Lambda2 = out.Lambda1 != 0.0 ? t.det() / out.Lambda1 : 0.0;
  } else {
    out.Lambda2 = mean - radius;
    out.Lambda1 = t.det() / out.Lambda2;
  }
  out.theta = radius == 0.0 ? 0.0 : 0.5 * std::atan2(t.c12, half_diff);
  if (out.theta <= -0.5 * std::numbers::pi) out.theta += std::numbers::pi;

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  out.lambda1 = out.Lambda1 >= 0.0 ? std::sqrt(out.Lambda1) : nan;
  out.lambda2 = out.Lambda2 >= 0.0 ? std::sqrt(out.Lambda2) : nan;
  return out;
}

Tangent4 Tangent4::major_transposed() const {
  Tangent4 out{{}, layout, frame};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(a, b, c, d) = (*this)(c, d, a, b);
  return out;
}

Tangent4& Tangent4::operator+=(const Tangent4& o) {
  require_same_frame(frame, o.frame);
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
  return *this;
}

Tangent4& Tangent4::operator-=(const Tangent4& o) {
  require_same_frame(frame, o.frame);
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] -= o.comp[i];
  return *this;
}

Tangent4& Tangent4::operator*=(double s) {
  for (double& v : comp) v *= s;
  return *this;
}

Tangent4 operator+(Tangent4 a, const Tangent4& b) { return a += b; }
Tangent4 operator-(Tangent4 a, const Tangent4& b) { return a -= b; }
Tangent4 operator*(double s, Tangent4 a) { return a *= s; }

double max_abs(const Tangent4& t) {
  double m = 0.0;
  for (double v : t.comp) m = std::max(m, std::abs(v));
  return m;
}

SurfTensor2 contract(const Tangent4& t, const SurfTensor2& a) {
  require_same_frame(t.frame, a.frame);
  auto row = [&](int i, int j) {
    double s = 0.0;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) s += t(i, j, k, l) * a(k, l);
    return s;
  };
  return {row(0, 0), row(1, 1), 0.5 * (row(0, 1) + row(1, 0)), t.frame};
}

namespace {

template <typename Fn>
Tangent4 build(const SurfTensor2& a, const SurfTensor2& b, Fn&& fn) {
  require_same_frame(a.frame, b.frame);
  Tangent4 out{{}, TangentLayout::standard, a.frame};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(i, j, k, l) = fn(i, j, k, l);
  return out;
}

}  // namespace

Tangent4 tensor_product(const SurfTensor2& a, const SurfTensor2& b) {
  return build(a, b, [&](int i, int j, int k, int l) { return a(i, j) * b(k, l); });
}

Tangent4 oplus_product(const SurfTensor2& a, const SurfTensor2& b) {
  return build(a, b, [&](int i, int j, int k, int l) { return a(i, l) * b(j, k); });
}

Tangent4 boxtimes_product(const SurfTensor2& a, const SurfTensor2& b) {
  return build(a, b, [&](int i, int j, int k, int l) { return a(i, k) * b(j, l); });
}

Tangent4 sym_tensor_product(const SurfTensor2& a, const SurfTensor2& b) {
  return build(a, b, [&](int i, int j, int k, int l) { return 0.5 * (a(i, j) * b(k, l) + b(i, j) * a(k, l)); });
}

Tangent4 sym_oplus_product(const SurfTensor2& a, const SurfTensor2& b) {
  return build(a, b, [&](int i, int j, int k, int l) { return 0.5 * (a(i, l) * b(j, k) + b(i, l) * a(j, k)); });
}

Tangent4 rearrange(const Tangent4& t) {
  Tangent4 out{{}, TangentLayout::standard, t.frame};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) out(a, b, g, d) = t(a, g, d, b);
  return out;
}

Tangent4 rearrange_inverse(const Tangent4& t) {
  Tangent4 out{{}, TangentLayout::oplus, t.frame};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) out(a, g, d, b) = t(a, b, g, d);
  return out;
}

}  // namespace graphene
