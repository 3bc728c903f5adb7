#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphene {

/// Identifier of the basis a set of surface tensor components refers to.
///
/// `global` is the orthonormal frame all homogeneous computations run in;
/// `convected` marks components taken w.r.t. a curvilinear (non-orthonormal)
/// basis. Any other value may be used for user-declared frames.
enum class FrameId : std::uint32_t { global = 0, convected = 1 };

class FrameMismatch : public std::invalid_argument {
 public:
  FrameMismatch(FrameId a, FrameId b);
};

class NotPositiveDefinite : public std::domain_error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : std::domain_error(what) {}
};

struct Vec2 {
  double x{};
  double y{};
};

/// General (not necessarily symmetric) 2x2 matrix, used for the surface
/// deformation gradient.
struct Mat2 {
  double a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

  [[nodiscard]] double det() const { return a11 * a22 - a12 * a21; }
  [[nodiscard]] Mat2 transposed() const { return {a11, a21, a12, a22}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 rotation(double angle);

/// Symmetric 2x2 surface tensor: three stored components in a declared frame.
struct SurfTensor2 {
  double c11{};
  double c22{};
  double c12{};
  FrameId frame{FrameId::global};

  static SurfTensor2 identity(FrameId f = FrameId::global) { return {1.0, 1.0, 0.0, f}; }
  static SurfTensor2 diag(double d1, double d2, FrameId f = FrameId::global) {
    return {d1, d2, 0.0, f};
  }
  /// a (x) b + b (x) a, halved: the symmetric dyad of two vectors.
  static SurfTensor2 sym_dyad(Vec2 a, Vec2 b, FrameId f = FrameId::global);

  /// Zero-based component access.
  [[nodiscard]] double operator()(int i, int j) const {
    if (i == j) return i == 0 ? c11 : c22;
    return c12;
  }

  [[nodiscard]] double trace() const { return c11 + c22; }
  [[nodiscard]] double det() const { return c11 * c22 - c12 * c12; }
  [[nodiscard]] SurfTensor2 inverse() const;
  /// Traceless part A - tr(A)/2 I.
  [[nodiscard]] SurfTensor2 deviator() const;
  [[nodiscard]] bool positive_definite() const { return c11 > 0.0 && det() > 0.0; }
  /// Q A Q^T with Q the counter-clockwise rotation by `angle`.
  [[nodiscard]] SurfTensor2 rotated(double angle) const;
};

SurfTensor2 operator+(const SurfTensor2& a, const SurfTensor2& b);
SurfTensor2 operator-(const SurfTensor2& a, const SurfTensor2& b);
SurfTensor2 operator*(double s, const SurfTensor2& a);
inline SurfTensor2 operator*(const SurfTensor2& a, double s) { return s * a; }

/// Double contraction A:B.
double contract(const SurfTensor2& a, const SurfTensor2& b);
/// Largest absolute component.
double max_abs(const SurfTensor2& a);
/// Frobenius norm.
double norm(const SurfTensor2& a);

/// F S F^T (push-forward of a contravariant tensor).
SurfTensor2 push_forward(const Mat2& f, const SurfTensor2& s);
/// F^T F.
SurfTensor2 right_cauchy_green(const Mat2& f);

struct SpectralDecomp {
  double Lambda1{};  ///< larger eigenvalue
  double Lambda2{};  ///< smaller eigenvalue
  double lambda1{};  ///< sqrt(Lambda1); NaN for a negative eigenvalue
  double lambda2{};
  /// Angle of the first eigenvector, counter-clockwise from the frame's
  /// first axis, in (-pi/2, pi/2]. Zero for coincident eigenvalues.
  double theta{};
  FrameId frame{FrameId::global};

  [[nodiscard]] Vec2 y1() const;
  [[nodiscard]] Vec2 y2() const;
  [[nodiscard]] SurfTensor2 reconstruct() const;
};

SpectralDecomp spectral(const SurfTensor2& t);

/// Order in which the four slots of a Tangent4 are to be read.
///
/// `standard` is the (x)-ordered layout consumed by solvers; `oplus` is the
/// layout of d^2W / dC (+) dC, which has to be rearranged before use.
enum class TangentLayout { standard, oplus };

/// Fourth-order surface tensor, all 16 components stored.
struct Tangent4 {
  std::array<double, 16> comp{};
  TangentLayout layout{TangentLayout::standard};
  FrameId frame{FrameId::global};

  static constexpr int index(int a, int b, int c, int d) { return ((a * 2 + b) * 2 + c) * 2 + d; }
  [[nodiscard]] double operator()(int a, int b, int c, int d) const { return comp[index(a, b, c, d)]; }
  double& operator()(int a, int b, int c, int d) { return comp[index(a, b, c, d)]; }

  /// T^{gdab}: swap of the first and second index pair.
  [[nodiscard]] Tangent4 major_transposed() const;

  Tangent4& operator+=(const Tangent4& o);
  Tangent4& operator-=(const Tangent4& o);
  Tangent4& operator*=(double s);
};

Tangent4 operator+(Tangent4 a, const Tangent4& b);
Tangent4 operator-(Tangent4 a, const Tangent4& b);
Tangent4 operator*(double s, Tangent4 a);

double max_abs(const Tangent4& t);

/// T : A, contracting the last index pair.
SurfTensor2 contract(const Tangent4& t, const SurfTensor2& a);

/// (A (x) B)^{abgd} = A^{ab} B^{gd}
Tangent4 tensor_product(const SurfTensor2& a, const SurfTensor2& b);
/// (A (+) B)^{abgd} = A^{ad} B^{bg}
Tangent4 oplus_product(const SurfTensor2& a, const SurfTensor2& b);
/// (A [x] B)^{abgd} = A^{ag} B^{bd}
Tangent4 boxtimes_product(const SurfTensor2& a, const SurfTensor2& b);

/// [A (x) B]^S = (A (x) B + B (x) A) / 2
Tangent4 sym_tensor_product(const SurfTensor2& a, const SurfTensor2& b);
/// [A (+) B]^S = (A (+) B + B (+) A) / 2
Tangent4 sym_oplus_product(const SurfTensor2& a, const SurfTensor2& b);

/// Reorders an oplus-layout tangent into the standard layout:
/// result^{abgd} = input^{agdb}. Maps A(+)B to A(x)B, A(x)B to A[x]B^T and
/// A[x]B to A(+)B^T.
Tangent4 rearrange(const Tangent4& t);
/// Inverse of rearrange(): result^{agdb} = input^{abgd}.
Tangent4 rearrange_inverse(const Tangent4& t);

}  // namespace graphene
