#include "graphene/bending.hpp"

#include <cmath>

namespace graphene {

namespace {

struct Derived {
  SurfTensor2 a_con;
  SurfTensor2 b_con;
  double J{};
  double H{};
  double kappa{};
};

Derived derive(const BendingKinematics& k) {
  Derived d;
  d.a_con = k.a_cov.inverse();
  const SurfTensor2& a = d.a_con;
  const SurfTensor2& b = k.b_cov;
  double r[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0.0;
      for (int g = 0; g < 2; ++g)
        for (int h = 0; h < 2; ++h) s += a(i, g) * b(g, h) * a(h, j);
      r[i][j] = s;
    }
  d.b_con = {r[0][0], r[1][1], 0.5 * (r[0][1] + r[1][0]), FrameId::convected};
  d.J = std::sqrt(k.a_cov.det() / k.det_A);
  d.H = 0.5 * contract(a, b);
  d.kappa = b.det() / k.a_cov.det();
  return d;
}

Tangent4 a4(const SurfTensor2& a) { return -0.5 * (boxtimes_product(a, a) + oplus_product(a, a)); }

}  // namespace

BendingKinematics BendingKinematics::from(const SurfacePointGeometry& g) { return {g.a_cov, g.b_cov, g.A_cov.det()}; }

double canham_energy(const BendingKinematics& k, double c_bend) {
  const Derived d = derive(k);
  return d.J * c_bend * (2.0 * d.H * d.H - d.kappa);
}

double canham_energy(const SurfacePointGeometry& g, double c_bend) {
  return canham_energy(BendingKinematics::from(g), c_bend);
}

BendingStress bending_stress_moment(const BendingKinematics& k, double c_bend) {
  const Derived d = derive(k);
  const double c = c_bend;
  BendingStress out;
  out.tau = d.J * (c * (2.0 * d.H * d.H + d.kappa) * d.a_con - 4.0 * c * d.H * d.b_con);
  out.M0 = c * d.J * d.b_con;
  return out;
}

BendingStress bending_stress_moment(const SurfacePointGeometry& g, double c_bend) {
  return bending_stress_moment(BendingKinematics::from(g), c_bend);
}

BendingCoefficients bending_coefficients(const BendingKinematics& k, double c_bend) {
  const Derived d = derive(k);
  const double J = d.J, H = d.H, kap = d.kappa, c = c_bend;
  BendingCoefficients r;
  r.c_aa = -J * c * (14.0 * H * H + kap);
  r.c_aa_printed = -J * (14.0 * H * H + c * kap);
  r.c_a = 2.0 * J * (-6.0 * c * H * H + c * kap);
  r.c_bb = 4.0 * c * J;
  r.c_ab = 4.0 * c * J * H;
  r.d_aa = 4.0 * J * c * H;
  r.d_a = 4.0 * J * c * H;
  r.d_ab = -J * c;
  r.d_ba = -2.0 * J * c;
  r.f_a = -J * c;
  return r;
}

BendingTangents bending_tangents(const BendingKinematics& k, double c_bend) {
  const Derived d = derive(k);
  const BendingCoefficients w = bending_coefficients(k, c_bend);
  const SurfTensor2& a = d.a_con;
  const SurfTensor2& b = d.b_con;
  const Tangent4 aa = tensor_product(a, a);
  const Tangent4 ab = tensor_product(a, b);
  const Tangent4 ba = tensor_product(b, a);
  const Tangent4 q = a4(a);

  BendingTangents t;
  t.c = w.c_aa * aa + w.c_a * q + w.c_bb * tensor_product(b, b) + w.c_ab * (ab + ba);
  t.d = w.d_aa * aa + w.d_a * q + w.d_ab * ab + w.d_ba * ba;
  t.e = t.d.major_transposed();
  t.f = w.f_a * q;
  return t;
}

BendingTangents bending_tangents(const SurfacePointGeometry& g, double c_bend) {
  return bending_tangents(BendingKinematics::from(g), c_bend);
}

}  // namespace graphene
