#pragma once

#include "graphene/geometry.hpp"
#include "graphene/invariants.hpp"
#include "graphene/lattice.hpp"
#include "graphene/membrane.hpp"
#include "graphene/surface_tensors.hpp"

namespace graphene {

/// Orthonormal basis of the reference tangent plane in which the
/// global-frame components (and the lattice angle) are expressed.
struct ReferenceBasis {
  Vec3 e1{1.0, 0.0, 0.0};
  Vec3 e2{0.0, 1.0, 0.0};
};

/// e1 = A_1 / |A_1|, e2 = N x e1.
ReferenceBasis default_basis(const SurfacePointGeometry& g);

/// Global-frame components C_ij = (e_i . A^a) a_ab (A^b . e_j).
SurfTensor2 right_cauchy_green(const SurfacePointGeometry& g, const ReferenceBasis& e);

/// T^ab = (A^a . e_i) T_ij (A^b . e_j) for a contravariant tensor.
SurfTensor2 to_convected(const SurfTensor2& t, const SurfacePointGeometry& g, const ReferenceBasis& e);
Tangent4 to_convected(const Tangent4& t, const SurfacePointGeometry& g, const ReferenceBasis& e);

/// Invariants evaluated from convected components only; tr C = a_ab A^ab.
InvariantState invariants_convected(const SurfacePointGeometry& g, const LatticeFrame& frame,
                                    const ReferenceBasis& e);

/// tau^ab = H1 a^ab + H2/J^2 (A^ag a_gd A^db - 1/2 tr C A^ab)
///        + H3/(4J) (aM M^ab + aN N^ab).
/// `frame` is the lattice frame in global components of basis `e`.
SurfTensor2 kirchhoff_curvilinear(const SurfacePointGeometry& g, const LatticeFrame& frame, const MaterialParams& p,
                                  const ReferenceBasis& e);

struct CurvilinearComponents {
  SurfTensor2 tau;  ///< tau^ab (= S^ab in the convected basis)
  Tangent4 C;       ///< C^abgd
};

/// Projection route: convected components of a global-frame S and tangent.
CurvilinearComponents curvilinear_components(const StressResult& s, const Tangent4& t, const SurfacePointGeometry& g,
                                             const ReferenceBasis& e);

}  // namespace graphene
