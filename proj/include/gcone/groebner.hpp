/**
 * @file groebner.hpp
 * @brief Degree vectors of primitive exchange relations, the cone they
 *        generate and its dual (the Gröbner cone of the Stanley–Reisner
 *        initial ideal of the cluster ideal), compatibility-degree weight
 *        vectors, alternating orbit sums, and the derivation-degree test.
 */
#pragma once

#include <vector>

#include "gcone/cone.hpp"
#include "gcone/model.hpp"

namespace gcone {

/// deg(x·x') − deg(primitive term) of a primitive exchange relation, as an
/// integer vector over the model's exponent coordinates. A term is primitive
/// when the opposite term is supported on frozen variables only; a relation
/// whose terms are both all-frozen contributes one vector per term.
struct DegreeVector {
  IVec d;
  int relation = -1;  ///< index into m.relations()
  int term = 0;       ///< which term was subtracted (1 or 2)
};

/// All degree vectors of primitive relations, in relation order (term 1
/// before term 2 for the doubly-primitive case).
std::vector<DegreeVector> primitive_degree_vectors(const ClusterModel& m);

/// The same vectors as matrix rows.
IMat primitive_degree_matrix(const ClusterModel& m);

/// Cone generated by the primitive degree vectors.
Cone primitive_degree_cone(const ClusterModel& m);

/// Gröbner cone: the dual of the primitive-degree cone. Weights in its
/// interior select the product of the exchanged pair as the initial form of
/// every exchange relation.
Cone groebner_cone(const ClusterModel& m);

/// ω_v = [(v||y)]_y: the compatibility-degree row of the cluster variable v
/// over the full exponent coordinates, with zeros at frozen coordinates
/// (checked — frozen variables are compatible with everything).
IVec compat_weight(const ClusterModel& m, int v);

/// Σ_v ω_v over all cluster variables; an interior point of the Gröbner
/// cone.
IVec total_compat_weight(const ClusterModel& m);

/// Orbit v, T(v), T²(v), … of v under the model's distinguished rotation.
std::vector<int> rotation_orbit(const ClusterModel& m, int v);

/// ω̂_v = Σ_{i=1}^{k} (−1)^{i−1} ω_{T^i(v)} where T is the distinguished
/// rotation and k the size of the T-orbit of v. Requires k odd (checked);
/// even orbits make the alternating sum start-point dependent.
IVec alternating_weight(const ClusterModel& m, int v);

/// Degree-level test for the derivation z^α·∂/∂z_v against the
/// incompatibility ideal (generated by the products of incompatible cluster
/// pairs) and the primitive-degree cone.
struct DerivationCheck {
  /// z_v does not divide z^α. When false the derivation is never
  /// non-trivial.
  bool applicable = false;
  /// Some cluster variable w has z_w·z_v inside the incompatibility ideal
  /// while z_w·z^α stays outside it.
  bool nontrivial = false;
  /// −deg(z^α·∂/∂z_v) = e_v − deg(z^α) lies outside the primitive-degree
  /// cone. Non-trivial derivations must be excluded.
  bool cone_excluded = false;
};

/// `c_prim` must be primitive_degree_cone(m) (passed in so sweeps reuse it);
/// `alpha` is an exponent vector over m.num_vars() coordinates.
DerivationCheck derivation_check(const ClusterModel& m, const Cone& c_prim,
                                 int v, const IVec& alpha);

}  // namespace gcone
