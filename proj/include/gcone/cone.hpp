/**
 * @file cone.hpp
 * @brief Exact polyhedral cones with synchronized V- and H-representations.
 *
 * A cone is stored in canonical form so that structural equality is plain
 * field-by-field comparison:
 *  - `lineality`: canonical subspace basis (RREF rows, primitive, leading
 *    entry positive) of the largest linear subspace contained in the cone;
 *  - `rays`: extreme rays, reduced modulo the lineality space (pivot
 *    coordinates of the lineality basis zeroed out), primitive, sorted
 *    lexicographically — rays keep their true geometric direction and are
 *    never sign-flipped;
 *  - `equations`: canonical subspace basis of the orthogonal complement of
 *    the cone's linear span;
 *  - `inequalities`: facet normals, reduced modulo `equations`, primitive,
 *    sorted lexicographically.
 *
 * Both representations are computed at construction by a lineality-aware
 * double description pass run twice (once on the input data, once on its
 * output), which also eliminates redundant input generators or inequalities.
 */
#pragma once

#include <vector>

#include "gcone/exact.hpp"
#include "gcone/linalg.hpp"

namespace gcone {

struct Cone {
  size_t dim = 0;
  IMat lineality;
  IMat rays;
  IMat equations;
  IMat inequalities;

  bool operator==(const Cone&) const = default;
};

/// Minimal V-representation (lineality basis + extreme rays) of
/// {x : eqs·x = 0, ineqs·x >= 0}, canonicalized as described above.
struct VRep {
  IMat lineality;
  IMat rays;
};
VRep double_description(size_t dim, const IMat& eqs, const IMat& ineqs);

/// Cone generated by nonnegative combinations of `gens` plus arbitrary
/// combinations of `lineality_gens`.
Cone cone_from_generators(size_t dim, const IMat& gens,
                          const IMat& lineality_gens = {});

/// Cone {x : eqs·x = 0, ineqs·x >= 0}.
Cone cone_from_inequalities(size_t dim, const IMat& ineqs,
                            const IMat& eqs = {});

/// Dual cone {y : y·x >= 0 for all x in C}. A pure representation swap
/// thanks to the canonical storage (involutive by construction).
Cone dual(const Cone& c);

bool contains(const Cone& c, const IVec& x);

/// Membership in the relative interior: all equations tight, all facet
/// inequalities strict.
bool contains_relative_interior(const Cone& c, const IVec& x);

/// Relative-interior membership of x in the *dual* of cone(gens), without
/// necessarily running double description: when gens·x is strictly positive
/// throughout, cone(gens) is pointed (a nontrivial lineality relation
/// between generators would force a zero dot) and x is interior to the
/// full-dimensional dual. Mixed signs fall back to the constructed cone.
bool dual_cone_contains_relative_interior(size_t dim, const IMat& gens,
                                          const IVec& x);

/// Structural (canonical-form) equality. Same as operator==; spelled out for
/// call sites that want the intent visible.
bool cones_equal(const Cone& a, const Cone& b);

/// Mutual-containment equality, used as an independent oracle against the
/// canonical-form comparison: checks every generator of b in a and vice
/// versa.
bool cones_equal_by_containment(const Cone& a, const Cone& b);

/// C ∩ {x : rows·x = 0}.
Cone intersect_with_subspace(const Cone& c, const IMat& rows);

/// Image of the cone under selecting the listed coordinates (in order).
Cone project_coordinates(const Cone& c, const std::vector<int>& keep);

inline bool is_pointed(const Cone& c) { return c.lineality.empty(); }

inline size_t lineality_dim(const Cone& c) { return c.lineality.size(); }

/// Dimension of the cone's linear span.
inline size_t cone_dim(const Cone& c) { return c.dim - c.equations.size(); }

/// A point in the relative interior (sum of extreme rays; the zero vector
/// for subspaces).
IVec relative_interior_point(const Cone& c);

}  // namespace gcone
