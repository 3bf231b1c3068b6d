/**
 * @file families.hpp
 * @brief Closed-form generator families for the Gröbner cones of the
 *        polygon models: vertex stars spanning the lineality space,
 *        per-chord ray representatives, and their corrected versions that
 *        land in the coefficient-free coordinate subspace.
 *
 * All builders take a polygon model with the full frozen variable set and
 * produce vectors over the complete variable table. The corrected ("tilde")
 * builders return rational vectors whose frozen coordinates vanish, so they
 * restrict to generators of the coefficient-free Gröbner cone.
 */
#pragma once

#include "gcone/cone.hpp"
#include "gcone/polygon.hpp"

namespace gcone {

/// Sum of unit vectors over every variable incident to the given polygon
/// vertex (1..N, taken cyclically). In families B/C/D a variable is incident
/// if any chord of its orbit touches the vertex or its antipode; type C
/// counts the diameter through the vertex twice.
IVec vertex_star(const PolygonModel& m, int vertex);

/// Sum of all vertex stars.
IVec vertex_star_total(const PolygonModel& m);

/// Alternating sum of the vertex stars, sum of (-1)^i times the star of
/// vertex i. Requires an even vertex count.
IVec vertex_star_alternating(const PolygonModel& m);

/// Blue diameters minus red diameters (family D).
IVec diameter_color_difference(const PolygonModel& m);

/// The minor arc of a non-diameter chord as vertex positions: the chord's
/// endpoints are `first` and `last` with first < last <= first + N/2, and the
/// arc walks first, first+1, ..., last (labels taken mod N into 1..N).
/// For diameters both arcs tie; the one starting at the smaller label is
/// chosen (only the alternating-star builder accepts diameters).
struct ArcSpan {
  int first = 0;
  int last = 0;
};
ArcSpan minor_arc_span(const PolygonModel& m, const Diag& l);

/// All chords with both endpoints on the closed minor arc of `l`
/// (`l` itself and the arc's boundary edges included).
std::vector<Diag> minor_arc_chords(const PolygonModel& m, const Diag& l);

/// Ray representative of a non-diameter chord: minus the sum of unit vectors
/// of every variable met by the chords of the closed minor arc.
IVec chord_ray(const PolygonModel& m, const Diag& l);

/// Family D ray representatives attached to a diameter endpoint i:
/// the blue (resp. red) diameter through i plus the ray of the chord
/// spanning the remaining arc [i+1, i+n-1].
IVec blue_diameter_ray(const PolygonModel& m, int i);
IVec red_diameter_ray(const PolygonModel& m, int i);

/// Family D telescoping combination over the diameter run j, j+1, ..., j+k:
/// alternating blue/red diameter rays, plus one extra chord ray when the run
/// length k is odd.
IVec diameter_run_ray(const PolygonModel& m, int j, int k);

/// Claimed basis of the lineality space of the Gröbner cone: the vertex
/// stars of one vertex per antipodal class, plus the diameter colour
/// difference in family D.
IMat claimed_lineality_basis(const PolygonModel& m);

/// Claimed ray representatives of the Gröbner cone with frozen variables:
/// chord rays of all short-enough chords, plus the diameter run rays in
/// family D. May contain repeated vectors and vectors that agree modulo
/// lineality; compare as sets of canonical classes.
IMat claimed_special_rays(const PolygonModel& m);

/// Sum of the vertex stars at the odd-offset interior vertices of the minor
/// arc of `l`: positions first+1, first+3, ... strictly inside the arc.
IVec minor_arc_odd_stars(const PolygonModel& m, const Diag& l);

/// Same sum over the complementary (major) arc: positions last+1, last+3,
/// ... strictly between last and first+N.
IVec major_arc_odd_stars(const PolygonModel& m, const Diag& l);

/// Alternating vertex-star sum along the minor arc: sum over k = 0..len-1 of
/// (-1)^k times the star of vertex first+k. Diameters use the smaller-label
/// starting convention; the two choices differ by the alternating total
/// star, which is a lineality direction wherever diameters arise here.
IVec chord_alternating_stars(const PolygonModel& m, const Diag& l);

/// Corrected chord ray: the chord ray plus a star correction chosen per
/// family and chord-length parity so that all frozen coordinates vanish.
QVec tilde_chord_ray(const PolygonModel& m, const Diag& l);

/// Corrected family D diameter-endpoint rays and run combinations.
QVec tilde_blue_diameter_ray(const PolygonModel& m, int i);
QVec tilde_red_diameter_ray(const PolygonModel& m, int i);
QVec tilde_diameter_run_ray(const PolygonModel& m, int j, int k);

/// Claimed description of the coefficient-free Gröbner cone, in cluster
/// coordinates (built from the full model, then restricted; every generator
/// is checked to vanish on the frozen coordinates before truncation).
struct NoFrozenClaim {
  IMat lineality;    ///< claimed lineality generators
  IMat rays;         ///< claimed ray representatives (duplicates possible)
  bool simplicial = false;  ///< claimed pointed simplicial (ray count = dim)
};
NoFrozenClaim claimed_no_frozen(const PolygonModel& m);

}  // namespace gcone
