/**
 * @file polygon.hpp
 * @brief Polygon/annulus combinatorial models for families A, B, C, D.
 *
 * Family A_n lives on the convex (n+3)-gon: cluster variables are the
 * diagonals, frozen variables the sides. Families B_n and C_n live on the
 * regular (2n+2)-gon modulo the 180° rotation: variables are orbits
 * {[a,b],[ā,b̄]} of diagonals, with the diameters fixed. Family D_n lives on
 * the 2n-gon modulo the rotation, with each diameter doubled into two
 * colours. Compatibility degrees are crossing counts (family-dependent
 * normalisation), and every exchangeable pair carries one two-term exchange
 * relation whose monomials come from quadrilateral edge data.
 */
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "gcone/model.hpp"

namespace gcone {

/// A polygon chord with 1-based endpoints, stored with a < b.
/// colour: 0 = plain, 1 = blue diameter, 2 = red diameter (family D only).
struct Diag {
  int a = 0, b = 0;
  int color = 0;

  friend bool operator==(const Diag& l, const Diag& r) {
    return l.a == r.a && l.b == r.b && l.color == r.color;
  }
  friend bool operator<(const Diag& l, const Diag& r) {
    return std::tie(l.a, l.b, l.color) < std::tie(r.a, r.b, r.color);
  }
};

Diag make_diag(int a, int b, int color = 0);

/// One model variable: a rotation orbit of one or two chords.
struct VarOrbit {
  std::vector<Diag> elems;  // one chord (A, diameters) or an antipodal pair
  bool frozen = false;
  int length = 0;  // circular endpoint distance of the chords
  std::string name;
};

class PolygonModel final : public ClusterModel {
 public:
  static PolygonModel build(const ModelSpec& spec);

  size_t num_vars() const override;
  size_t num_cluster() const override { return num_cluster_; }
  size_t rank() const override { return static_cast<size_t>(spec_.rank); }
  int compat(int i, int j) const override;
  const std::vector<Relation>& relations() const override { return rels_; }
  int rotate(int v) const override;
  std::string var_name(int v) const override;

  const ModelSpec& spec() const override { return spec_; }
  int N() const { return big_n_; }
  /// Full variable table, frozen included, regardless of frozen mode.
  size_t table_size() const { return vars_.size(); }
  const VarOrbit& orbit(int v) const { return vars_.at(v); }
  bool is_frozen_var(int v) const { return vars_.at(v).frozen; }
  /// Table index of the variable containing this chord, or -1.
  int index_of(const Diag& d) const;

  int antipode(int vertex) const;
  int circ_dist(int x, int y) const;
  /// Crossing predicate, with the colour convention for diameters:
  /// distinct-line diameters cross unless both are coloured the same.
  bool crossing(const Diag& d1, const Diag& d2) const;

 private:
  PolygonModel() = default;
  void build_variables();
  void build_compat();
  void build_relations();

  Diag rotate_diag(const Diag& d) const;
  int var_of_edge(int a, int b) const;  // chord (a,b) as a table index
  bool is_poly_edge(const Diag& d) const { return circ_dist(d.a, d.b) == 1; }
  bool is_diameter(const Diag& d) const;

  // Term assembly: (table index, exponent) lists, then exponent vectors.
  using TermVars = std::vector<std::pair<int, Z>>;
  void add_var(TermVars& t, int idx, const Z& exp) const;
  void chord_term(TermVars& t, const Diag& edge, const Z& diameter_exp) const;
  bool all_frozen(const TermVars& t) const;
  IVec vectorize(const TermVars& t) const;
  Relation make_relation(int i, int j) const;

  ModelSpec spec_{};
  int big_n_ = 0;
  std::vector<VarOrbit> vars_;
  size_t num_cluster_ = 0;
  std::map<std::tuple<int, int, int>, int> index_;
  std::vector<std::vector<int>> compat_;
  std::vector<Relation> rels_;
};

}  // namespace gcone
