#include "gcone/groebner.hpp"

namespace gcone {

std::vector<DegreeVector> primitive_degree_vectors(const ClusterModel& m) {
  const size_t n = m.num_vars();
  std::vector<DegreeVector> out;
  const std::vector<Relation>& rels = m.relations();
  for (size_t ri = 0; ri < rels.size(); ++ri) {
    const Relation& rel = rels[ri];
    if (!rel.primitive()) continue;
    IVec pair_deg = zero_ivec(n);
    pair_deg[static_cast<size_t>(rel.x1)] += 1;
    pair_deg[static_cast<size_t>(rel.x2)] += 1;
    if (rel.term1_primitive)
      out.push_back({sub(pair_deg, rel.term1), static_cast<int>(ri), 1});
    if (rel.term2_primitive)
      out.push_back({sub(pair_deg, rel.term2), static_cast<int>(ri), 2});
  }
  return out;
}

IMat primitive_degree_matrix(const ClusterModel& m) {
  IMat rows;
  for (const DegreeVector& dv : primitive_degree_vectors(m))
    rows.push_back(dv.d);
  return rows;
}

Cone primitive_degree_cone(const ClusterModel& m) {
  return cone_from_generators(m.num_vars(), primitive_degree_matrix(m));
}

Cone groebner_cone(const ClusterModel& m) {
  return dual(primitive_degree_cone(m));
}

IVec compat_weight(const ClusterModel& m, int v) {
  check(v >= 0 && static_cast<size_t>(v) < m.num_cluster(),
        "compatibility weight needs a cluster variable");
  const size_t n = m.num_vars();
  const size_t cluster = m.num_cluster();
  IVec w(n);
  for (size_t y = 0; y < n; ++y) {
    w[y] = m.compat(v, static_cast<int>(y));
    if (y >= cluster)
      check(w[y] == 0, "frozen variable with nonzero compatibility degree");
  }
  return w;
}

IVec total_compat_weight(const ClusterModel& m) {
  IVec sum = zero_ivec(m.num_vars());
  for (size_t v = 0; v < m.num_cluster(); ++v)
    sum = add(sum, compat_weight(m, static_cast<int>(v)));
  return sum;
}

std::vector<int> rotation_orbit(const ClusterModel& m, int v) {
  std::vector<int> orbit{v};
  int cur = m.rotate(v);
  while (cur != v) {
    check(orbit.size() <= m.num_vars(), "rotation orbit does not close");
    orbit.push_back(cur);
    cur = m.rotate(cur);
  }
  return orbit;
}

IVec alternating_weight(const ClusterModel& m, int v) {
  const std::vector<int> orbit = rotation_orbit(m, v);
  const size_t k = orbit.size();
  check(k % 2 == 1, "alternating weight needs an odd rotation orbit");
  IVec sum = zero_ivec(m.num_vars());
  for (size_t i = 1; i <= k; ++i) {
    const IVec w = compat_weight(m, orbit[i % k]);
    sum = (i % 2 == 1) ? add(sum, w) : sub(sum, w);
  }
  return sum;
}

DerivationCheck derivation_check(const ClusterModel& m, const Cone& c_prim,
                                 int v, const IVec& alpha) {
  const size_t n = m.num_vars();
  const size_t cluster = m.num_cluster();
  check(v >= 0 && static_cast<size_t>(v) < cluster,
        "derivation direction must be a cluster variable");
  check(alpha.size() == n, "derivation exponent dimension mismatch");
  for (const Z& e : alpha) check(e >= 0, "negative exponent in monomial");

  DerivationCheck r;
  r.applicable = alpha[static_cast<size_t>(v)] == 0;

  // Cluster support of z^alpha. Frozen factors never touch the
  // incompatibility ideal, so they are irrelevant to non-triviality.
  std::vector<int> support;
  for (size_t y = 0; y < cluster; ++y)
    if (alpha[y] > 0) support.push_back(static_cast<int>(y));

  auto incompatible = [&m](int a, int b) {
    return a != b && (m.compat(a, b) != 0 || m.compat(b, a) != 0);
  };

  bool support_is_face = true;
  for (size_t i = 0; i < support.size() && support_is_face; ++i)
    for (size_t j = i + 1; j < support.size(); ++j)
      if (incompatible(support[i], support[j])) {
        support_is_face = false;
        break;
      }

  r.nontrivial = false;
  if (support_is_face) {
    for (size_t w = 0; w < cluster && !r.nontrivial; ++w) {
      if (!incompatible(static_cast<int>(w), v)) continue;
      bool extends_face = true;
      for (const int s : support)
        if (incompatible(static_cast<int>(w), s)) {
          extends_face = false;
          break;
        }
      r.nontrivial = extends_face;
    }
  }

  IVec minus_deg = neg(alpha);
  minus_deg[static_cast<size_t>(v)] += 1;  // e_v − deg(z^alpha)
  r.cone_excluded = !contains(c_prim, minus_deg);
  return r;
}

}  // namespace gcone
