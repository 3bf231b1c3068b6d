#include "gcone/cone.hpp"

#include <algorithm>
#include <set>

namespace gcone {

namespace {

/// Primitive, deduplicated, lexicographically sorted copies of the nonzero
/// rows. Fixes the insertion order of the double description pass.
IMat prepare_rows(const IMat& rows, size_t dim) {
  std::set<IVec> out;
  for (const IVec& r : rows) {
    check(r.size() == dim, "cone: row dimension mismatch");
    IVec p = primitive(r);
    if (!is_zero(p)) out.insert(std::move(p));
  }
  return IMat(out.begin(), out.end());
}

IMat identity_basis(size_t dim) {
  IMat id(dim);
  for (size_t i = 0; i < dim; ++i) id[i] = unit_ivec(dim, i);
  return id;
}

struct RayRec {
  IVec v;
  std::vector<bool> active;  // active[j]: inserted inequality j is tight
};

/// Rank-based adjacency: two extreme rays of the current cone span a
/// two-dimensional face (modulo lineality) iff the constraints tight at both
/// cut the ambient space down to lineality-dim + 2.
bool adjacent(const IMat& eqs, const IMat& ineqs, size_t upto,
              const RayRec& a, const RayRec& b, size_t dim, size_t lin_dim) {
  IMat m = eqs;
  for (size_t j = 0; j < upto; ++j)
    if (a.active[j] && b.active[j]) m.push_back(ineqs[j]);
  return rank_of(m) + lin_dim + 2 == dim;
}

}  // namespace

VRep double_description(size_t dim, const IMat& eqs, const IMat& ineqs) {
  const IMat hs = prepare_rows(ineqs, dim);
  for (const IVec& e : eqs) check(e.size() == dim, "cone: equation dimension mismatch");

  IMat lin = eqs.empty() ? identity_basis(dim) : kernel_basis(eqs);
  std::vector<RayRec> rays;
  const size_t nh = hs.size();

  for (size_t hi = 0; hi < nh; ++hi) {
    const IVec& h = hs[hi];

    // Does h cut the current lineality space?
    size_t cut = lin.size();
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(h, lin[i]) != 0) {
        cut = i;
        break;
      }

    if (cut < lin.size()) {
      // Lineality-splitting insertion: the pivot basis vector leaves the
      // lineality space and becomes an extreme ray on the positive side of
      // h; everything else is projected into the hyperplane of h.
      IVec l0 = lin[cut];
      Z d0 = dot(h, l0);
      if (d0 < 0) {
        l0 = neg(l0);
        d0 = -d0;
      }
      IMat new_lin;
      new_lin.reserve(lin.size() - 1);
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == cut) continue;
        const Z di = dot(h, lin[i]);
        IVec l(dim);
        for (size_t j = 0; j < dim; ++j) l[j] = d0 * lin[i][j] - di * l0[j];
        new_lin.push_back(primitive(l));
      }
      lin = std::move(new_lin);
      for (RayRec& r : rays) {
        const Z dr = dot(h, r.v);
        if (dr != 0) {
          IVec w(dim);
          for (size_t j = 0; j < dim; ++j) w[j] = d0 * r.v[j] - dr * l0[j];
          r.v = primitive(w);
        }
        r.active.push_back(true);  // h is tight on every projected ray
      }
      RayRec nr;
      nr.v = std::move(l0);
      nr.active.assign(hi, true);  // previously inserted rows vanish on old lineality
      nr.active.push_back(false);  // h is strictly positive here
      rays.push_back(std::move(nr));
      continue;
    }

    // Classic insertion: h vanishes on the lineality space.
    std::vector<Z> d(rays.size());
    std::vector<size_t> pos, zero, negs;
    for (size_t i = 0; i < rays.size(); ++i) {
      d[i] = dot(h, rays[i].v);
      if (d[i] > 0)
        pos.push_back(i);
      else if (d[i] == 0)
        zero.push_back(i);
      else
        negs.push_back(i);
    }
    if (negs.empty()) {
      for (size_t i = 0; i < rays.size(); ++i) rays[i].active.push_back(d[i] == 0);
      continue;
    }
    std::vector<RayRec> created;
    for (size_t ip : pos)
      for (size_t im : negs) {
        const RayRec& rp = rays[ip];
        const RayRec& rm = rays[im];
        if (!adjacent(eqs, hs, hi, rp, rm, dim, lin.size())) continue;
        RayRec nr;
        nr.v.assign(dim, Z(0));
        for (size_t j = 0; j < dim; ++j)
          nr.v[j] = d[ip] * rm.v[j] - d[im] * rp.v[j];
        nr.v = primitive(nr.v);
        nr.active.resize(hi + 1);
        for (size_t j = 0; j < hi; ++j)
          nr.active[j] = rp.active[j] && rm.active[j];
        nr.active[hi] = true;
        created.push_back(std::move(nr));
      }
    std::vector<RayRec> next;
    next.reserve(pos.size() + zero.size() + created.size());
    for (size_t i : pos) {
      next.push_back(std::move(rays[i]));
      next.back().active.push_back(false);
    }
    for (size_t i : zero) {
      next.push_back(std::move(rays[i]));
      next.back().active.push_back(true);
    }
    for (RayRec& nr : created) next.push_back(std::move(nr));
    rays = std::move(next);
  }

  VRep out;
  out.lineality = canonical_subspace_basis(lin);
  std::set<IVec> canon;
  for (const RayRec& r : rays) {
    IVec c = canonical_mod_subspace(out.lineality, r.v);
    check(!is_zero(c), "double_description: extreme ray inside lineality");
    const bool fresh = canon.insert(std::move(c)).second;
    check(fresh, "double_description: duplicate extreme ray");
  }
  out.rays = IMat(canon.begin(), canon.end());
  return out;
}

Cone cone_from_generators(size_t dim, const IMat& gens,
                          const IMat& lineality_gens) {
  Cone c;
  c.dim = dim;
  VRep dual_rep = double_description(dim, lineality_gens, gens);
  c.equations = std::move(dual_rep.lineality);
  c.inequalities = std::move(dual_rep.rays);
  VRep primal = double_description(dim, c.equations, c.inequalities);
  c.lineality = std::move(primal.lineality);
  c.rays = std::move(primal.rays);
  for (const IVec& g : gens)
    check(contains(c, g), "cone_from_generators: generator escaped the cone");
  for (const IVec& l : lineality_gens) {
    check(contains(c, l) && contains(c, neg(l)),
          "cone_from_generators: lineality generator escaped the cone");
  }
  return c;
}

Cone cone_from_inequalities(size_t dim, const IMat& ineqs, const IMat& eqs) {
  Cone c;
  c.dim = dim;
  VRep primal = double_description(dim, eqs, ineqs);
  c.lineality = std::move(primal.lineality);
  c.rays = std::move(primal.rays);
  VRep dual_rep = double_description(dim, c.lineality, c.rays);
  c.equations = std::move(dual_rep.lineality);
  c.inequalities = std::move(dual_rep.rays);
  for (const IVec& h : ineqs) {
    for (const IVec& r : c.rays)
      check(dot(h, r) >= 0, "cone_from_inequalities: ray violates input row");
    for (const IVec& l : c.lineality)
      check(dot(h, l) == 0, "cone_from_inequalities: lineality violates input row");
  }
  return c;
}

Cone dual(const Cone& c) {
  Cone d;
  d.dim = c.dim;
  d.lineality = c.equations;
  d.rays = c.inequalities;
  d.equations = c.lineality;
  d.inequalities = c.rays;
  return d;
}

bool contains(const Cone& c, const IVec& x) {
  check(x.size() == c.dim, "contains: dimension mismatch");
  for (const IVec& e : c.equations)
    if (dot(e, x) != 0) return false;
  for (const IVec& h : c.inequalities)
    if (dot(h, x) < 0) return false;
  return true;
}

bool contains_relative_interior(const Cone& c, const IVec& x) {
  check(x.size() == c.dim, "contains_relative_interior: dimension mismatch");
  for (const IVec& e : c.equations)
    if (dot(e, x) != 0) return false;
  for (const IVec& h : c.inequalities)
    if (dot(h, x) <= 0) return false;
  return true;
}

bool dual_cone_contains_relative_interior(size_t dim, const IMat& gens,
                                          const IVec& x) {
  bool all_strict = true;
  for (const IVec& g : gens) {
    const Z d = dot(g, x);
    if (d < 0) return false;
    if (d == 0) all_strict = false;
  }
  if (all_strict) return true;
  return contains_relative_interior(dual(cone_from_generators(dim, gens)), x);
}

bool cones_equal(const Cone& a, const Cone& b) { return a == b; }

bool cones_equal_by_containment(const Cone& a, const Cone& b) {
  if (a.dim != b.dim) return false;
  auto covered = [](const Cone& outer, const Cone& inner) {
    for (const IVec& r : inner.rays)
      if (!contains(outer, r)) return false;
    for (const IVec& l : inner.lineality)
      if (!contains(outer, l) || !contains(outer, neg(l))) return false;
    return true;
  };
  return covered(a, b) && covered(b, a);
}

Cone intersect_with_subspace(const Cone& c, const IMat& rows) {
  return cone_from_inequalities(c.dim, c.inequalities,
                                stack_rows(c.equations, rows));
}

Cone project_coordinates(const Cone& c, const std::vector<int>& keep) {
  auto pick = [&keep](const IVec& v) {
    IVec w(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
      check(keep[i] >= 0 && static_cast<size_t>(keep[i]) < v.size(),
            "project_coordinates: index out of range");
      w[i] = v[keep[i]];
    }
    return w;
  };
  IMat gens, lin;
  for (const IVec& r : c.rays) gens.push_back(pick(r));
  for (const IVec& l : c.lineality) lin.push_back(pick(l));
  return cone_from_generators(keep.size(), gens, lin);
}

IVec relative_interior_point(const Cone& c) {
  IVec p = zero_ivec(c.dim);
  for (const IVec& r : c.rays) p = add(p, r);
  return p;
}

}  // namespace gcone
