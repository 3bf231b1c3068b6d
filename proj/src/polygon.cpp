#include "gcone/polygon.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace gcone {

Diag make_diag(int a, int b, int color) {
  if (a > b) std::swap(a, b);
  return Diag{a, b, color};
}

size_t PolygonModel::num_vars() const {
  return spec_.frozen_mode == FrozenMode::None ? num_cluster_ : vars_.size();
}

int PolygonModel::antipode(int vertex) const {
  int v = vertex + big_n_ / 2;
  if (v > big_n_) v -= big_n_;
  return v;
}

int PolygonModel::circ_dist(int x, int y) const {
  const int d = std::abs(x - y);
  return std::min(d, big_n_ - d);
}

bool PolygonModel::is_diameter(const Diag& d) const {
  return spec_.family != Family::A && circ_dist(d.a, d.b) == big_n_ / 2;
}

namespace {

int arc_from(int x, int from, int n) { return (x - from + n) % n; }

// x strictly inside the counterclockwise arc from a to b.
bool in_open_arc(int x, int a, int b, int n) {
  const int xa = arc_from(x, a, n);
  return 0 < xa && xa < arc_from(b, a, n);
}

}  // namespace

bool PolygonModel::crossing(const Diag& d1, const Diag& d2) const {
  if (is_diameter(d1) && is_diameter(d2)) {
    if (d1.a == d2.a && d1.b == d2.b) return false;  // same line
    // Distinct lines: plain diameters cross; coloured ones need different
    // colours.
    return d1.color == 0 || d1.color != d2.color;
  }
  if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b)
    return false;
  return in_open_arc(d2.a, d1.a, d1.b, big_n_) !=
         in_open_arc(d2.b, d1.a, d1.b, big_n_);
}

PolygonModel PolygonModel::build(const ModelSpec& spec) {
  const Family fam = spec.family;
  check(fam == Family::A || fam == Family::B || fam == Family::C ||
            fam == Family::D,
        "polygon model supports families A, B, C, D only");
  const int n = spec.rank;
  check(n >= 1, "rank must be positive");
  if (fam == Family::B || fam == Family::C)
    check(n >= 2, "families B and C need rank >= 2");
  if (fam == Family::D) check(n >= 3, "family D needs rank >= 3");

  PolygonModel m;
  m.spec_ = spec;
  switch (fam) {
    case Family::A: m.big_n_ = n + 3; break;
    case Family::B:
    case Family::C: m.big_n_ = 2 * n + 2; break;
    case Family::D: m.big_n_ = 2 * n; break;
    default: break;
  }
  m.build_variables();
  m.build_compat();
  m.build_relations();
  return m;
}

void PolygonModel::build_variables() {
  const int N = big_n_;
  const Family fam = spec_.family;

  auto chord_name = [](const Diag& d) {
    std::string s = "[" + std::to_string(d.a) + "," + std::to_string(d.b) + "]";
    return d.color == 2 ? "^" + s : s;
  };
  auto push_orbit = [&](std::vector<Diag> elems, bool frozen) {
    std::sort(elems.begin(), elems.end());
    VarOrbit o;
    o.elems = std::move(elems);
    o.frozen = frozen;
    o.length = circ_dist(o.elems[0].a, o.elems[0].b);
    o.name = chord_name(o.elems[0]);
    vars_.push_back(std::move(o));
  };

  // Cluster variables: all non-side chords, one per rotation orbit.
  std::set<Diag> seen;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      const int len = circ_dist(a, b);
      if (len < 2) continue;
      if (fam == Family::A) {
        push_orbit({make_diag(a, b)}, false);
        continue;
      }
      if (len == N / 2) continue;  // diameters added below
      const Diag d = make_diag(a, b);
      const Diag anti = make_diag(antipode(a), antipode(b));
      if (!seen.insert(std::min(d, anti)).second) continue;
      push_orbit({d, anti}, false);
    }
  if (fam == Family::B || fam == Family::C) {
    for (int a = 1; a <= N / 2; ++a)
      push_orbit({make_diag(a, antipode(a))}, false);
  } else if (fam == Family::D) {
    for (int a = 1; a <= N / 2; ++a)
      for (int color = 1; color <= 2; ++color)
        push_orbit({make_diag(a, antipode(a), color)}, false);
  }
  std::sort(vars_.begin(), vars_.end(),
            [](const VarOrbit& l, const VarOrbit& r) {
              return std::tie(l.length, l.elems[0]) <
                     std::tie(r.length, r.elems[0]);
            });
  num_cluster_ = vars_.size();

  // Frozen variables: the polygon sides in cyclic order.
  const int sides = fam == Family::A ? N : N / 2;
  for (int k = 1; k <= sides; ++k) {
    const Diag e = make_diag(k, k % N + 1);
    if (fam == Family::A)
      push_orbit({e}, true);
    else
      push_orbit({e, make_diag(antipode(e.a), antipode(e.b))}, true);
  }

  for (size_t v = 0; v < vars_.size(); ++v)
    for (const Diag& d : vars_[v].elems)
      index_[{d.a, d.b, d.color}] = static_cast<int>(v);
}

int PolygonModel::index_of(const Diag& d) const {
  const auto it = index_.find({d.a, d.b, d.color});
  return it == index_.end() ? -1 : it->second;
}

int PolygonModel::var_of_edge(int a, int b) const {
  const int idx = index_of(make_diag(a, b));
  check(idx >= 0, "chord is not in the variable table");
  return idx;
}

void PolygonModel::build_compat() {
  const size_t total = vars_.size();
  compat_.assign(total, std::vector<int>(total, 0));
  for (size_t i = 0; i < num_cluster_; ++i)
    for (size_t j = 0; j < num_cluster_; ++j) {
      if (i == j) continue;
      const VarOrbit& lv = vars_[i];
      const VarOrbit& kv = vars_[j];
      int value = 0;
      switch (spec_.family) {
        case Family::A:
          value = crossing(lv.elems[0], kv.elems[0]) ? 1 : 0;
          break;
        case Family::B:
          // Crossings of the naming representative of l with all of K.
          for (const Diag& t : kv.elems)
            value += crossing(lv.elems[0], t) ? 1 : 0;
          break;
        case Family::C:
          // Mirror image: representative of k against all of L.
          for (const Diag& s : lv.elems)
            value += crossing(kv.elems[0], s) ? 1 : 0;
          break;
        case Family::D: {
          if (is_diameter(lv.elems[0]) && is_diameter(kv.elems[0])) {
            value = crossing(lv.elems[0], kv.elems[0]) ? 1 : 0;
          } else {
            int crossings = 0;
            for (const Diag& s : lv.elems)
              for (const Diag& t : kv.elems)
                crossings += crossing(s, t) ? 1 : 0;
            check(crossings % 2 == 0, "odd crossing total in family D");
            value = crossings / 2;
          }
          break;
        }
        default: break;
      }
      compat_[i][j] = value;
    }
}

int PolygonModel::compat(int i, int j) const {
  return compat_.at(i).at(j);
}

void PolygonModel::add_var(TermVars& t, int idx, const Z& exp) const {
  check(idx >= 0, "term references a chord outside the table");
  t.emplace_back(idx, exp);
}

void PolygonModel::chord_term(TermVars& t, const Diag& e,
                              const Z& diameter_exp) const {
  if (is_diameter(e)) {
    if (spec_.family == Family::D) {
      // A diameter edge contributes both coloured copies of the line.
      add_var(t, index_of(Diag{e.a, e.b, 1}), 1);
      add_var(t, index_of(Diag{e.a, e.b, 2}), 1);
    } else {
      add_var(t, index_of(e), diameter_exp);
    }
  } else {
    add_var(t, var_of_edge(e.a, e.b), Z(1));
  }
}

bool PolygonModel::all_frozen(const TermVars& t) const {
  for (const auto& [idx, exp] : t)
    if (!vars_[static_cast<size_t>(idx)].frozen) return false;
  return true;
}

IVec PolygonModel::vectorize(const TermVars& t) const {
  IVec v = zero_ivec(num_vars());
  for (const auto& [idx, exp] : t) {
    if (static_cast<size_t>(idx) >= num_vars()) continue;  // dropped frozen
    v[static_cast<size_t>(idx)] += exp;
  }
  return v;
}

Relation PolygonModel::make_relation(int i, int j) const {
  const Family fam = spec_.family;
  const VarOrbit& lv = vars_[static_cast<size_t>(i)];
  const VarOrbit& kv = vars_[static_cast<size_t>(j)];
  const bool dl = is_diameter(lv.elems[0]);
  const bool dk = is_diameter(kv.elems[0]);

  Relation rel;
  rel.x1 = i;
  rel.x2 = j;
  TermVars t1, t2;

  if (fam == Family::D && dl != dk) {
    // Coloured diameter against a plain pair. Writing the diameter as
    // [a, ā] and the pair as [b, c̄] with a, b, c, ā counterclockwise, the
    // two monomials are x_[a,b] · x_(line c) and x_[a,c̄] · x_(line b),
    // with both right-hand diameters in the colour of the left-hand one.
    rel.quad_type = 4;
    const Diag diam = dl ? lv.elems[0] : kv.elems[0];
    const VarOrbit& pair_var = dl ? kv : lv;
    const int a = diam.a;
    const int abar = diam.b;
    int b = -1, c = -1, matches = 0;
    for (const Diag& rep : pair_var.elems)
      for (const int x : {rep.a, rep.b}) {
        if (!in_open_arc(x, a, abar, big_n_)) continue;
        const int y = x == rep.a ? rep.b : rep.a;
        const int ybar = antipode(y);
        check(in_open_arc(ybar, a, abar, big_n_),
              "pair does not cross the diameter line");
        if (arc_from(x, a, big_n_) < arc_from(ybar, a, big_n_)) {
          b = x;
          c = ybar;
          ++matches;
        }
      }
    check(matches == 1 && b > 0 && c > 0, "no ordered pair representative");
    const int color = diam.color;
    add_var(t1, var_of_edge(a, b), Z(1));
    add_var(t1, index_of(make_diag(c, antipode(c), color)), Z(1));
    add_var(t2, var_of_edge(a, antipode(c)), Z(1));
    add_var(t2, index_of(make_diag(b, antipode(b), color)), Z(1));
  } else if (dl && dk) {
    // Two diameters: the square (a, b, ā, b̄) with pair-orbit monomials.
    rel.quad_type = 3;
    int a = lv.elems[0].a;
    int b = kv.elems[0].a;
    check(a != b, "exchangeable diameters must lie on distinct lines");
    if (a > b) std::swap(a, b);
    const Z exp = fam == Family::C ? 2 : 1;
    add_var(t1, var_of_edge(a, b), exp);
    add_var(t2, var_of_edge(a, antipode(b)), exp);
  } else {
    // Two crossing chords span a quadrilateral; the monomials are the two
    // opposite-edge pairs, with diameter edges weighted by family.
    const Diag s = lv.elems[0];
    Diag t{};
    bool found = false;
    for (const Diag& cand : kv.elems)
      if (crossing(s, cand)) {
        t = cand;
        found = true;
        break;
      }
    check(found, "exchangeable variables without crossing representatives");
    int pts[4] = {s.a, s.b, t.a, t.b};
    std::sort(pts, pts + 4);
    const Diag diag02 = make_diag(pts[0], pts[2]);
    const Diag diag13 = make_diag(pts[1], pts[3]);
    check((s == diag02 && t == diag13) || (s == diag13 && t == diag02),
          "crossing representatives do not interleave");
    const Diag e0 = make_diag(pts[0], pts[1]);
    const Diag e1 = make_diag(pts[1], pts[2]);
    const Diag e2 = make_diag(pts[2], pts[3]);
    const Diag e3 = make_diag(pts[0], pts[3]);
    int diameter_edges = 0;
    for (const Diag* e : {&e0, &e1, &e2, &e3})
      diameter_edges += is_diameter(*e) ? 1 : 0;
    check(diameter_edges <= 1, "more than one diameter edge");
    if (fam == Family::A)
      rel.quad_type = 0;
    else
      rel.quad_type = diameter_edges > 0 ? 2 : 1;
    const Z diameter_exp = fam == Family::B ? 2 : 1;
    chord_term(t1, e0, diameter_exp);
    chord_term(t1, e2, diameter_exp);
    chord_term(t2, e1, diameter_exp);
    chord_term(t2, e3, diameter_exp);
  }

  rel.term1_primitive = all_frozen(t2);
  rel.term2_primitive = all_frozen(t1);
  if (rel.quad_type == 4)
    check(!rel.primitive(), "diameter/pair exchanges are never primitive");
  rel.term1 = vectorize(t1);
  rel.term2 = vectorize(t2);
  return rel;
}

void PolygonModel::build_relations() {
  rels_.clear();
  for (size_t i = 0; i < num_cluster_; ++i)
    for (size_t j = i + 1; j < num_cluster_; ++j)
      if (exchangeable(static_cast<int>(i), static_cast<int>(j)))
        rels_.push_back(
            make_relation(static_cast<int>(i), static_cast<int>(j)));
}

Diag PolygonModel::rotate_diag(const Diag& d) const {
  const int a = d.a % big_n_ + 1;
  const int b = d.b % big_n_ + 1;
  int color = d.color;
  if (color != 0) color = 3 - color;  // one-step rotation swaps the colours
  return make_diag(a, b, color);
}

int PolygonModel::rotate(int v) const {
  const int idx = index_of(rotate_diag(vars_.at(static_cast<size_t>(v)).elems[0]));
  check(idx >= 0, "rotation left the variable table");
  return idx;
}

std::string PolygonModel::var_name(int v) const {
  return vars_.at(static_cast<size_t>(v)).name;
}

}  // namespace gcone
