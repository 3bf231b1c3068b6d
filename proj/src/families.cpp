#include "gcone/families.hpp"

#include <algorithm>
#include <vector>

namespace gcone {

namespace {

// Cyclic vertex label in 1..N.
int to_vertex(int x, int n_verts) {
  const int r = (x - 1) % n_verts;
  return (r < 0 ? r + n_verts : r) + 1;
}

void require_special(const PolygonModel& m) {
  check(m.spec().frozen_mode == FrozenMode::Special,
        "generator families need the full frozen variable table");
}

int var_index(const PolygonModel& m, const Diag& d) {
  const int idx = m.index_of(d);
  check(idx >= 0, "chord is not in the variable table");
  return idx;
}

int chord_len(const PolygonModel& m, const Diag& l) {
  return m.circ_dist(l.a, l.b);
}

bool is_diameter_chord(const PolygonModel& m, const Diag& l) {
  return 2 * chord_len(m, l) == m.N();
}

Diag diameter_through(const PolygonModel& m, int i, int color) {
  return make_diag(i, m.antipode(i), color);
}

QVec qsub(const QVec& a, const QVec& b) { return add(a, scaled(b, Q(-1))); }

// Chord between two cyclic positions.
Diag chord_between(const PolygonModel& m, int pos1, int pos2) {
  return make_diag(to_vertex(pos1, m.N()), to_vertex(pos2, m.N()));
}

IVec restrict_to_cluster(const PolygonModel& m, const QVec& g) {
  check(g.size() == m.table_size(), "generator has the wrong dimension");
  for (size_t y = m.num_cluster(); y < m.table_size(); ++y)
    check(g[y] == 0, "generator does not vanish on the frozen coordinates");
  const QVec head(g.begin(),
                  g.begin() + static_cast<std::ptrdiff_t>(m.num_cluster()));
  check(!is_zero(head), "generator restricts to zero");
  return primitive(head);
}

}  // namespace

IVec vertex_star(const PolygonModel& m, int vertex) {
  require_special(m);
  const int N = m.N();
  const int i = to_vertex(vertex, N);
  IVec star = zero_ivec(m.table_size());
  if (m.spec().family == Family::A) {
    for (int other = 1; other <= N; ++other) {
      if (other == i) continue;
      star[static_cast<size_t>(var_index(m, make_diag(i, other)))] += 1;
    }
    return star;
  }
  const int ibar = m.antipode(i);
  for (size_t v = 0; v < m.table_size(); ++v) {
    const VarOrbit& orb = m.orbit(static_cast<int>(v));
    bool touches = false;
    for (const Diag& e : orb.elems)
      touches = touches || e.a == i || e.b == i || e.a == ibar || e.b == ibar;
    if (!touches) continue;
    const bool diam = 2 * orb.length == N;
    star[v] += diam && m.spec().family == Family::C ? 2 : 1;
  }
  return star;
}

IVec vertex_star_total(const PolygonModel& m) {
  IVec total = zero_ivec(m.table_size());
  for (int i = 1; i <= m.N(); ++i) total = add(total, vertex_star(m, i));
  return total;
}

IVec vertex_star_alternating(const PolygonModel& m) {
  check(m.N() % 2 == 0, "alternating star sum needs an even vertex count");
  IVec total = zero_ivec(m.table_size());
  for (int i = 1; i <= m.N(); ++i) {
    const IVec star = vertex_star(m, i);
    total = i % 2 == 0 ? add(total, star) : sub(total, star);
  }
  return total;
}

IVec diameter_color_difference(const PolygonModel& m) {
  require_special(m);
  check(m.spec().family == Family::D,
        "diameter colours exist only in family D");
  IVec u = zero_ivec(m.table_size());
  for (int i = 1; i <= m.N() / 2; ++i) {
    u[static_cast<size_t>(var_index(m, diameter_through(m, i, 1)))] += 1;
    u[static_cast<size_t>(var_index(m, diameter_through(m, i, 2)))] -= 1;
  }
  return u;
}

ArcSpan minor_arc_span(const PolygonModel& m, const Diag& l) {
  const int N = m.N();
  check(l.a >= 1 && l.a < l.b && l.b <= N, "chord endpoints out of range");
  const int fwd = l.b - l.a;
  if (2 * fwd <= N) return {l.a, l.b};
  return {l.b, l.a + N};
}

std::vector<Diag> minor_arc_chords(const PolygonModel& m, const Diag& l) {
  check(!is_diameter_chord(m, l), "minor arc chords need a non-diameter");
  const ArcSpan s = minor_arc_span(m, l);
  std::vector<Diag> out;
  for (int p = s.first; p < s.last; ++p)
    for (int q = p + 1; q <= s.last; ++q) out.push_back(chord_between(m, p, q));
  return out;
}

IVec chord_ray(const PolygonModel& m, const Diag& l) {
  require_special(m);
  IVec v = zero_ivec(m.table_size());
  for (const Diag& c : minor_arc_chords(m, l)) {
    const size_t idx = static_cast<size_t>(var_index(m, c));
    check(v[idx] == 0, "variable met twice along one minor arc");
    v[idx] -= 1;
  }
  return v;
}

IVec blue_diameter_ray(const PolygonModel& m, int i) {
  check(m.spec().family == Family::D, "diameter rays exist only in family D");
  const int v = to_vertex(i, m.N());
  IVec out = chord_ray(m, chord_between(m, v + 1, m.antipode(v) - 1));
  out[static_cast<size_t>(var_index(m, diameter_through(m, v, 1)))] += 1;
  return out;
}

IVec red_diameter_ray(const PolygonModel& m, int i) {
  check(m.spec().family == Family::D, "diameter rays exist only in family D");
  const int v = to_vertex(i, m.N());
  IVec out = chord_ray(m, chord_between(m, v + 1, m.antipode(v) - 1));
  out[static_cast<size_t>(var_index(m, diameter_through(m, v, 2)))] += 1;
  return out;
}

IVec diameter_run_ray(const PolygonModel& m, int j, int k) {
  check(k >= 0, "run length must be nonnegative");
  IVec out = zero_ivec(m.table_size());
  if (k % 2 == 0) {
    for (int i = 0; i <= k / 2; ++i)
      out = add(out, blue_diameter_ray(m, j + 2 * i));
    for (int i = 1; i <= k / 2; ++i)
      out = sub(out, red_diameter_ray(m, j + 2 * i - 1));
    return out;
  }
  const int far = m.antipode(to_vertex(j + k + 1, m.N()));
  out = chord_ray(m, chord_between(m, j + k, far));
  for (int i = 0; i <= (k - 1) / 2; ++i)
    out = add(out, blue_diameter_ray(m, j + 2 * i));
  for (int i = 1; i <= (k + 1) / 2; ++i)
    out = sub(out, red_diameter_ray(m, j + 2 * i - 1));
  return out;
}

IMat claimed_lineality_basis(const PolygonModel& m) {
  require_special(m);
  IMat basis;
  const int upto = m.spec().family == Family::A ? m.N() : m.N() / 2;
  for (int i = 1; i <= upto; ++i) basis.push_back(vertex_star(m, i));
  if (m.spec().family == Family::D)
    basis.push_back(diameter_color_difference(m));
  return basis;
}

IMat claimed_special_rays(const PolygonModel& m) {
  require_special(m);
  const int N = m.N();
  const bool d_family = m.spec().family == Family::D;
  const int len_bound = d_family ? N / 2 - 1 : N / 2;
  IMat rays;
  for (int a = 1; a <= N; ++a)
    for (int b = a + 1; b <= N; ++b) {
      const Diag l = make_diag(a, b);
      if (chord_len(m, l) >= len_bound) continue;
      rays.push_back(chord_ray(m, l));
    }
  if (d_family) {
    const int n = N / 2;
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k < n; ++k) rays.push_back(diameter_run_ray(m, j, k));
  }
  return rays;
}

IVec minor_arc_odd_stars(const PolygonModel& m, const Diag& l) {
  check(!is_diameter_chord(m, l), "odd star sums need a non-diameter chord");
  const ArcSpan s = minor_arc_span(m, l);
  const int len = s.last - s.first;
  IVec out = zero_ivec(m.table_size());
  for (int k = 1; k <= len / 2; ++k)
    out = add(out, vertex_star(m, s.first + 2 * k - 1));
  return out;
}

IVec major_arc_odd_stars(const PolygonModel& m, const Diag& l) {
  check(!is_diameter_chord(m, l), "odd star sums need a non-diameter chord");
  const ArcSpan s = minor_arc_span(m, l);
  const int colen = m.N() - (s.last - s.first);
  IVec out = zero_ivec(m.table_size());
  for (int k = 1; k <= colen / 2; ++k)
    out = add(out, vertex_star(m, s.last + 2 * k - 1));
  return out;
}

IVec chord_alternating_stars(const PolygonModel& m, const Diag& l) {
  const ArcSpan s = minor_arc_span(m, l);
  IVec out = zero_ivec(m.table_size());
  for (int k = 0; k < s.last - s.first; ++k) {
    const IVec star = vertex_star(m, s.first + k);
    out = k % 2 == 0 ? add(out, star) : sub(out, star);
  }
  return out;
}

QVec tilde_chord_ray(const PolygonModel& m, const Diag& l) {
  require_special(m);
  check(!is_diameter_chord(m, l), "corrected rays need a non-diameter chord");
  const Family fam = m.spec().family;
  const int N = m.N();
  const bool odd_len = chord_len(m, l) % 2 == 1;
  QVec out = to_q(chord_ray(m, l));
  if (fam == Family::A && N % 2 == 1 && odd_len) {
    out = add(out, scaled(to_q(vertex_star_total(m)), Q(1, 2)));
    return qsub(out, to_q(major_arc_odd_stars(m, l)));
  }
  if (fam != Family::A && (N / 2) % 2 == 1 && odd_len) {
    out = add(out, scaled(to_q(vertex_star_total(m)), Q(1, 4)));
    const ArcSpan s = minor_arc_span(m, l);
    const Diag seg =
        chord_between(m, s.last, m.antipode(to_vertex(s.first, N)));
    return qsub(out, to_q(minor_arc_odd_stars(m, seg)));
  }
  return add(out, to_q(minor_arc_odd_stars(m, l)));
}

QVec tilde_blue_diameter_ray(const PolygonModel& m, int i) {
  check(m.spec().family == Family::D, "diameter rays exist only in family D");
  const int v = to_vertex(i, m.N());
  QVec out = tilde_chord_ray(m, chord_between(m, v + 1, m.antipode(v) - 1));
  out[static_cast<size_t>(var_index(m, diameter_through(m, v, 1)))] += 1;
  return out;
}

QVec tilde_red_diameter_ray(const PolygonModel& m, int i) {
  check(m.spec().family == Family::D, "diameter rays exist only in family D");
  const int v = to_vertex(i, m.N());
  QVec out = tilde_chord_ray(m, chord_between(m, v + 1, m.antipode(v) - 1));
  out[static_cast<size_t>(var_index(m, diameter_through(m, v, 2)))] += 1;
  return out;
}

QVec tilde_diameter_run_ray(const PolygonModel& m, int j, int k) {
  check(k >= 0, "run length must be nonnegative");
  QVec out = to_q(zero_ivec(m.table_size()));
  if (k % 2 == 0) {
    for (int i = 0; i <= k / 2; ++i)
      out = add(out, tilde_blue_diameter_ray(m, j + 2 * i));
    for (int i = 1; i <= k / 2; ++i)
      out = qsub(out, tilde_red_diameter_ray(m, j + 2 * i - 1));
    return out;
  }
  const int far = m.antipode(to_vertex(j + k + 1, m.N()));
  out = tilde_chord_ray(m, chord_between(m, j + k, far));
  for (int i = 0; i <= (k - 1) / 2; ++i)
    out = add(out, tilde_blue_diameter_ray(m, j + 2 * i));
  for (int i = 1; i <= (k + 1) / 2; ++i)
    out = qsub(out, tilde_red_diameter_ray(m, j + 2 * i - 1));
  return out;
}

NoFrozenClaim claimed_no_frozen(const PolygonModel& m) {
  require_special(m);
  const Family fam = m.spec().family;
  const int N = m.N();
  const int n = m.spec().rank;
  std::vector<QVec> gens;
  IMat lin_full;

  // All chords of a given length parity below a strict length bound.
  auto chords_below = [&](int bound, int parity) {
    std::vector<Diag> out;
    for (int a = 1; a <= N; ++a)
      for (int b = a + 1; b <= N; ++b) {
        const Diag l = make_diag(a, b);
        const int len = chord_len(m, l);
        if (len >= bound) continue;
        if (parity >= 0 && len % 2 != parity) continue;
        out.push_back(l);
      }
    return out;
  };
  const auto arc_end = [&](const Diag& l) { return minor_arc_span(m, l).last; };
  // Paired combination of two odd-length chords whose arc ends have odd
  // label sum, glued by the alternating stars of the connecting chord.
  const auto odd_pair = [&](const Diag& l1, const Diag& l2) {
    const QVec sum = add(tilde_chord_ray(m, l1), tilde_chord_ray(m, l2));
    const Diag conn = chord_between(m, arc_end(l1), arc_end(l2));
    return add(sum, to_q(chord_alternating_stars(m, conn)));
  };

  NoFrozenClaim claim;
  if (fam != Family::D && n % 2 == 0) {
    claim.simplicial = true;
    for (const Diag& l : chords_below(N / 2, -1))
      gens.push_back(tilde_chord_ray(m, l));
  } else if (fam != Family::D) {
    lin_full.push_back(vertex_star_alternating(m));
    for (const Diag& l : chords_below(N / 2, 0))
      gens.push_back(tilde_chord_ray(m, l));
    const std::vector<Diag> odds = chords_below(N / 2, 1);
    for (size_t i = 0; i < odds.size(); ++i)
      for (size_t j = i + 1; j < odds.size(); ++j)
        if ((arc_end(odds[i]) + arc_end(odds[j])) % 2 == 1)
          gens.push_back(odd_pair(odds[i], odds[j]));
  } else if (n % 2 == 1) {
    lin_full.push_back(diameter_color_difference(m));
    for (const Diag& l : chords_below(n - 1, -1))
      gens.push_back(tilde_chord_ray(m, l));
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k < n; ++k)
        gens.push_back(tilde_diameter_run_ray(m, j, k));
  } else {
    lin_full.push_back(vertex_star_alternating(m));
    lin_full.push_back(diameter_color_difference(m));
    for (const Diag& l : chords_below(n - 1, 0))
      gens.push_back(tilde_chord_ray(m, l));
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k < n; k += 2)
        gens.push_back(tilde_diameter_run_ray(m, j, k));
    const std::vector<Diag> odds = chords_below(n, 1);
    for (size_t i = 0; i < odds.size(); ++i)
      for (size_t j = i + 1; j < odds.size(); ++j)
        if ((arc_end(odds[i]) + arc_end(odds[j])) % 2 == 1)
          gens.push_back(odd_pair(odds[i], odds[j]));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k < n; k += 2)
        for (const Diag& l : odds) {
          if ((j + arc_end(l)) % 2 != 0) continue;
          QVec r = add(tilde_diameter_run_ray(m, j, k),
                       tilde_chord_ray(m, l));
          const Diag conn = chord_between(m, j + k, arc_end(l));
          gens.push_back(add(r, to_q(chord_alternating_stars(m, conn))));
        }
  }

  for (const IVec& g : lin_full)
    claim.lineality.push_back(restrict_to_cluster(m, to_q(g)));
  for (const QVec& g : gens) claim.rays.push_back(restrict_to_cluster(m, g));
  return claim;
}

}  // namespace gcone
