#include "gcone/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gcone/families.hpp"
#include "gcone/groebner.hpp"
#include "gcone/linalg.hpp"
#include "gcone/root_system.hpp"

namespace gcone {

namespace {

bool classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C ||
         f == Family::D;
}

void validate_rank(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "rank " << rank << " is out of range for family "
       << family_letter(f)
       << " (A: >=1, B/C: >=2, D: >=4, E: 6..8, F: 4, G: 2)";
    throw std::invalid_argument(os.str());
  }
}

std::string spec_tag(const ModelSpec& spec, ModelKind resolved) {
  std::string s = to_string(spec);
  s += resolved == ModelKind::Polygon ? " polygon" : " weights";
  return s;
}

std::string show_set_diff(const std::set<IVec>& want,
                          const std::set<IVec>& got) {
  for (const IVec& v : want)
    if (!got.count(v)) return "missing from computed set: " + show(v);
  for (const IVec& v : got)
    if (!want.count(v)) return "unexpected in computed set: " + show(v);
  return "sets agree";
}

std::set<IVec> ray_set(const Cone& c) {
  return std::set<IVec>(c.rays.begin(), c.rays.end());
}

/// Canonical representatives of the given vectors modulo the subspace.
std::set<IVec> class_set(const IMat& lineality, const IMat& vectors) {
  std::set<IVec> out;
  for (const IVec& v : vectors)
    out.insert(canonical_mod_subspace(lineality, v));
  return out;
}

CheckResult skip(std::string name, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = true;
  r.applicable = false;
  r.detail = std::move(why);
  return r;
}

CheckResult outcome(std::string name, bool pass, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

/// First non-empty entry of per-index failure slots, if any.
std::string first_failure(const std::vector<std::string>& slots) {
  for (const std::string& s : slots)
    if (!s.empty()) return s;
  return {};
}

}  // namespace

ModelKind resolve_model_kind(const ModelSpec& spec, ModelKind kind) {
  if (kind != ModelKind::Auto) return kind;
  return classical(spec.family) ? ModelKind::Polygon : ModelKind::Root;
}

std::unique_ptr<ClusterModel> build_model(const ModelSpec& spec,
                                          ModelKind kind) {
  validate_rank(spec.family, spec.rank);
  const ModelKind resolved = resolve_model_kind(spec, kind);
  if (resolved == ModelKind::Polygon && !classical(spec.family))
    throw std::invalid_argument(
        "the polygon model covers families A-D only; use the weight model "
        "for exceptional families");
  if (resolved == ModelKind::Root && spec.frozen_mode == FrozenMode::Special)
    throw std::invalid_argument(
        "the weight model has no frozen variables; use --frozen none");
  if (resolved == ModelKind::Polygon)
    return std::make_unique<PolygonModel>(PolygonModel::build(spec));
  return std::make_unique<RootModel>(RootModel::build(spec));
}

void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

CheckResult check_weights_in_cone(const ClusterModel& m, int jobs) {
  const auto dvs = primitive_degree_vectors(m);
  const size_t nc = m.num_cluster();
  std::vector<std::string> fail(nc);
  parallel_for(nc, jobs, [&](size_t v) {
    const IVec w = compat_weight(m, static_cast<int>(v));
    for (const DegreeVector& d : dvs) {
      if (dot(w, d.d) < 0) {
        std::ostringstream os;
        os << "omega_" << m.var_name(static_cast<int>(v)) << " . d = "
           << show(dot(w, d.d)) << " < 0 at relation #" << d.relation;
        fail[v] = os.str();
        return;
      }
    }
  });
  const std::string witness = first_failure(fail);
  std::ostringstream os;
  os << nc << " weight vectors x " << dvs.size() << " degree vectors";
  return outcome("compdegree", witness.empty(),
                 witness.empty() ? os.str() : witness);
}

CheckResult check_exchange_degree_equality(const ClusterModel& m, int jobs) {
  const auto& rels = m.relations();
  const size_t nc = m.num_cluster();
  IMat weights(nc);
  for (size_t v = 0; v < nc; ++v)
    weights[v] = compat_weight(m, static_cast<int>(v));
  std::vector<std::string> fail(rels.size());
  size_t pairs = 0;
  parallel_for(rels.size(), jobs, [&](size_t r) {
    const Relation& rel = rels[r];
    for (size_t v = 0; v < nc; ++v) {
      if (static_cast<int>(v) == rel.x1 || static_cast<int>(v) == rel.x2)
        continue;
      const IVec& w = weights[v];
      const Z lhs = w[static_cast<size_t>(rel.x1)] +
                    w[static_cast<size_t>(rel.x2)];
      const Z a = dot(w, rel.term1);
      const Z b = dot(w, rel.term2);
      if (lhs != std::max(a, b)) {
        std::ostringstream os;
        os << "relation " << m.var_name(rel.x1) << " * " << m.var_name(rel.x2)
           << ", weight of " << m.var_name(static_cast<int>(v)) << ": "
           << show(lhs) << " != max(" << show(a) << ", " << show(b) << ")";
        fail[r] = os.str();
        return;
      }
    }
  });
  pairs = rels.size() * (nc >= 2 ? nc - 2 : 0);
  const std::string witness = first_failure(fail);
  std::ostringstream os;
  os << rels.size() << " relations, " << pairs << " (relation, weight) pairs";
  return outcome("equality", witness.empty(),
                 witness.empty() ? os.str() : witness);
}

CheckResult check_interior_weight(const ClusterModel& m) {
  const IMat dmat = primitive_degree_matrix(m);
  const IVec w = total_compat_weight(m);
  Z min_dot;
  bool first = true;
  for (const IVec& d : dmat) {
    const Z x = dot(w, d);
    if (first || x < min_dot) min_dot = x;
    first = false;
  }
  if (!first && min_dot < 2) {
    return outcome("interior", false,
                   "summed weight has degree-vector dot " + show(min_dot) +
                       " < 2");
  }
  if (!dual_cone_contains_relative_interior(m.num_vars(), dmat, w))
    return outcome("interior", false,
                   "summed weight missed the relative interior");
  std::ostringstream os;
  os << "min dot " << (first ? std::string("n/a") : show(min_dot))
     << " over " << dmat.size()
     << " degree vectors; relative interior certified";
  return outcome("interior", true, os.str());
}

CheckResult check_alternating_rays(const ClusterModel& m) {
  const ModelSpec& spec = m.spec();
  const bool abc_even = (spec.family == Family::A ||
                         spec.family == Family::B ||
                         spec.family == Family::C) &&
                        spec.rank % 2 == 0;
  const bool f4 = spec.family == Family::F && spec.rank == 4;
  if (spec.frozen_mode != FrozenMode::None || !(abc_even || f4))
    return skip("result2",
                "hypotheses need an even-rank A/B/C or F4 with no frozen "
                "variables");
  const size_t nc = m.num_cluster();
  for (size_t v = 0; v < nc; ++v) {
    const auto orbit = rotation_orbit(m, static_cast<int>(v));
    if (orbit.size() % 2 == 0) {
      std::ostringstream os;
      os << "rotation orbit of " << m.var_name(static_cast<int>(v))
         << " has even size " << orbit.size();
      return outcome("result2", false, os.str());
    }
  }
  std::set<IVec> hats;
  for (size_t v = 0; v < nc; ++v)
    hats.insert(primitive(alternating_weight(m, static_cast<int>(v))));
  const Cone c = groebner_cone(m);
  if (!is_pointed(c))
    return outcome("result2", false,
                   "cone has a nontrivial lineality space (dim " +
                       std::to_string(lineality_dim(c)) + ")");
  const std::set<IVec> rays = ray_set(c);
  if (hats != rays)
    return outcome("result2", false, show_set_diff(hats, rays));
  std::ostringstream os;
  os << rays.size() << " rays = alternating orbit sums; pointed";
  return outcome("result2", true, os.str());
}

CheckResult check_lineality(const PolygonModel& m) {
  const IMat kernel = kernel_basis(primitive_degree_matrix(m));
  IMat claimed;
  size_t expected_dim = 0;
  if (m.spec().frozen_mode == FrozenMode::Special) {
    claimed = claimed_lineality_basis(m);
    expected_dim = m.table_size() - m.num_cluster() +
                   (m.spec().family == Family::D ? 1 : 0);
  } else {
    ModelSpec full = m.spec();
    full.frozen_mode = FrozenMode::Special;
    const PolygonModel twin = PolygonModel::build(full);
    claimed = claimed_no_frozen(twin).lineality;
    expected_dim = canonical_subspace_basis(claimed).size();
  }
  const size_t claimed_dim = canonical_subspace_basis(claimed).size();
  if (claimed_dim != expected_dim || kernel.size() != expected_dim) {
    std::ostringstream os;
    os << "dimension mismatch: claimed " << claimed_dim << ", kernel "
       << kernel.size() << ", expected " << expected_dim;
    return outcome("lineality", false, os.str());
  }
  if (!spans_equal(claimed, kernel))
    return outcome("lineality", false,
                   "claimed span differs from the degree-matrix kernel");
  return outcome("lineality", true,
                 "span equals the degree-matrix kernel, dim " +
                     std::to_string(expected_dim));
}

CheckResult check_special_rays(const PolygonModel& m) {
  if (m.spec().frozen_mode != FrozenMode::Special)
    return skip("rays", "claimed chord rays describe the frozen-mode cone");
  const IMat claimed = claimed_special_rays(m);
  const Cone c = groebner_cone(m);
  for (const IVec& g : claimed)
    if (!contains(c, g))
      return outcome("rays", false,
                     "claimed generator outside the cone: " + show(g));
  const std::set<IVec> want = class_set(c.lineality, claimed);
  const std::set<IVec> got = ray_set(c);
  if (want != got)
    return outcome("rays", false, show_set_diff(want, got));
  std::ostringstream os;
  os << got.size() << " ray classes from " << claimed.size()
     << " claimed generators";
  return outcome("rays", true, os.str());
}

CheckResult check_no_frozen_claims(const PolygonModel& m) {
  if (m.spec().frozen_mode != FrozenMode::None)
    return skip("nofrozen:claims",
                "claims target the no-frozen cone; rerun with --frozen none");
  ModelSpec full = m.spec();
  full.frozen_mode = FrozenMode::Special;
  const PolygonModel twin = PolygonModel::build(full);
  const NoFrozenClaim claim = claimed_no_frozen(twin);
  const Cone c = groebner_cone(m);

  if (!spans_equal(claim.lineality, c.lineality))
    return outcome("nofrozen:claims", false,
                   "claimed lineality span differs from the computed one");
  for (const IVec& g : claim.rays)
    if (!contains(c, g))
      return outcome("nofrozen:claims", false,
                     "claimed generator outside the cone: " + show(g));

  const std::set<IVec> want = class_set(c.lineality, claim.rays);
  const std::set<IVec> got = ray_set(c);
  std::string ray_note;
  if (want == got) {
    ray_note = std::to_string(got.size()) + " ray classes, exact";
  } else {
    // The even-rank family D list may carry redundant generators: accept
    // when every computed ray is claimed and the extra claimed classes are
    // interior to faces (in the cone, not extremal), and report the count.
    for (const IVec& r : got)
      if (!want.count(r))
        return outcome("nofrozen:claims", false,
                       "computed ray not claimed: " + show(r));
    size_t extras = 0;
    for (const IVec& g : want) {
      if (got.count(g)) continue;
      ++extras;
      if (is_zero(g))
        return outcome("nofrozen:claims", false,
                       "claimed generator lies in the lineality space");
      if (!contains(c, g))
        return outcome("nofrozen:claims", false,
                       "non-extremal claimed class escapes the cone: " +
                           show(g));
    }
    std::ostringstream os;
    os << got.size() << " ray classes; " << extras
       << " redundant claimed classes (in the cone, not extremal)";
    ray_note = os.str();
  }

  if (claim.simplicial) {
    const bool simplicial = is_pointed(c) && c.equations.empty() &&
                            c.rays.size() == m.num_cluster();
    if (!simplicial) {
      std::ostringstream os;
      os << "claimed simplicial, computed: " << c.rays.size() << " rays, "
         << "lineality dim " << lineality_dim(c) << ", cone dim "
         << cone_dim(c) << " in ambient " << m.num_cluster();
      return outcome("nofrozen:claims", false, os.str());
    }
    ray_note += "; pointed simplicial, full-dimensional";
  }
  return outcome("nofrozen:claims", true, ray_note);
}

CheckResult check_no_frozen_two_routes(const ModelSpec& spec) {
  if (!classical(spec.family))
    return skip("nofrozen:routes", "the polygon model covers A-D only");
  ModelSpec full_spec = spec, none_spec = spec;
  full_spec.frozen_mode = FrozenMode::Special;
  none_spec.frozen_mode = FrozenMode::None;
  const PolygonModel m_full = PolygonModel::build(full_spec);
  const PolygonModel m_none = PolygonModel::build(none_spec);

  const Cone full_cone = groebner_cone(m_full);
  IMat frozen_rows;
  for (size_t i = m_full.num_cluster(); i < m_full.table_size(); ++i)
    frozen_rows.push_back(unit_ivec(m_full.table_size(), i));
  std::vector<int> keep(m_full.num_cluster());
  for (size_t i = 0; i < keep.size(); ++i) keep[i] = static_cast<int>(i);
  const Cone sliced =
      project_coordinates(intersect_with_subspace(full_cone, frozen_rows),
                          keep);
  const Cone direct = groebner_cone(m_none);

  const bool structural = cones_equal(sliced, direct);
  const bool mutual = cones_equal_by_containment(sliced, direct);
  if (!structural || !mutual) {
    std::ostringstream os;
    os << "slice-and-project vs direct: canonical "
       << (structural ? "equal" : "DIFFER") << ", containment "
       << (mutual ? "equal" : "DIFFER");
    return outcome("nofrozen:routes", false, os.str());
  }
  std::ostringstream os;
  os << "both routes agree: " << direct.rays.size()
     << " rays, lineality dim " << lineality_dim(direct);
  return outcome("nofrozen:routes", true, os.str());
}

CheckResult check_derivations(const ClusterModel& m, int max_degree,
                              int jobs) {
  const Cone c_prim = primitive_degree_cone(m);
  const size_t nv = m.num_vars();
  const size_t nc = m.num_cluster();

  // All exponent vectors of total degree <= max_degree, enumerated as
  // non-decreasing index multisets so each appears once.
  IMat alphas;
  IVec cur = zero_ivec(nv);
  std::function<void(size_t, int)> grow = [&](size_t from, int left) {
    alphas.push_back(cur);
    if (left == 0) return;
    for (size_t i = from; i < nv; ++i) {
      cur[i] += 1;
      grow(i, left - 1);
      cur[i] -= 1;
    }
  };
  grow(0, max_degree);

  std::vector<std::string> fail(nc);
  std::vector<size_t> nontrivial(nc, 0), applicable(nc, 0);
  parallel_for(nc, jobs, [&](size_t v) {
    for (const IVec& alpha : alphas) {
      const DerivationCheck res =
          derivation_check(m, c_prim, static_cast<int>(v), alpha);
      if (!res.applicable) continue;
      ++applicable[v];
      if (!res.nontrivial) continue;
      ++nontrivial[v];
      if (!res.cone_excluded) {
        fail[v] = "nontrivial derivation with degree in the cone: v = " +
                  m.var_name(static_cast<int>(v)) + ", alpha = " +
                  show(alpha);
        return;
      }
    }
  });
  const std::string witness = first_failure(fail);
  if (!witness.empty()) return outcome("derivations", false, witness);
  size_t total_nontrivial = 0, total_applicable = 0;
  for (size_t v = 0; v < nc; ++v) {
    total_nontrivial += nontrivial[v];
    total_applicable += applicable[v];
  }
  if (total_nontrivial == 0)
    return outcome("derivations", false,
                   "sweep saw no nontrivial derivation (vacuous)");
  std::ostringstream os;
  os << total_nontrivial << " nontrivial of " << total_applicable
     << " applicable derivations (degree <= " << max_degree
     << "), all excluded";
  return outcome("derivations", true, os.str());
}

CheckResult check_cross_model(Family family, int rank) {
  if (!classical(family))
    return skip("crossmodel", "needs a classical family (A-D)");
  validate_rank(family, rank);
  ModelSpec spec;
  spec.family = family;
  spec.rank = rank;
  spec.frozen_mode = FrozenMode::None;
  const PolygonModel pm = PolygonModel::build(spec);
  const RootModel rm = RootModel::build(spec);

  const size_t n = static_cast<size_t>(rank);
  size_t expected = 0;
  switch (family) {
    case Family::A: expected = n * (n + 3) / 2; break;
    case Family::B:
    case Family::C: expected = n * (n + 1); break;
    case Family::D: expected = n * n; break;
    default: break;
  }
  std::ostringstream os;
  const auto mism = [&](const char* what, size_t a, size_t b) {
    os << what << ": polygon " << a << " vs weights " << b;
    return outcome("crossmodel", false, os.str());
  };
  if (pm.num_vars() != expected || rm.num_vars() != expected) {
    os << "variable count: polygon " << pm.num_vars() << ", weights "
       << rm.num_vars() << ", closed form " << expected;
    return outcome("crossmodel", false, os.str());
  }
  if (pm.relations().size() != rm.relations().size())
    return mism("relation count", pm.relations().size(),
                rm.relations().size());
  const size_t pp = primitive_relations(pm).size();
  const size_t rp = primitive_relations(rm).size();
  if (pp != rp) return mism("primitive relation count", pp, rp);
  const Cone pc = groebner_cone(pm);
  const Cone rc = groebner_cone(rm);
  if (lineality_dim(pc) != lineality_dim(rc))
    return mism("lineality dimension", lineality_dim(pc), lineality_dim(rc));
  if (pc.rays.size() != rc.rays.size())
    return mism("ray count", pc.rays.size(), rc.rays.size());
  os << "|V| = " << expected << ", relations = " << pm.relations().size()
     << ", primitive = " << pp << ", lineality dim = " << lineality_dim(pc)
     << ", rays = " << pc.rays.size();
  return outcome("crossmodel", true, os.str());
}

CheckResult check_cone_engine_oracle(int trials, uint32_t seed) {
  std::mt19937 rng(seed);
  // Modulo reduction keeps the draw sequence identical across standard
  // libraries (distribution objects are implementation-defined).
  const auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint32_t>(hi - lo + 1));
  };
  const auto shuffle_rows = [&rng](IMat& rows) {
    for (size_t i = rows.size(); i > 1; --i)
      std::swap(rows[i - 1], rows[rng() % i]);
  };
  int max_dim_seen = 1;
  for (int t = 0; t < trials; ++t) {
    const int dim = draw(1, 6);
    max_dim_seen = std::max(max_dim_seen, dim);
    const int ngen = draw(1, dim + 3);
    IMat gens(static_cast<size_t>(ngen));
    for (IVec& g : gens) {
      g = zero_ivec(static_cast<size_t>(dim));
      for (Z& x : g) x = draw(-3, 3);
    }
    const auto fail_at = [&](const std::string& what) {
      std::ostringstream os;
      os << "trial " << t << " (dim " << dim << ", " << ngen
         << " generators): " << what;
      return outcome("cone-oracle", false, os.str());
    };
    const Cone c = cone_from_generators(static_cast<size_t>(dim), gens);
    if (dual(dual(c)) != c) return fail_at("dual of dual changed the cone");
    // Genuine second double-description pass from the H-representation.
    const Cone rebuilt = cone_from_inequalities(static_cast<size_t>(dim),
                                                c.inequalities, c.equations);
    if (rebuilt != c)
      return fail_at("H-representation rebuild changed the cone");
    if (!cones_equal_by_containment(rebuilt, c))
      return fail_at("H-representation rebuild failed mutual containment");
    for (size_t i = 0; i < c.rays.size(); ++i) {
      IMat others;
      for (size_t j = 0; j < c.rays.size(); ++j)
        if (j != i) others.push_back(c.rays[j]);
      const Cone sub = cone_from_generators(static_cast<size_t>(dim), others,
                                            c.lineality);
      if (contains(sub, c.rays[i]))
        return fail_at("ray " + show(c.rays[i]) +
                       " is not extremal (spanned by the others)");
    }
    shuffle_rows(gens);
    if (cone_from_generators(static_cast<size_t>(dim), gens) != c)
      return fail_at("generator order changed the canonical form");
  }
  std::ostringstream os;
  os << trials << " random cones (dim <= " << max_dim_seen
     << "): rebuild, duality, extremeness and order-independence hold";
  return outcome("cone-oracle", true, os.str());
}

std::vector<CheckResult> run_checks(const ModelSpec& spec, ModelKind kind,
                                    const std::string& check_name, int jobs,
                                    bool long_run) {
  (void)long_run;  // named checks take their scope from the configuration
  validate_rank(spec.family, spec.rank);
  const ModelKind resolved = resolve_model_kind(spec, kind);

  std::unique_ptr<ClusterModel> model;
  const auto get_model = [&]() -> const ClusterModel& {
    if (!model) model = build_model(spec, kind);
    return *model;
  };
  const auto get_polygon = [&]() -> const PolygonModel& {
    const auto* p = dynamic_cast<const PolygonModel*>(&get_model());
    check(p != nullptr, "polygon check dispatched to a non-polygon model");
    return *p;
  };
  const bool polygon = resolved == ModelKind::Polygon;
  if (!polygon && spec.frozen_mode == FrozenMode::Special)
    throw std::invalid_argument(
        "the weight model has no frozen variables; use --frozen none");
  if (polygon && !classical(spec.family))
    throw std::invalid_argument(
        "the polygon model covers families A-D only; use the weight model "
        "for exceptional families");

  std::vector<std::string> names;
  if (check_name == "all") {
    names = {"compdegree", "equality",  "interior",    "result2",
             "lineality",  "rays",      "nofrozen",    "derivations",
             "crossmodel"};
  } else {
    names = {check_name};
  }

  // The lineality/rays/nofrozen generator lists are stated in chord
  // coordinates, so those checks run on the polygon model only.  For a
  // classical family the skip message points at --model polygon; for an
  // exceptional family no polygon model exists at all.
  const std::string chord_skip =
      classical(spec.family)
          ? "the generator claims are stated in chord coordinates; rerun "
            "with --model polygon"
          : "the generator claims cover the polygon families A-D only";

  std::vector<CheckResult> results;
  for (const std::string& name : names) {
    if (name == "compdegree") {
      results.push_back(check_weights_in_cone(get_model(), jobs));
    } else if (name == "equality") {
      results.push_back(check_exchange_degree_equality(get_model(), jobs));
    } else if (name == "interior") {
      results.push_back(check_interior_weight(get_model()));
    } else if (name == "result2") {
      results.push_back(check_alternating_rays(get_model()));
    } else if (name == "lineality") {
      if (!polygon)
        results.push_back(skip("lineality", chord_skip));
      else
        results.push_back(check_lineality(get_polygon()));
    } else if (name == "rays") {
      if (!polygon)
        results.push_back(skip("rays", chord_skip));
      else
        results.push_back(check_special_rays(get_polygon()));
    } else if (name == "nofrozen") {
      if (!polygon) {
        results.push_back(skip("nofrozen:claims", chord_skip));
      } else if (spec.frozen_mode != FrozenMode::None) {
        results.push_back(skip("nofrozen:claims",
                               "targets the no-frozen cone; rerun with "
                               "--frozen none"));
      } else {
        results.push_back(check_no_frozen_claims(get_polygon()));
        results.push_back(check_no_frozen_two_routes(spec));
      }
    } else if (name == "derivations") {
      results.push_back(check_derivations(get_model(), 3, jobs));
    } else if (name == "crossmodel") {
      results.push_back(check_cross_model(spec.family, spec.rank));
    } else {
      throw std::invalid_argument("unknown check: " + name);
    }
  }
  return results;
}

namespace {

struct SweepEntry {
  ModelSpec spec;
  ModelKind kind = ModelKind::Auto;
};

std::vector<SweepEntry> polygon_sweep() {
  std::vector<SweepEntry> out;
  const auto push = [&](Family f, int r) {
    SweepEntry e;
    e.spec.family = f;
    e.spec.rank = r;
    e.spec.frozen_mode = FrozenMode::Special;
    e.kind = ModelKind::Polygon;
    out.push_back(e);
  };
  for (int r = 1; r <= 6; ++r) push(Family::A, r);
  for (int r = 2; r <= 4; ++r) push(Family::B, r);
  for (int r = 2; r <= 4; ++r) push(Family::C, r);
  push(Family::D, 4);
  push(Family::D, 5);
  return out;
}

std::vector<SweepEntry> root_sweep(bool long_run) {
  std::vector<SweepEntry> out;
  const auto push = [&](Family f, int r) {
    SweepEntry e;
    e.spec.family = f;
    e.spec.rank = r;
    e.spec.frozen_mode = FrozenMode::None;
    e.kind = ModelKind::Root;
    out.push_back(e);
  };
  push(Family::A, 2);
  push(Family::B, 2);
  push(Family::G, 2);
  push(Family::F, 4);
  push(Family::E, 6);
  if (long_run) {
    push(Family::E, 7);
    push(Family::E, 8);
  }
  return out;
}

/// Appends "PASS|FAIL <tag>: <detail>" and folds the verdict into `all_ok`.
void fold(CriterionReport& rep, bool& all_ok, const std::string& tag,
          const CheckResult& r) {
  std::string line = r.pass ? "PASS " : "FAIL ";
  if (!r.applicable) line = "SKIP ";
  line += tag + " [" + r.name + "]";
  if (!r.detail.empty()) line += ": " + r.detail;
  rep.lines.push_back(line);
  all_ok = all_ok && r.pass;
}

CriterionReport criterion_1() {
  CriterionReport rep;
  rep.title = "rank-one cone reproduced exactly";
  bool ok = true;

  ModelSpec spec;  // A1, frozen boundary
  const PolygonModel m = PolygonModel::build(spec);
  const auto expect_chord = [&](int idx, int a, int b) {
    return m.orbit(idx).elems.at(0) == make_diag(a, b);
  };
  const bool order_ok = m.table_size() == 6 && expect_chord(0, 1, 3) &&
                        expect_chord(1, 2, 4) && expect_chord(2, 1, 2) &&
                        expect_chord(3, 2, 3) && expect_chord(4, 3, 4) &&
                        expect_chord(5, 1, 4);
  if (!order_ok) {
    rep.lines.push_back("FAIL variable table order changed");
    rep.pass = false;
    return rep;
  }
  rep.lines.push_back(
      "PASS coordinate order: [1,3] [2,4] [1,2] [2,3] [3,4] [1,4]");

  const auto iv6 = [](std::initializer_list<int> xs) {
    IVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
  };
  const IMat lin = {iv6({0, 1, 1, 1, 0, 0}), iv6({1, 0, 0, 1, 1, 0}),
                    iv6({0, 1, 0, 0, 1, 1}), iv6({1, 0, 1, 0, 0, 1})};
  const IMat rays = {iv6({0, 0, -1, 0, 0, 0}), iv6({0, 0, 0, -1, 0, 0})};

  const Cone c = groebner_cone(m);
  const Cone expected = cone_from_generators(6, rays, lin);
  const bool canonical_equal = cones_equal(c, expected);
  // Independent route: compare the canonicalized pieces directly.
  const bool lin_equal = c.lineality == canonical_subspace_basis(lin);
  const bool rays_equal = ray_set(c) == class_set(c.lineality, rays);
  fold(rep, ok, "A1",
       outcome("cone", canonical_equal && lin_equal && rays_equal,
               canonical_equal && lin_equal && rays_equal
                   ? "lineality dim 4 and both rays match the published "
                     "vectors exactly"
                   : "computed cone differs from the published one"));
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_2(bool long_run, int jobs) {
  CriterionReport rep;
  rep.title = "degree-equality sweep over every exchange relation";
  bool ok = true;
  for (const SweepEntry& e : polygon_sweep()) {
    const auto m = build_model(e.spec, e.kind);
    fold(rep, ok, spec_tag(e.spec, e.kind),
         check_exchange_degree_equality(*m, jobs));
  }
  for (const SweepEntry& e : root_sweep(long_run)) {
    const auto m = build_model(e.spec, e.kind);
    fold(rep, ok, spec_tag(e.spec, e.kind),
         check_exchange_degree_equality(*m, jobs));
  }
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_3(bool long_run, int jobs) {
  CriterionReport rep;
  rep.title = "weight vectors in the cone; summed weight interior";
  bool ok = true;
  const auto run = [&](const SweepEntry& e) {
    const auto m = build_model(e.spec, e.kind);
    fold(rep, ok, spec_tag(e.spec, e.kind), check_weights_in_cone(*m, jobs));
    fold(rep, ok, spec_tag(e.spec, e.kind), check_interior_weight(*m));
  };
  for (const SweepEntry& e : polygon_sweep()) run(e);
  for (const SweepEntry& e : root_sweep(long_run)) run(e);
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_4() {
  CriterionReport rep;
  rep.title = "lineality dimensions and spans";
  bool ok = true;
  for (const SweepEntry& e : polygon_sweep()) {
    const PolygonModel m = PolygonModel::build(e.spec);
    fold(rep, ok, spec_tag(e.spec, ModelKind::Polygon), check_lineality(m));
  }
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_5() {
  CriterionReport rep;
  rep.title = "claimed chord rays equal computed rays modulo lineality";
  bool ok = true;
  for (const SweepEntry& e : polygon_sweep()) {
    const PolygonModel m = PolygonModel::build(e.spec);
    fold(rep, ok, spec_tag(e.spec, ModelKind::Polygon),
         check_special_rays(m));
  }
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_6() {
  CriterionReport rep;
  rep.title = "alternating orbit sums are the rays (pointed cones)";
  bool ok = true;
  const auto run = [&](Family f, int r, ModelKind kind) {
    SweepEntry e;
    e.spec.family = f;
    e.spec.rank = r;
    e.spec.frozen_mode = FrozenMode::None;
    e.kind = kind;
    const auto m = build_model(e.spec, e.kind);
    fold(rep, ok, spec_tag(e.spec, e.kind), check_alternating_rays(*m));
  };
  run(Family::A, 2, ModelKind::Polygon);
  run(Family::A, 4, ModelKind::Polygon);
  run(Family::B, 2, ModelKind::Polygon);
  run(Family::B, 4, ModelKind::Polygon);
  run(Family::C, 2, ModelKind::Polygon);
  run(Family::C, 4, ModelKind::Polygon);
  run(Family::F, 4, ModelKind::Root);
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_7() {
  CriterionReport rep;
  rep.title = "no-frozen generator families and both construction routes";
  bool ok = true;
  std::vector<SweepEntry> list;
  const auto push = [&](Family f, int r) {
    SweepEntry e;
    e.spec.family = f;
    e.spec.rank = r;
    e.spec.frozen_mode = FrozenMode::None;
    e.kind = ModelKind::Polygon;
    list.push_back(e);
  };
  for (int r = 2; r <= 5; ++r) push(Family::A, r);
  for (int r = 2; r <= 4; ++r) push(Family::B, r);
  for (int r = 2; r <= 4; ++r) push(Family::C, r);
  push(Family::D, 4);
  push(Family::D, 5);
  for (const SweepEntry& e : list) {
    const PolygonModel m = PolygonModel::build(e.spec);
    fold(rep, ok, spec_tag(e.spec, ModelKind::Polygon),
         check_no_frozen_claims(m));
    fold(rep, ok, spec_tag(e.spec, ModelKind::Polygon),
         check_no_frozen_two_routes(e.spec));
  }
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_8(int jobs) {
  CriterionReport rep;
  rep.title = "derivation degree sweep (total degree <= 3)";
  bool ok = true;
  const auto run = [&](Family f, int r, FrozenMode mode) {
    SweepEntry e;
    e.spec.family = f;
    e.spec.rank = r;
    e.spec.frozen_mode = mode;
    e.kind = ModelKind::Polygon;
    const PolygonModel m = PolygonModel::build(e.spec);
    fold(rep, ok, spec_tag(e.spec, ModelKind::Polygon),
         check_derivations(m, 3, jobs));
  };
  for (const FrozenMode mode : {FrozenMode::Special, FrozenMode::None}) {
    run(Family::A, 2, mode);
    run(Family::A, 3, mode);
    run(Family::B, 2, mode);
  }
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_9() {
  CriterionReport rep;
  rep.title = "polygon and weight models agree on all counts";
  bool ok = true;
  const auto run = [&](Family f, int r) {
    ModelSpec spec;
    spec.family = f;
    spec.rank = r;
    spec.frozen_mode = FrozenMode::None;
    fold(rep, ok, to_string(spec), check_cross_model(f, r));
  };
  for (int r = 1; r <= 4; ++r) run(Family::A, r);
  for (int r = 2; r <= 4; ++r) run(Family::B, r);
  for (int r = 2; r <= 4; ++r) run(Family::C, r);
  run(Family::D, 4);
  rep.pass = ok;
  return rep;
}

CriterionReport criterion_10() {
  CriterionReport rep;
  rep.title = "randomized cone-engine oracle";
  bool ok = true;
  fold(rep, ok, "random cones", check_cone_engine_oracle(200));
  rep.pass = ok;
  return rep;
}

}  // namespace

CriterionReport acceptance_criterion(int k, bool long_run, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  CriterionReport rep;
  switch (k) {
    case 1: rep = criterion_1(); break;
    case 2: rep = criterion_2(long_run, jobs); break;
    case 3: rep = criterion_3(long_run, jobs); break;
    case 4: rep = criterion_4(); break;
    case 5: rep = criterion_5(); break;
    case 6: rep = criterion_6(); break;
    case 7: rep = criterion_7(); break;
    case 8: rep = criterion_8(jobs); break;
    case 9: rep = criterion_9(); break;
    case 10: rep = criterion_10(); break;
    default:
      throw std::invalid_argument("criterion must be between 1 and 10");
  }
  rep.criterion = k;
  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  // The rank-one reproduction must be immediate; enforce the budget here so
  // the binary itself carries the requirement.
  if (k == 1 && rep.seconds >= 1.0) {
    rep.pass = false;
    rep.lines.push_back("FAIL time budget: took " +
                        std::to_string(rep.seconds) + "s, limit 1s");
  }
  return rep;
}

}  // namespace gcone
