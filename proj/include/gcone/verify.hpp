/**
 * @file verify.hpp
 * @brief Verification suites over the cluster models: named checks for the
 *        CLI (`verify --check ...`), the acceptance-criteria drivers, model
 *        construction with configuration validation, and a randomized oracle
 *        for the cone engine.
 *
 * Every check returns a CheckResult instead of throwing: `pass` reports the
 * verdict, `applicable` records whether the check's hypotheses cover the
 * requested configuration (inapplicable checks pass vacuously and say so in
 * `detail`), and `detail` carries the first failing witness on failure.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gcone/cone.hpp"
#include "gcone/model.hpp"
#include "gcone/polygon.hpp"

namespace gcone {

/// Which concrete model realizes a spec. Auto picks the polygon model for
/// families A-D and the weight model for E/F/G.
enum class ModelKind { Polygon, Root, Auto };

ModelKind resolve_model_kind(const ModelSpec& spec, ModelKind kind);

/// Validates the configuration and constructs the model. Throws
/// std::invalid_argument (a usage error, not a verification failure) when
///  - the rank is out of range (A: >=1, B/C: >=2, D: >=4, E: 6..8, F: 4,
///    G: 2),
///  - the polygon model is requested for an exceptional family, or
///  - the weight model is requested with special frozen variables (it has
///    none).
std::unique_ptr<ClusterModel> build_model(const ModelSpec& spec,
                                          ModelKind kind = ModelKind::Auto);

struct CheckResult {
  std::string name;
  bool pass = true;
  bool applicable = true;
  std::string detail;
};

/// Runs fn(0..n-1) across up to `jobs` threads. Callers keep determinism by
/// writing only to pre-sized per-index slots; aggregation happens after the
/// join. jobs <= 1 runs inline.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

// --- named checks ---------------------------------------------------------

/// Every compatibility-degree weight vector lies in the Gröbner cone:
/// dot(omega_v, d) >= 0 for all cluster v and all primitive degree vectors.
CheckResult check_weights_in_cone(const ClusterModel& m, int jobs = 1);

/// For every exchange relation and every cluster variable v not in the
/// exchanged pair: dot(omega_v, deg(x x')) equals the larger of the two
/// term degrees.
CheckResult check_exchange_degree_equality(const ClusterModel& m,
                                           int jobs = 1);

/// The summed weight vector dots every primitive degree vector to >= 2 and
/// lies in the relative interior of the Gröbner cone.
CheckResult check_interior_weight(const ClusterModel& m);

/// No-frozen A/B/C of even rank, or F4: all rotation orbits have odd size,
/// the alternating orbit sums are exactly the rays of the Gröbner cone, and
/// the cone is pointed.
CheckResult check_alternating_rays(const ClusterModel& m);

/// The claimed lineality generators span exactly the kernel of the
/// primitive-degree matrix (mutual containment), with the expected
/// dimension: number of frozen variables, plus one in family D; in the
/// no-frozen mode the dimension the claim itself carries.
CheckResult check_lineality(const PolygonModel& m);

/// Frozen mode: the claimed chord/diameter-run rays all lie in the Gröbner
/// cone and coincide with its extreme rays modulo the lineality space.
CheckResult check_special_rays(const PolygonModel& m);

/// No-frozen mode: claimed lineality and rays match the computed cone.
/// The even-rank family D list is allowed to be redundant: if the computed
/// rays are a subset of the claimed classes and every extra claimed class
/// still lies in the cone (just not on an extreme ray), the check passes
/// and reports the redundancy count. Even-rank A/B/C additionally asserts
/// a pointed simplicial cone (ray count = ambient dimension).
CheckResult check_no_frozen_claims(const PolygonModel& m);

/// Both constructions of the no-frozen Gröbner cone agree exactly:
/// slicing the full cone by the vanishing of all frozen coordinates and
/// projecting onto the cluster coordinates, versus the dual of the
/// no-frozen primitive-degree cone.
CheckResult check_no_frozen_two_routes(const ModelSpec& spec);

/// Degree-level derivation sweep: for every cluster variable v and every
/// exponent vector alpha of total degree <= max_degree over all variables,
/// a non-trivial derivation z^alpha d/dz_v has e_v - deg(alpha) outside the
/// primitive-degree cone. Also reports how many non-trivial derivations the
/// sweep saw (zero would make the check vacuous).
CheckResult check_derivations(const ClusterModel& m, int max_degree = 3,
                              int jobs = 1);

/// Polygon and weight models agree for a classical family (no frozen
/// variables): variable count (against the closed form per family),
/// relation count, primitive-relation count, lineality dimension and ray
/// count of the Gröbner cone.
CheckResult check_cross_model(Family family, int rank);

/// Randomized double-description oracle: `trials` random generator sets
/// (dimension <= 6, entries in [-3,3]) with a deterministic seed. For each:
/// rebuilding from the computed inequalities reproduces the cone (a genuine
/// second double-description pass, confirmed by mutual containment), every
/// reported ray is extremal (drops out of the cone generated by the
/// others), and a seeded shuffle of the generators yields the identical
/// canonical form.
CheckResult check_cone_engine_oracle(int trials = 200,
                                     uint32_t seed = 0x5eed5u);

/// Dispatch for the CLI surface: runs the named suite ("compdegree",
/// "equality", "interior", "result2", "lineality", "rays", "nofrozen",
/// "derivations", "crossmodel" or "all") against the configuration.
/// Checks whose hypotheses do not cover the configuration come back
/// applicable = false, pass = true. Throws std::invalid_argument for an
/// unknown check name or an invalid configuration.
std::vector<CheckResult> run_checks(const ModelSpec& spec, ModelKind kind,
                                    const std::string& check_name,
                                    int jobs = 1, bool long_run = false);

// --- acceptance drivers ----------------------------------------------------

struct CriterionReport {
  int criterion = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::string> lines;  ///< per-configuration outcomes
};

/// Runs acceptance criterion k (1..10). `long_run` adds the E7/E8 sweeps to
/// criteria 2 and 3. Throws std::invalid_argument for k out of range.
CriterionReport acceptance_criterion(int k, bool long_run = false,
                                     int jobs = 1);

}  // namespace gcone
