#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

#include "gcone/polygon.hpp"
#include "gcone/root_system.hpp"
#include "gcone/verify.hpp"

using namespace gcone;

namespace {

ModelSpec mk(Family f, int rank, FrozenMode mode) {
  ModelSpec s;
  s.family = f;
  s.rank = rank;
  s.frozen_mode = mode;
  return s;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("build_model dispatches and validates configurations") {
  SUBCASE("auto picks the polygon model for classical families") {
    const auto m = build_model(mk(Family::A, 2, FrozenMode::Special));
    CHECK(dynamic_cast<const PolygonModel*>(m.get()) != nullptr);
    CHECK(m->spec().rank == 2);
  }
  SUBCASE("auto picks the weight model for exceptional families") {
    const auto m = build_model(mk(Family::G, 2, FrozenMode::None));
    CHECK(dynamic_cast<const RootModel*>(m.get()) != nullptr);
  }
  SUBCASE("the weight model can be forced for classical families") {
    const auto m =
        build_model(mk(Family::B, 2, FrozenMode::None), ModelKind::Root);
    CHECK(dynamic_cast<const RootModel*>(m.get()) != nullptr);
    CHECK(m->num_vars() == 6);
  }
  SUBCASE("polygon model rejects exceptional families") {
    CHECK_THROWS_AS(
        build_model(mk(Family::E, 6, FrozenMode::None), ModelKind::Polygon),
        std::invalid_argument);
  }
  SUBCASE("weight model rejects special frozen variables") {
    CHECK_THROWS_AS(
        build_model(mk(Family::G, 2, FrozenMode::Special), ModelKind::Root),
        std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::E, 7, FrozenMode::Special)),
                    std::invalid_argument);
  }
  SUBCASE("rank ranges") {
    CHECK_THROWS_AS(build_model(mk(Family::A, 0, FrozenMode::Special)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::B, 1, FrozenMode::Special)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::C, 1, FrozenMode::Special)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::D, 3, FrozenMode::Special)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::E, 5, FrozenMode::None)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::E, 9, FrozenMode::None)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::F, 3, FrozenMode::None)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_model(mk(Family::G, 3, FrozenMode::None)),
                    std::invalid_argument);
    CHECK(build_model(mk(Family::D, 4, FrozenMode::Special))->num_vars() ==
          20);
  }
}

TEST_CASE("parallel_for covers every index exactly once, any job count") {
  for (const int jobs : {1, 3, 7}) {
    CAPTURE(jobs);
    std::vector<std::atomic<int>> hits(101);
    for (auto& h : hits) h = 0;
    parallel_for(hits.size(), jobs, [&](size_t i) { ++hits[i]; });
    for (size_t i = 0; i < hits.size(); ++i) {
      CAPTURE(i);
      CHECK(hits[i] == 1);
    }
  }
}

TEST_CASE("weight vectors lie in the cone; equality check agrees across "
          "job counts") {
  const PolygonModel m =
      PolygonModel::build(mk(Family::A, 3, FrozenMode::Special));
  const CheckResult w = check_weights_in_cone(m, 1);
  CHECK(w.pass);
  CHECK(w.applicable);
  const CheckResult serial = check_exchange_degree_equality(m, 1);
  const CheckResult threaded = check_exchange_degree_equality(m, 3);
  CHECK(serial.pass);
  CHECK(serial.pass == threaded.pass);
  CHECK(serial.detail == threaded.detail);

  const RootModel r = RootModel::build(mk(Family::B, 2, FrozenMode::None));
  CHECK(check_weights_in_cone(r, 1).pass);
  CHECK(check_exchange_degree_equality(r, 1).pass);
}

TEST_CASE("interior weight certificate") {
  const PolygonModel m =
      PolygonModel::build(mk(Family::A, 2, FrozenMode::Special));
  const CheckResult res = check_interior_weight(m);
  CHECK(res.pass);
  CHECK(res.detail.find("relative interior certified") != std::string::npos);
  const RootModel g = RootModel::build(mk(Family::G, 2, FrozenMode::None));
  CHECK(check_interior_weight(g).pass);
}

TEST_CASE("alternating orbit sums: hypotheses gate the check") {
  SUBCASE("even-rank A with no frozen variables passes") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::A, 2, FrozenMode::None));
    const CheckResult res = check_alternating_rays(m);
    CHECK(res.pass);
    CHECK(res.applicable);
    CHECK(res.detail.find("pointed") != std::string::npos);
  }
  SUBCASE("odd rank is out of scope") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::A, 3, FrozenMode::None));
    const CheckResult res = check_alternating_rays(m);
    CHECK(res.pass);
    CHECK_FALSE(res.applicable);
  }
  SUBCASE("frozen variables are out of scope") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::B, 2, FrozenMode::Special));
    CHECK_FALSE(check_alternating_rays(m).applicable);
  }
}

TEST_CASE("lineality claims verify in both frozen modes") {
  const PolygonModel special =
      PolygonModel::build(mk(Family::B, 2, FrozenMode::Special));
  const CheckResult s = check_lineality(special);
  CHECK(s.pass);
  CHECK(s.detail.find("dim 3") != std::string::npos);

  const PolygonModel none =
      PolygonModel::build(mk(Family::A, 3, FrozenMode::None));
  const CheckResult n = check_lineality(none);
  CHECK(n.pass);
  CHECK(n.detail.find("dim 1") != std::string::npos);
}

TEST_CASE("claimed chord rays match the computed rays") {
  const PolygonModel m =
      PolygonModel::build(mk(Family::A, 2, FrozenMode::Special));
  const CheckResult res = check_special_rays(m);
  CHECK(res.pass);
  CHECK(res.applicable);
  const PolygonModel none =
      PolygonModel::build(mk(Family::A, 2, FrozenMode::None));
  CHECK_FALSE(check_special_rays(none).applicable);
}

TEST_CASE("no-frozen claims: exact families and the redundant rank-4 D "
          "list") {
  SUBCASE("A2 is pointed simplicial and exact") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::A, 2, FrozenMode::None));
    const CheckResult res = check_no_frozen_claims(m);
    CHECK(res.pass);
    CHECK(res.detail.find("exact") != std::string::npos);
    CHECK(res.detail.find("simplicial") != std::string::npos);
  }
  SUBCASE("A3 (odd rank) is exact") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::A, 3, FrozenMode::None));
    const CheckResult res = check_no_frozen_claims(m);
    CHECK(res.pass);
    CHECK(res.detail.find("exact") != std::string::npos);
  }
  SUBCASE("D4 passes with exactly 12 redundant claimed classes") {
    const PolygonModel m =
        PolygonModel::build(mk(Family::D, 4, FrozenMode::None));
    const CheckResult res = check_no_frozen_claims(m);
    CHECK(res.pass);
    CHECK(res.detail.find("32 ray classes") != std::string::npos);
    CHECK(res.detail.find("12 redundant claimed classes") !=
          std::string::npos);
  }
}

TEST_CASE("both no-frozen construction routes agree") {
  CHECK(check_no_frozen_two_routes(mk(Family::A, 2, FrozenMode::None)).pass);
  const CheckResult b2 =
      check_no_frozen_two_routes(mk(Family::B, 2, FrozenMode::None));
  CHECK(b2.pass);
  CHECK(b2.applicable);
  CHECK_FALSE(
      check_no_frozen_two_routes(mk(Family::E, 6, FrozenMode::None))
          .applicable);
}

TEST_CASE("derivation sweep sees nontrivial cases and no counterexamples") {
  const PolygonModel m =
      PolygonModel::build(mk(Family::A, 2, FrozenMode::Special));
  const CheckResult res = check_derivations(m, 3, 1);
  CHECK(res.pass);
  CHECK(res.detail.find("nontrivial") != std::string::npos);
  const CheckResult threaded = check_derivations(m, 3, 2);
  CHECK(threaded.pass == res.pass);
  CHECK(threaded.detail == res.detail);
}

TEST_CASE("cross-model agreement and its scope") {
  const CheckResult a2 = check_cross_model(Family::A, 2);
  CHECK(a2.pass);
  CHECK(a2.detail.find("|V| = 5") != std::string::npos);
  CHECK_FALSE(check_cross_model(Family::F, 4).applicable);
  CHECK_THROWS_AS(check_cross_model(Family::D, 3), std::invalid_argument);
}

TEST_CASE("cone-engine oracle passes on short runs with fresh seeds") {
  CHECK(check_cone_engine_oracle(25, 0xabcdu).pass);
  CHECK(check_cone_engine_oracle(25, 0x1234u).pass);
}

TEST_CASE("run_checks dispatch, skip semantics and unknown names") {
  SUBCASE("all on a frozen A1 configuration") {
    const auto results = run_checks(mk(Family::A, 1, FrozenMode::Special),
                                    ModelKind::Auto, "all");
    REQUIRE(results.size() == 9);
    for (const CheckResult& r : results) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    // result2 and the no-frozen claims do not cover this configuration.
    CHECK_FALSE(results[3].applicable);
    CHECK_FALSE(results[6].applicable);
  }
  SUBCASE("all on a no-frozen A2 configuration runs both route checks") {
    const auto results = run_checks(mk(Family::A, 2, FrozenMode::None),
                                    ModelKind::Auto, "all");
    REQUIRE(results.size() == 10);
    for (const CheckResult& r : results) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
  SUBCASE("closed-form checks are skipped for the weight model") {
    const auto results = run_checks(mk(Family::G, 2, FrozenMode::None),
                                    ModelKind::Auto, "rays");
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
    CHECK_FALSE(results[0].applicable);
  }
  SUBCASE("unknown names and invalid configurations throw") {
    CHECK_THROWS_AS(run_checks(mk(Family::A, 2, FrozenMode::Special),
                               ModelKind::Auto, "nonsense"),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_checks(mk(Family::G, 2, FrozenMode::Special),
                               ModelKind::Auto, "compdegree"),
                    std::invalid_argument);
  }
}

TEST_CASE("acceptance driver: the rank-one criterion is exact and fast") {
  const CriterionReport rep = acceptance_criterion(1);
  CHECK(rep.pass);
  CHECK(rep.criterion == 1);
  CHECK(rep.seconds < 1.0);
  REQUIRE(rep.lines.size() >= 2);
  CHECK(rep.lines[0].find("PASS") == 0);
  CHECK_THROWS_AS(acceptance_criterion(0), std::invalid_argument);
  CHECK_THROWS_AS(acceptance_criterion(11), std::invalid_argument);
}

}  // TEST_SUITE
