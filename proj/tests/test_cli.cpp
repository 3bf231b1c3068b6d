#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gcone/cli_app.hpp"
#include "gcone/json_io.hpp"

using namespace gcone;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("cone command reproduces the rank-one cone in table order") {
  const CliRun r = cli({"cone", "--family", "A", "--rank", "1", "--frozen",
                        "special"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "configuration: A1"));
  CHECK(has(r.out, "coordinates (6): [1,3] [2,4] [1,2] [2,3] [3,4] [1,4]"));
  CHECK(has(r.out, "lineality basis (4):"));
  CHECK(has(r.out, "rays (2):"));
  // Canonical representatives of the edge rays modulo the lineality space.
  CHECK(has(r.out, "(0, 0, 0, 0, -1, 0)"));
  CHECK(has(r.out, "(0, 0, 0, 0, 0, -1)"));
  // The facet normals are the two degree vectors.
  CHECK(has(r.out, "(1, 1, -1, 0, -1, 0)"));
  CHECK(has(r.out, "(1, 1, 0, -1, 0, -1)"));
}

TEST_CASE("usage errors exit with code 2 and a diagnostic") {
  const std::vector<std::vector<std::string>> bad = {
      {},                                                    // no subcommand
      {"frobnicate"},                                        // unknown
      {"cone", "--family", "X"},                             // bad family
      {"cone", "--family", "AB"},                            // bad family
      {"cone", "-f", "E", "-r", "6", "--model", "polygon"},  // no polygon E
      {"verify", "-f", "G", "-r", "2", "--frozen", "special"},
      {"cone", "-f", "A", "-r", "0"},                        // bad rank
      {"cone", "-f", "D", "-r", "3"},                        // bad rank
      {"cone", "-f", "G", "-r", "3"},                        // bad rank
      {"cone", "-f", "A", "-r", "2", "--frozen", "weird"},   // bad value
      {"verify", "--check", "bogus", "-f", "A", "-r", "2"},  // bad check
      {"verify", "-f", "A", "-r", "2", "--jobs", "0"},       // bad jobs
  };
  for (const auto& args : bad) {
    CAPTURE(args.empty() ? std::string("<empty>") : args[0]);
    const CliRun r = cli(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits 0 and lists the subcommands") {
  const CliRun r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "cone"));
  CHECK(has(r.out, "verify"));
  CHECK(has(r.out, "relations"));
}

TEST_CASE("verify: equality suite passes for the weight model of G2") {
  const CliRun r = cli({"verify", "--check", "equality", "--family", "G",
                        "--rank", "2"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "PASS equality"));
  CHECK(has(r.out, "0 failed"));
}

TEST_CASE("verify: full suite passes on the no-frozen rank-4 D "
          "configuration") {
  const CliRun r = cli({"verify", "--check", "all", "--family", "D",
                        "--rank", "4", "--frozen", "none"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "PASS nofrozen:claims"));
  CHECK(has(r.out, "redundant claimed classes"));
  CHECK(has(r.out, "PASS nofrozen:routes"));
  CHECK(has(r.out, "0 failed"));
}

TEST_CASE("verify: inapplicable named checks are skipped, exit 0") {
  const CliRun r = cli({"verify", "--check", "rays", "--family", "F",
                        "--rank", "4"});
  REQUIRE(r.code == 0);
  CHECK(has(r.out, "SKIP rays"));
  CHECK(has(r.out, "1 skipped"));
}

TEST_CASE("relations listing and the primitive filter") {
  const CliRun all = cli({"relations", "-f", "A", "-r", "2"});
  REQUIRE(all.code == 0);
  CHECK(has(all.out, "relations: 5"));
  CHECK(has(all.out, " = "));
  const CliRun prim =
      cli({"relations", "-f", "A", "-r", "2", "--primitive-only"});
  REQUIRE(prim.code == 0);
  CHECK(has(prim.out, "primitive relations: 5"));
  CHECK(has(prim.out, "degree vector (term"));
}

TEST_CASE("variables and compat tables") {
  const CliRun vars = cli({"variables", "-f", "A", "-r", "2"});
  REQUIRE(vars.code == 0);
  CHECK(has(vars.out, "variables: 10 (5 cluster, 5 frozen)"));
  CHECK(has(vars.out, "cluster  [1,3]"));
  CHECK(has(vars.out, "frozen   [1,2]"));

  const CliRun compat = cli({"compat", "-f", "A", "-r", "1"});
  REQUIRE(compat.code == 0);
  CHECK(has(compat.out, "[1,3]: 0 1 0 0 0 0"));
  CHECK(has(compat.out, "[2,4]: 1 0 0 0 0 0"));
}

TEST_CASE("JSON artifacts round-trip byte-for-byte") {
  SUBCASE("polygon model, frozen boundary") {
    const CliRun r =
        cli({"cone", "-f", "A", "-r", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "\"family\": \"A\""));
    CHECK(has(r.out, "\"frozen_mode\": \"special\""));
    CHECK(round_trip_cone_json(r.out) == r.out);
    const ParsedConeArtifact parsed = parse_cone_json(r.out);
    CHECK(parsed.dim == 10);
    CHECK(parsed.lineality.size() == 5);
  }
  SUBCASE("weight model") {
    const CliRun r =
        cli({"cone", "-f", "G", "-r", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "\"frozen_mode\": \"none\""));
    CHECK(round_trip_cone_json(r.out) == r.out);
    CHECK(parse_cone_json(r.out).dim == 8);
  }
  SUBCASE("malformed artifacts are rejected") {
    CHECK_THROWS_AS(parse_cone_json("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_cone_json("{\"family\": \"Z\"}"),
                    std::runtime_error);
  }
}

TEST_CASE("output is deterministic and independent of the job count") {
  const std::vector<std::string> base = {"verify", "--check", "equality",
                                         "-f", "A", "-r", "3"};
  const CliRun once = cli(base);
  const CliRun twice = cli(base);
  REQUIRE(once.code == 0);
  CHECK(once.out == twice.out);
  std::vector<std::string> jobs = base;
  jobs.push_back("--jobs");
  jobs.push_back("3");
  const CliRun threaded = cli(jobs);
  CHECK(threaded.code == 0);
  CHECK(threaded.out == once.out);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "cli_out_roundtrip.json";
  const CliRun direct =
      cli({"cone", "-f", "B", "-r", "2", "--format", "json"});
  REQUIRE(direct.code == 0);
  const CliRun filed = cli({"cone", "-f", "B", "-r", "2", "--format", "json",
                            "--out", path});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());
}

}  // TEST_SUITE
