#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gcone/linalg.hpp"
#include "gcone/polygon.hpp"
#include "gcone/root_system.hpp"
#include "test_util.hpp"

using namespace gcone;
using gcone::testutil::im;
using gcone::testutil::iv;

namespace {

RootModel root(Family f, int n) {
  return RootModel::build(ModelSpec{f, n, FrozenMode::None});
}

int var_by_weight(const RootModel& m, std::initializer_list<long> w) {
  const int idx = m.index_of_weight(iv(w));
  REQUIRE(idx >= 0);
  return idx;
}

const Relation& relation_between(const RootModel& m, int i, int j) {
  for (const Relation& r : m.relations())
    if ((r.x1 == i && r.x2 == j) || (r.x1 == j && r.x2 == i)) return r;
  FAIL("no relation between the given variables");
  static Relation dummy;
  return dummy;
}

// Multiset of sorted compatibility rows — a permutation-invariant signature
// of the compatibility table used to compare two models of the same type.
std::multiset<std::vector<int>> compat_signature(const ClusterModel& m,
                                                 size_t limit) {
  std::multiset<std::vector<int>> sig;
  for (size_t i = 0; i < limit; ++i) {
    std::vector<int> row;
    for (size_t j = 0; j < limit; ++j)
      if (i != j) row.push_back(m.compat(static_cast<int>(i),
                                         static_cast<int>(j)));
    std::sort(row.begin(), row.end());
    sig.insert(row);
  }
  return sig;
}

}  // namespace

TEST_SUITE("root_model") {

TEST_CASE("Cartan matrices carry the asymmetric bonds on the right rows") {
  CHECK(cartan_matrix(Family::A, 3) == im({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  CHECK(cartan_matrix(Family::B, 2) == im({{2, -1}, {-2, 2}}));
  CHECK(cartan_matrix(Family::C, 2) == im({{2, -2}, {-1, 2}}));
  CHECK(cartan_matrix(Family::B, 3) ==
        im({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  CHECK(cartan_matrix(Family::C, 3) ==
        im({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  CHECK(cartan_matrix(Family::D, 4) ==
        im({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  CHECK(cartan_matrix(Family::G, 2) == im({{2, -1}, {-3, 2}}));
  CHECK(cartan_matrix(Family::F, 4) ==
        im({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));

  // E6: chain 1-3-4-5-6 with node 2 hanging off node 4.
  const IMat e6 = cartan_matrix(Family::E, 6);
  auto bonded = [&](int i, int j) { return e6[i - 1][j - 1] == -1; };
  CHECK(bonded(1, 3));
  CHECK(bonded(3, 4));
  CHECK(bonded(4, 5));
  CHECK(bonded(5, 6));
  CHECK(bonded(2, 4));
  CHECK(e6[0][1] == 0);  // nodes 1 and 2 are not adjacent
  CHECK(e6[1][5] == 0);
  Z off_diagonal_bonds = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) off_diagonal_bonds += e6[i][j];
  CHECK(off_diagonal_bonds == -10);  // five simple bonds, both directions

  CHECK_THROWS(cartan_matrix(Family::B, 1));
  CHECK_THROWS(cartan_matrix(Family::D, 2));
  CHECK_THROWS(cartan_matrix(Family::E, 5));
  CHECK_THROWS(cartan_matrix(Family::E, 9));
  CHECK_THROWS(cartan_matrix(Family::F, 3));
  CHECK_THROWS(cartan_matrix(Family::G, 3));
}

TEST_CASE("finite-type recognition accepts the classification and nothing else") {
  for (int n = 1; n <= 5; ++n) CHECK(is_finite_type_cartan(cartan_matrix(Family::A, n)));
  for (int n = 2; n <= 4; ++n) {
    CHECK(is_finite_type_cartan(cartan_matrix(Family::B, n)));
    CHECK(is_finite_type_cartan(cartan_matrix(Family::C, n)));
  }
  for (int n = 3; n <= 5; ++n) CHECK(is_finite_type_cartan(cartan_matrix(Family::D, n)));
  for (int n = 6; n <= 8; ++n) CHECK(is_finite_type_cartan(cartan_matrix(Family::E, n)));
  CHECK(is_finite_type_cartan(cartan_matrix(Family::F, 4)));
  CHECK(is_finite_type_cartan(cartan_matrix(Family::G, 2)));

  CHECK_FALSE(is_finite_type_cartan(im({{2, -2}, {-2, 2}})));   // affine
  CHECK_FALSE(is_finite_type_cartan(im({{2, -1}, {-5, 2}})));   // indefinite
  CHECK_FALSE(is_finite_type_cartan(im({{2, -1}, {-4, 2}})));   // affine
  CHECK_FALSE(is_finite_type_cartan(im({{2, 1}, {1, 2}})));     // positive bond
  CHECK_FALSE(is_finite_type_cartan(im({{1, -1}, {-1, 2}})));   // diagonal != 2
  // Zero pattern must be symmetric.
  CHECK_FALSE(is_finite_type_cartan(im({{2, -1, 0}, {0, 2, -1}, {-1, 0, 2}})));
}

TEST_CASE("Coxeter exchange matrix and matrix mutation") {
  CHECK(coxeter_b_matrix(cartan_matrix(Family::B, 2)) == im({{0, 1}, {-2, 0}}));
  CHECK(coxeter_b_matrix(cartan_matrix(Family::A, 3)) ==
        im({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  CHECK(coxeter_b_matrix(cartan_matrix(Family::G, 2)) == im({{0, 1}, {-3, 0}}));

  const IMat a3 = coxeter_b_matrix(cartan_matrix(Family::A, 3));
  CHECK(matrix_mutation(a3, 1) == im({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));

  for (Family f : {Family::B, Family::G}) {
    const IMat b = coxeter_b_matrix(cartan_matrix(f, f == Family::G ? 2 : 3));
    for (int k = 0; k < static_cast<int>(b.size()); ++k) {
      const IMat once = matrix_mutation(b, k);
      CHECK(matrix_mutation(once, k) == b);  // involution
      for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
          CHECK(once[i][j] * once[j][i] <= 0);  // stays sign-skew-symmetric
          CHECK(((once[i][j] == 0) == (once[j][i] == 0)));
        }
    }
  }
}

TEST_CASE("variable counts follow n(h+2)/2") {
  const std::vector<std::tuple<Family, int, size_t>> table = {
      {Family::A, 1, 2},  {Family::A, 2, 5},  {Family::A, 3, 9},
      {Family::A, 4, 14}, {Family::A, 5, 20}, {Family::B, 2, 6},
      {Family::B, 3, 12}, {Family::B, 4, 20}, {Family::C, 2, 6},
      {Family::C, 3, 12}, {Family::C, 4, 20}, {Family::D, 3, 9},
      {Family::D, 4, 16}, {Family::D, 5, 25}, {Family::G, 2, 8},
      {Family::F, 4, 28}, {Family::E, 6, 42}, {Family::E, 7, 70},
      {Family::E, 8, 128}};
  for (const auto& [f, n, count] : table) {
    const auto m = root(f, n);
    CHECK(m.num_vars() == count);
    CHECK(m.num_cluster() == count);  // no frozen variables in this model
  }
  CHECK_THROWS(RootModel::build(ModelSpec{Family::A, 2, FrozenMode::Special}));
}

TEST_CASE("exact variable tables for the rank-two types") {
  const auto b2 = root(Family::B, 2);
  const std::vector<IVec> b2_expected = {iv({1, 0}), iv({-1, 2}), iv({-1, 0}),
                                         iv({0, 1}), iv({-1, 1}), iv({0, -1})};
  REQUIRE(b2.num_vars() == b2_expected.size());
  for (size_t v = 0; v < b2_expected.size(); ++v)
    CHECK(b2.weight(static_cast<int>(v)) == b2_expected[v]);

  const auto g2 = root(Family::G, 2);
  const std::vector<IVec> g2_expected = {
      iv({1, 0}),  iv({-1, 3}), iv({-2, 3}), iv({-1, 0}),
      iv({0, 1}),  iv({-1, 2}), iv({-1, 1}), iv({0, -1})};
  REQUIRE(g2.num_vars() == g2_expected.size());
  for (size_t v = 0; v < g2_expected.size(); ++v)
    CHECK(g2.weight(static_cast<int>(v)) == g2_expected[v]);

  // Names are the printed coordinates.
  CHECK(b2.var_name(1) == "(-1,2)");
  CHECK(g2.var_name(4) == "(0,1)");
}

TEST_CASE("the rotation permutes each orbit and inverts correctly") {
  const auto b2 = root(Family::B, 2);
  CHECK(b2.tau(0) == 1);
  CHECK(b2.tau(1) == 2);
  CHECK(b2.tau(2) == 0);
  CHECK(b2.tau(3) == 4);
  CHECK(b2.tau(4) == 5);
  CHECK(b2.tau(5) == 3);
  CHECK(b2.tau_period() == 3);

  const auto g2 = root(Family::G, 2);
  CHECK(g2.tau_period() == 4);
  for (int v = 0; v < 8; ++v) {
    CHECK(g2.tau_inv(g2.tau(v)) == v);
    CHECK(g2.rotate(v) == g2.tau(v));
  }

  const auto a2 = root(Family::A, 2);
  CHECK(a2.tau_period() == 5);  // single pentagon cycle
  int cur = 0;
  std::set<int> seen;
  for (int k = 0; k < 5; ++k) {
    seen.insert(cur);
    cur = a2.tau(cur);
  }
  CHECK(cur == 0);
  CHECK(seen.size() == 5);
}

TEST_CASE("compatibility degree pins") {
  const auto a1 = root(Family::A, 1);
  CHECK(a1.compat(0, 1) == 1);
  CHECK(a1.compat(1, 0) == 1);

  const auto a2 = root(Family::A, 2);
  const int w1 = var_by_weight(a2, {1, 0});
  const int cw1 = var_by_weight(a2, {-1, 1});
  const int nw1 = var_by_weight(a2, {-1, 0});
  const int nw2 = var_by_weight(a2, {0, -1});
  CHECK(a2.compat(w1, cw1) == 1);
  CHECK(a2.compat(w1, nw1) == 1);
  CHECK(a2.compat(w1, nw2) == 0);
  CHECK(a2.compat(w1, var_by_weight(a2, {0, 1})) == 0);

  const auto b2 = root(Family::B, 2);
  CHECK(b2.compat(var_by_weight(b2, {0, 1}), var_by_weight(b2, {-1, 0})) == 2);
  CHECK(b2.compat(var_by_weight(b2, {-1, 0}), var_by_weight(b2, {0, 1})) == 1);
  CHECK(b2.compat(var_by_weight(b2, {1, 0}), var_by_weight(b2, {-1, 0})) == 1);
  CHECK(b2.compat(var_by_weight(b2, {-1, 0}), var_by_weight(b2, {1, 0})) == 1);

  const auto g2 = root(Family::G, 2);
  CHECK(g2.compat(var_by_weight(g2, {1, 0}), var_by_weight(g2, {-1, 0})) == 1);
  CHECK(g2.compat(var_by_weight(g2, {1, 0}), var_by_weight(g2, {-2, 3})) == 2);
}

TEST_CASE("compatibility vanishes symmetrically and on the diagonal") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::G, 2}}) {
    const auto m = root(f, n);
    const int total = static_cast<int>(m.num_vars());
    for (int i = 0; i < total; ++i) {
      CHECK(m.compat(i, i) == 0);
      for (int j = 0; j < total; ++j)
        CHECK((m.compat(i, j) == 0) == (m.compat(j, i) == 0));
    }
  }
}

TEST_CASE("exchange relation pins") {
  const auto a1 = root(Family::A, 1);
  REQUIRE(a1.relations().size() == 1);
  const Relation& r1 = a1.relations()[0];
  CHECK(is_zero(r1.term1));
  CHECK(is_zero(r1.term2));
  CHECK(r1.term1_primitive);
  CHECK(r1.term2_primitive);

  const auto a2 = root(Family::A, 2);
  const Relation& r2 =
      relation_between(a2, var_by_weight(a2, {1, 0}), var_by_weight(a2, {-1, 1}));
  IVec expected = zero_ivec(a2.num_vars());
  expected[static_cast<size_t>(var_by_weight(a2, {0, 1}))] = 1;
  const bool direct = r2.term1 == expected && is_zero(r2.term2);
  const bool swapped = r2.term2 == expected && is_zero(r2.term1);
  CHECK((direct || swapped));
  CHECK(r2.primitive());

  const auto b2 = root(Family::B, 2);
  const Relation& r3 =
      relation_between(b2, var_by_weight(b2, {1, 0}), var_by_weight(b2, {-1, 0}));
  IVec diam_sq = zero_ivec(b2.num_vars());
  diam_sq[static_cast<size_t>(var_by_weight(b2, {0, -1}))] = 2;
  const bool d3 = r3.term2 == diam_sq && is_zero(r3.term1);
  const bool s3 = r3.term1 == diam_sq && is_zero(r3.term2);
  CHECK((d3 || s3));
  CHECK(r3.primitive());
}

TEST_CASE("exchange transport meets exactly the two monomials") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
           {Family::G, 2}}) {
    const auto m = root(f, n);
    const int total = static_cast<int>(m.num_vars());
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j) {
        if (!m.exchangeable(i, j)) continue;
        CHECK(m.exchange_scan_values(i, j).size() == 2);
      }
  }
  const auto a1 = root(Family::A, 1);
  CHECK(a1.exchange_scan_values(0, 1).size() == 1);
}

TEST_CASE("relation census matches the polygon realizations") {
  CHECK(root(Family::A, 3).relations().size() == 15);
  CHECK(root(Family::B, 3).relations().size() == 22);
  CHECK(root(Family::D, 4).relations().size() == 52);

  // Primitive relations are exactly the τ-neighbour pairs: one per variable
  // when every τ-cycle has length at least three.
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::G, 2}}) {
    const auto m = root(f, n);
    CHECK(primitive_relations(m).size() == m.num_vars());
  }
  CHECK(primitive_relations(root(Family::A, 1)).size() == 1);
}

TEST_CASE("cluster counts across all families") {
  const std::vector<std::tuple<Family, int, size_t>> table = {
      {Family::A, 1, 2},   {Family::A, 2, 5},  {Family::A, 3, 14},
      {Family::B, 2, 6},   {Family::B, 3, 20}, {Family::C, 3, 20},
      {Family::D, 4, 50},  {Family::G, 2, 8},  {Family::F, 4, 105},
      {Family::E, 6, 833}};
  for (const auto& [f, n, count] : table) {
    const auto m = root(f, n);
    const auto clusters = enumerate_clusters(m);
    CHECK(clusters.size() == count);
    for (const auto& cl : clusters) CHECK(cl.size() == m.rank());
  }
}

TEST_CASE("weight model agrees with the frozen-free polygon model") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::B, 2}, {Family::A, 3}, {Family::D, 4}}) {
    const auto rm = root(f, n);
    const auto pm = PolygonModel::build(ModelSpec{f, n, FrozenMode::None});
    REQUIRE(rm.num_vars() == pm.num_vars());
    CHECK(compat_signature(rm, rm.num_vars()) ==
          compat_signature(pm, pm.num_vars()));
    CHECK(rm.relations().size() == pm.relations().size());
    CHECK(primitive_relations(rm).size() == primitive_relations(pm).size());
    CHECK(enumerate_clusters(rm).size() == enumerate_clusters(pm).size());
  }
}

TEST_CASE("exchange matrix rank is a cluster invariant") {
  for (const auto& [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::G, 2}}) {
    const auto m = root(f, n);
    const auto clusters = enumerate_clusters(m);
    std::set<size_t> ranks;
    for (size_t k = 0; k < clusters.size(); k += 3)
      ranks.insert(rank_of(extended_exchange_matrix(m, clusters[k])));
    CHECK(ranks.size() == 1);
  }
}

}  // TEST_SUITE
