/**
 * @file model.hpp
 * @brief Shared cluster-model vocabulary: families, frozen-variable modes,
 *        exchange relations as exponent vectors, and the small interface
 *        the degree/cone layer consumes.
 */
#pragma once

#include <string>
#include <vector>

#include "gcone/exact.hpp"

namespace gcone {

enum class Family { A, B, C, D, E, F, G };

/// Special: frozen variables carry boundary data (polygon edges).
/// None: trivial coefficients — frozen exponents are dropped everywhere.
enum class FrozenMode { Special, None };

struct ModelSpec {
  Family family = Family::A;
  int rank = 1;
  FrozenMode frozen_mode = FrozenMode::Special;
};

char family_letter(Family f);
Family family_from_letter(char c);
std::string to_string(const ModelSpec& spec);

/// One exchange relation x_{x1} · x_{x2} = term1 + term2, with the terms as
/// exponent vectors over the model's variable table. A term is flagged
/// primitive when the *other* term is supported entirely on frozen
/// variables; the degree layer subtracts primitive terms from deg(x·x').
struct Relation {
  int x1 = -1, x2 = -1;
  IVec term1, term2;
  int quad_type = -1;  // 0..4 for polygon models, -1 for the weight model
  bool term1_primitive = false;
  bool term2_primitive = false;

  bool primitive() const { return term1_primitive || term2_primitive; }
};

/// Common surface of the polygon and weight models: a variable table
/// (cluster variables first, then any frozen ones), pairwise compatibility
/// degrees, exchange relations, and the distinguished rotation.
class ClusterModel {
 public:
  virtual ~ClusterModel() = default;

  virtual size_t num_vars() const = 0;     // length of exponent vectors
  virtual size_t num_cluster() const = 0;  // cluster prefix of the table
  virtual size_t rank() const = 0;
  virtual const ModelSpec& spec() const = 0;
  virtual int compat(int i, int j) const = 0;
  virtual const std::vector<Relation>& relations() const = 0;
  virtual int rotate(int v) const = 0;
  virtual std::string var_name(int v) const = 0;

  bool exchangeable(int i, int j) const {
    return i != j && compat(i, j) == 1 && compat(j, i) == 1;
  }
};

std::vector<Relation> primitive_relations(const ClusterModel& m);

/// All clusters: maximal sets of pairwise-compatible cluster variables,
/// found by maximal-clique enumeration over the compatibility-zero graph.
/// Every cluster must have exactly rank() members (checked). Deterministic
/// output: each cluster sorted, clusters in lexicographic order.
std::vector<std::vector<int>> enumerate_clusters(const ClusterModel& m);

/// Extended exchange matrix read off a single cluster: column k is the
/// difference of the two term exponent vectors of the in-cluster exchange
/// relation at the k-th cluster member. Rows run over the full variable
/// table. Column signs are presentation-dependent; ranks are not.
IMat extended_exchange_matrix(const ClusterModel& m,
                              const std::vector<int>& cluster);

}  // namespace gcone
