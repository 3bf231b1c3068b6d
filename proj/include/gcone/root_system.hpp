/**
 * @file root_system.hpp
 * @brief Weight-coordinate cluster model for all finite families.
 *
 * Fix the Cartan matrix A of the family and the Coxeter element
 * c = s_1 s_2 … s_n (applied rightmost first). Weights live in
 * fundamental-weight coordinates, where the simple root α_j is column j of
 * A and s_i(λ) = λ - λ_i · (column i). The variable set Π is the union of
 * the c-orbits {c^k ω_i : 0 ≤ k ≤ h(i)}, each orbit ending at a negative
 * fundamental weight -ω_{i*}. The permutation τ sends -ω_i to ω_i and any
 * other λ to cλ; compatibility degrees are read off after τ-advancing the
 * first argument to a fundamental weight, and exchange relations come from
 * unique nonnegative-integer decompositions over adjacent clusters,
 * transported along τ until the second monomial appears.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcone/model.hpp"

namespace gcone {

/// Cartan matrix in the convention a_ij = 2(α_i, α_j)/(α_i, α_i), so the
/// short-root rows of B_n, F_4, G_2 carry the entries -2 / -3.
IMat cartan_matrix(Family f, int rank);

/// True when the (generalised) Cartan matrix is of finite type: it must
/// admit a positive symmetrizer and the symmetrized form must be positive
/// definite (checked exactly via leading principal minors).
bool is_finite_type_cartan(const IMat& a);

/// Exchange matrix of the Coxeter element c = s_1 … s_n:
/// b_ij = -a_ij for i < j and +a_ij for i > j.
IMat coxeter_b_matrix(const IMat& cartan);

/// Standard matrix mutation in direction k (0-based).
IMat matrix_mutation(const IMat& b, int k);

class RootModel final : public ClusterModel {
 public:
  static RootModel build(const ModelSpec& spec);

  size_t num_vars() const override { return pi_.size(); }
  size_t num_cluster() const override { return pi_.size(); }
  size_t rank() const override { return static_cast<size_t>(spec_.rank); }
  int compat(int i, int j) const override;
  const std::vector<Relation>& relations() const override;  // built lazily
  int rotate(int v) const override { return tau_fwd_[v]; }
  std::string var_name(int v) const override;

  const ModelSpec& spec() const override { return spec_; }
  const IMat& cartan() const { return cartan_; }
  const IVec& weight(int v) const { return pi_.at(static_cast<size_t>(v)); }
  int index_of_weight(const IVec& w) const;
  int tau(int v) const { return tau_fwd_.at(static_cast<size_t>(v)); }
  int tau_inv(int v) const { return tau_bwd_.at(static_cast<size_t>(v)); }
  /// Order of τ as a permutation of Π.
  int tau_period() const { return tau_period_; }

  IVec apply_c(const IVec& w) const;
  IVec apply_c_inv(const IVec& w) const;
  /// τ on raw weight coordinates.
  IVec tau_weight(const IVec& w) const;

  /// All distinct coefficient vectors met while transporting the exchange
  /// of (i, j) around the full τ-period (diagnostic; the theory predicts
  /// exactly the two monomials of the exchange relation).
  std::vector<IVec> exchange_scan_values(int i, int j) const;

 private:
  RootModel() = default;
  IVec reflect(const IVec& w, int i) const;
  int fundamental_index(const IVec& w) const;  // -1 unless w = ω_i
  bool is_negative_fundamental(const IVec& w) const;
  int compat_pair(int i, int j) const;
  /// Nonnegative integral coordinates of `target` in the basis of the
  /// weights at `basis` (table indices). Throws if the decomposition is
  /// not unique, integral and nonnegative.
  IVec decompose(const IVec& target, const std::vector<int>& basis) const;
  std::vector<int> common_clique(int i, int j) const;
  Relation make_relation(int i, int j) const;

  ModelSpec spec_{};
  IMat cartan_;
  QMat cartan_inv_;
  std::vector<IVec> pi_;
  std::map<IVec, int> windex_;
  std::vector<int> tau_fwd_, tau_bwd_;
  int tau_period_ = 0;
  std::vector<std::vector<int>> compat_;
  mutable std::optional<std::vector<Relation>> rels_;
};

}  // namespace gcone
