#include "gcone/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "gcone/linalg.hpp"

namespace gcone {

IMat cartan_matrix(Family f, int rank) {
  const int n = rank;
  auto chain = [&](int size) {
    IMat a(size, zero_ivec(static_cast<size_t>(size)));
    for (int i = 0; i < size; ++i) {
      a[i][i] = 2;
      if (i + 1 < size) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
      }
    }
    return a;
  };
  switch (f) {
    case Family::A:
      check(n >= 1, "family A needs rank >= 1");
      return chain(n);
    case Family::B: {
      check(n >= 2, "family B needs rank >= 2");
      IMat a = chain(n);
      a[n - 1][n - 2] = -2;  // short root α_n
      return a;
    }
    case Family::C: {
      check(n >= 2, "family C needs rank >= 2");
      IMat a = chain(n);
      a[n - 2][n - 1] = -2;  // long root α_n
      return a;
    }
    case Family::D: {
      check(n >= 3, "family D needs rank >= 3");
      IMat a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(zero_ivec(static_cast<size_t>(n)));
      a[n - 1][n - 1] = 2;
      // Both tail nodes n-1, n hang off node n-2; n-1 and n not adjacent.
      a[n - 2][n - 3] = a[n - 3][n - 2] = -1;
      a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
      a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
      return a;
    }
    case Family::E: {
      check(n >= 6 && n <= 8, "family E exists for ranks 6, 7, 8");
      IMat a(n, zero_ivec(static_cast<size_t>(n)));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto bond = [&](int i, int j) {  // 1-based node labels
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
      };
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(5, 6);
      if (n >= 7) bond(6, 7);
      if (n >= 8) bond(7, 8);
      bond(2, 4);
      return a;
    }
    case Family::F: {
      check(n == 4, "family F exists for rank 4");
      IMat a = chain(4);
      a[2][1] = -2;  // short root α_3 against long α_2
      return a;
    }
    case Family::G: {
      check(n == 2, "family G exists for rank 2");
      return {{Z(2), Z(-1)}, {Z(-3), Z(2)}};
    }
  }
  check(false, "unknown family");
  return {};
}

bool is_finite_type_cartan(const IMat& a) {
  const size_t n = a.size();
  for (const IVec& row : a)
    if (row.size() != n) return false;
  for (size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) return false;
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  // Positive symmetrizer d: propagate ratios along the (assumed connected
  // components of the) Dynkin graph, then verify d_i a_ij = d_j a_ji.
  std::vector<Q> d(n, Q(0));
  for (size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<size_t> queue = {start};
    while (!queue.empty()) {
      const size_t i = queue.back();
      queue.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Q(a[i][j]) / Q(a[j][i]);
        if (d[j] <= 0) return false;
        queue.push_back(j);
      }
    }
  }
  QMat sym(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) sym[i][j] = d[i] * Q(a[i][j]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (sym[i][j] != sym[j][i]) return false;
  // Sylvester: all leading principal minors positive.
  for (size_t k = 1; k <= n; ++k) {
    QMat lead(k, QVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) lead[i][j] = sym[i][j];
    // Exact determinant by fraction-free elimination on rationals.
    Q det = 1;
    for (size_t col = 0; col < k; ++col) {
      size_t pivot = col;
      while (pivot < k && lead[pivot][col] == 0) ++pivot;
      if (pivot == k) return false;  // singular leading minor
      if (pivot != col) {
        std::swap(lead[pivot], lead[col]);
        det = -det;
      }
      det *= lead[col][col];
      for (size_t r = col + 1; r < k; ++r) {
        const Q factor = lead[r][col] / lead[col][col];
        for (size_t cc = col; cc < k; ++cc)
          lead[r][cc] -= factor * lead[col][cc];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

IMat coxeter_b_matrix(const IMat& cartan) {
  const size_t n = cartan.size();
  IMat b(n, zero_ivec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i < j) b[i][j] = -cartan[i][j];
      if (i > j) b[i][j] = cartan[i][j];
    }
  return b;
}

IMat matrix_mutation(const IMat& b, int k) {
  const size_t n = b.size();
  check(k >= 0 && static_cast<size_t>(k) < n, "mutation index out of range");
  const size_t ku = static_cast<size_t>(k);
  IMat out(n, zero_ivec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == ku || j == ku) {
        out[i][j] = -b[i][j];
      } else {
        Z extra = 0;
        if (b[i][ku] > 0 && b[ku][j] > 0) extra = b[i][ku] * b[ku][j];
        if (b[i][ku] < 0 && b[ku][j] < 0) extra = -b[i][ku] * b[ku][j];
        out[i][j] = b[i][j] + extra;
      }
    }
  return out;
}

IVec RootModel::reflect(const IVec& w, int i) const {
  const size_t iu = static_cast<size_t>(i);
  IVec out = w;
  const Z coeff = w[iu];
  if (coeff == 0) return out;
  for (size_t k = 0; k < out.size(); ++k)
    out[k] -= coeff * cartan_[k][iu];  // α_i has coordinates column i
  return out;
}

IVec RootModel::apply_c(const IVec& w) const {
  IVec out = w;
  for (int i = static_cast<int>(rank()) - 1; i >= 0; --i)
    out = reflect(out, i);
  return out;
}

IVec RootModel::apply_c_inv(const IVec& w) const {
  IVec out = w;
  for (size_t i = 0; i < rank(); ++i) out = reflect(out, static_cast<int>(i));
  return out;
}

int RootModel::fundamental_index(const IVec& w) const {
  int idx = -1;
  for (size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    if (w[k] != 1 || idx >= 0) return -1;
    idx = static_cast<int>(k);
  }
  return idx;
}

bool RootModel::is_negative_fundamental(const IVec& w) const {
  return fundamental_index(neg(w)) >= 0;
}

IVec RootModel::tau_weight(const IVec& w) const {
  if (is_negative_fundamental(w)) return neg(w);
  return apply_c(w);
}

RootModel RootModel::build(const ModelSpec& spec) {
  check(spec.frozen_mode == FrozenMode::None,
        "the weight model carries no frozen variables");
  RootModel m;
  m.spec_ = spec;
  m.cartan_ = cartan_matrix(spec.family, spec.rank);
  check(is_finite_type_cartan(m.cartan_), "Cartan matrix is not finite type");
  const size_t n = m.rank();

  {
    QMat a(n, QVec(n));
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) a[r][c] = Q(m.cartan_[r][c]);
    m.cartan_inv_.assign(n, QVec(n));
    for (size_t col = 0; col < n; ++col) {
      QVec e(n, Q(0));
      e[col] = 1;
      const auto x = solve_unique(a, e);
      check(x.has_value(), "Cartan matrix must be invertible");
      for (size_t r = 0; r < n; ++r) m.cartan_inv_[r][col] = (*x)[r];
    }
  }

  // Orbits of the fundamental weights under c, each ending at a negative
  // fundamental weight.
  for (size_t i = 0; i < n; ++i) {
    IVec lambda = zero_ivec(n);
    lambda[i] = 1;
    while (true) {
      check(m.windex_.find(lambda) == m.windex_.end(),
            "weight orbits are not disjoint");
      m.windex_[lambda] = static_cast<int>(m.pi_.size());
      m.pi_.push_back(lambda);
      if (m.is_negative_fundamental(lambda)) break;
      lambda = m.apply_c(lambda);
      check(m.pi_.size() <= 10000, "weight orbit failed to terminate");
    }
  }

  const size_t total = m.pi_.size();
  m.tau_fwd_.resize(total);
  m.tau_bwd_.resize(total);
  for (size_t v = 0; v < total; ++v) {
    const int img = m.index_of_weight(m.tau_weight(m.pi_[v]));
    check(img >= 0, "τ image left the variable set");
    m.tau_fwd_[v] = img;
    m.tau_bwd_[static_cast<size_t>(img)] = static_cast<int>(v);
  }
  // Period of τ = lcm of its cycle lengths.
  {
    std::vector<bool> seen(total, false);
    long period = 1;
    for (size_t v = 0; v < total; ++v) {
      if (seen[v]) continue;
      long len = 0;
      size_t cur = v;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = static_cast<size_t>(m.tau_fwd_[cur]);
        ++len;
      }
      period = std::lcm(period, len);
    }
    m.tau_period_ = static_cast<int>(period);
  }

  m.compat_.assign(total, std::vector<int>(total, 0));
  for (size_t i = 0; i < total; ++i)
    for (size_t j = 0; j < total; ++j)
      if (i != j)
        m.compat_[i][j] =
            m.compat_pair(static_cast<int>(i), static_cast<int>(j));
  return m;
}

int RootModel::index_of_weight(const IVec& w) const {
  const auto it = windex_.find(w);
  return it == windex_.end() ? -1 : it->second;
}

int RootModel::compat_pair(int i, int j) const {
  IVec lambda = pi_[static_cast<size_t>(i)];
  IVec mu = pi_[static_cast<size_t>(j)];
  int guard = tau_period_ + 2;
  while (fundamental_index(lambda) < 0) {
    lambda = tau_weight(lambda);
    mu = tau_weight(mu);
    check(--guard > 0, "τ-advance failed to reach a fundamental weight");
  }
  const int fund = fundamental_index(lambda);
  // x = A⁻¹(c⁻¹μ - μ); the degree is the positive part of x_fund.
  const IVec target = sub(apply_c_inv(mu), mu);
  Q xi = 0;
  const QVec& row = cartan_inv_[static_cast<size_t>(fund)];
  for (size_t c = 0; c < rank(); ++c) xi += row[c] * Q(target[c]);
  check(xi.get_den() == 1, "compatibility degree must be an integer");
  if (xi <= 0) return 0;
  check(xi.get_num().fits_sint_p(), "compatibility degree overflow");
  return static_cast<int>(xi.get_num().get_si());
}

int RootModel::compat(int i, int j) const { return compat_.at(i).at(j); }

IVec RootModel::decompose(const IVec& target,
                          const std::vector<int>& basis) const {
  const size_t n = rank();
  check(basis.size() == n, "decomposition basis must have full rank size");
  QMat a(n, QVec(n));
  QVec rhs(n);
  for (size_t r = 0; r < n; ++r) {
    rhs[r] = Q(target[r]);
    for (size_t c = 0; c < n; ++c)
      a[r][c] = Q(pi_[static_cast<size_t>(basis[c])][r]);
  }
  const auto x = solve_unique(a, rhs);
  check(x.has_value(), "weight decomposition failed");
  IVec out(n);
  for (size_t c = 0; c < n; ++c) {
    check((*x)[c].get_den() == 1, "weight decomposition not integral");
    check((*x)[c] >= 0, "weight decomposition not nonnegative");
    out[c] = (*x)[c].get_num();
  }
  return out;
}

std::vector<int> RootModel::common_clique(int i, int j) const {
  std::vector<int> clique;
  const int total = static_cast<int>(pi_.size());
  for (int v = 0; v < total; ++v) {
    if (v == i || v == j) continue;
    if (compat(v, i) != 0 || compat(i, v) != 0) continue;
    if (compat(v, j) != 0 || compat(j, v) != 0) continue;
    bool fits = true;
    for (int u : clique)
      if (compat(u, v) != 0 || compat(v, u) != 0) {
        fits = false;
        break;
      }
    if (fits) clique.push_back(v);
  }
  check(clique.size() == rank() - 1,
        "common compatible clique has unexpected size");
  return clique;
}

Relation RootModel::make_relation(int i, int j) const {
  Relation rel;
  rel.x1 = i;
  rel.x2 = j;
  rel.quad_type = -1;

  std::vector<int> basis = common_clique(i, j);
  basis.push_back(i);

  const size_t total = pi_.size();
  auto scatter = [&](const IVec& coeffs) {
    IVec term = zero_ivec(total);
    for (size_t t = 0; t < basis.size(); ++t)
      term[static_cast<size_t>(basis[t])] += coeffs[t];
    return term;
  };

  const IVec first =
      decompose(add(pi_[static_cast<size_t>(i)], pi_[static_cast<size_t>(j)]),
                basis);
  check(first.back() == 0, "first monomial must avoid the exchanged pair");
  rel.term1 = scatter(first);

  // Transport the exchange along τ until the second monomial shows up.
  std::vector<int> moved = basis;
  int mi = i, mj = j;
  bool found = false;
  for (int step = 1; step <= tau_period_ && !found; ++step) {
    for (int& v : moved) v = tau_fwd_[static_cast<size_t>(v)];
    mi = tau_fwd_[static_cast<size_t>(mi)];
    mj = tau_fwd_[static_cast<size_t>(mj)];
    const IVec coeffs = decompose(
        add(pi_[static_cast<size_t>(mi)], pi_[static_cast<size_t>(mj)]),
        moved);
    if (coeffs == first) continue;
    check(coeffs.back() == 0, "second monomial must avoid the exchanged pair");
    rel.term2 = scatter(coeffs);
    found = true;
  }
  if (!found) {
    // Only the rank-one exchange never changes value: both monomials empty.
    check(rank() == 1 && is_zero(rel.term1),
          "exchange transport found a single monomial");
    rel.term2 = rel.term1;
  }

  rel.term1_primitive = is_zero(rel.term2);
  rel.term2_primitive = is_zero(rel.term1);
  const bool tau_neighbours = j == tau(i) || j == tau_inv(i);
  check(tau_neighbours == rel.primitive(),
        "primitive exchanges are exactly the τ-neighbour pairs");
  return rel;
}

const std::vector<Relation>& RootModel::relations() const {
  if (!rels_.has_value()) {
    std::vector<Relation> out;
    const int total = static_cast<int>(pi_.size());
    for (int i = 0; i < total; ++i)
      for (int j = i + 1; j < total; ++j)
        if (exchangeable(i, j)) out.push_back(make_relation(i, j));
    rels_ = std::move(out);
  }
  return *rels_;
}

std::vector<IVec> RootModel::exchange_scan_values(int i, int j) const {
  check(exchangeable(i, j), "pair is not exchangeable");
  std::vector<int> basis = common_clique(i, j);
  basis.push_back(i);
  std::vector<IVec> values;
  std::vector<int> moved = basis;
  int mi = i, mj = j;
  for (int step = 0; step < tau_period_; ++step) {
    if (step > 0) {
      for (int& v : moved) v = tau_fwd_[static_cast<size_t>(v)];
      mi = tau_fwd_[static_cast<size_t>(mi)];
      mj = tau_fwd_[static_cast<size_t>(mj)];
    }
    const IVec coeffs = decompose(
        add(pi_[static_cast<size_t>(mi)], pi_[static_cast<size_t>(mj)]),
        moved);
    if (std::find(values.begin(), values.end(), coeffs) == values.end())
      values.push_back(coeffs);
  }
  return values;
}

std::string RootModel::var_name(int v) const {
  const IVec& w = pi_.at(static_cast<size_t>(v));
  std::string s = "(";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += w[k].get_str();
  }
  return s + ")";
}

}  // namespace gcone
