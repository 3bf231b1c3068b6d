#include "gcone/linalg.hpp"

#include <algorithm>

namespace gcone {

size_t rref(QMat& m, std::vector<int>& pivots) {
  pivots.clear();
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  for (const QVec& r : m) check(r.size() == cols, "rref: ragged matrix");
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Q inv = Q(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return r;
}

size_t rank_of(const IMat& m) {
  if (m.empty()) return 0;
  IMat a = m;
  const size_t rows = a.size(), cols = a[0].size();
  for (const IVec& row : a) check(row.size() == cols, "rank_of: ragged matrix");
  Z prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        Z num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        Z q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        check(rem == 0, "rank_of: Bareiss exact division failed");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

size_t rank_of(const QMat& m) {
  QMat a = m;
  std::vector<int> piv;
  return rref(a, piv);
}

IMat kernel_basis(const QMat& a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  QMat m = a;
  std::vector<int> pivots;
  rref(m, pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  IMat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Q(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

IMat kernel_basis(const IMat& a) { return kernel_basis(to_q(a)); }

IMat canonical_subspace_basis(const QMat& rows) {
  if (rows.empty()) return {};
  QMat m = rows;
  std::vector<int> pivots;
  const size_t r = rref(m, pivots);
  IMat basis;
  basis.reserve(r);
  for (size_t i = 0; i < r; ++i) basis.push_back(primitive(m[i]));
  return basis;
}

IMat canonical_subspace_basis(const IMat& rows) {
  return canonical_subspace_basis(to_q(rows));
}

bool spans_equal(const IMat& a, const IMat& b) {
  const size_t ra = rank_of(a), rb = rank_of(b);
  if (ra != rb) return false;
  if (ra == 0) return true;
  return rank_of(stack_rows(a, b)) == ra;
}

QVec reduce_mod_subspace(const IMat& basis, const QVec& x) {
  QVec v = x;
  for (const IVec& row : basis) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    check(p < row.size(), "reduce_mod_subspace: zero basis row");
    if (v[p] == 0) continue;
    const Q f = v[p] / Q(row[p]);
    for (size_t j = p; j < v.size(); ++j) v[j] -= f * Q(row[j]);
  }
  return v;
}

IVec canonical_mod_subspace(const IMat& basis, const IVec& x) {
  return primitive(reduce_mod_subspace(basis, to_q(x)));
}

bool in_span(const IMat& basis, const IVec& x) {
  if (is_zero(x)) return true;
  IMat stacked = basis;
  stacked.push_back(x);
  return rank_of(stacked) == rank_of(basis);
}

std::optional<QVec> solve_unique(const QMat& a, const QVec& b) {
  check(!a.empty(), "solve_unique: empty system");
  const size_t rows = a.size(), cols = a[0].size();
  check(b.size() == rows, "solve_unique: rhs dimension mismatch");
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots;
  rref(aug, pivots);
  size_t matrix_pivots = 0;
  bool inconsistent = false;
  for (int p : pivots) {
    if (static_cast<size_t>(p) == cols)
      inconsistent = true;
    else
      ++matrix_pivots;
  }
  check(matrix_pivots == cols, "solve_unique: matrix is not full column rank");
  if (inconsistent) return std::nullopt;
  QVec x(cols);
  for (size_t i = 0; i < cols; ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

namespace {

/// Exhaustive box search used only for rank-deficient systems: depth-first
/// over assignments of x, checking A x = b at the leaves. Sizes stay tiny in
/// practice (cross-check oracles), so clarity beats cleverness here.
void enumerate_box(const IMat& a, const IVec& b, long bound, size_t col,
                   IVec& x, IVec& partial, std::vector<IVec>& found) {
  if (found.size() >= 2) return;
  const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  if (col == cols) {
    for (size_t i = 0; i < rows; ++i)
      if (partial[i] != b[i]) return;
    found.push_back(x);
    return;
  }
  for (long v = 0; v <= bound; ++v) {
    x[col] = v;
    if (v > 0)
      for (size_t i = 0; i < rows; ++i) partial[i] += a[i][col];
    enumerate_box(a, b, bound, col + 1, x, partial, found);
    if (found.size() >= 2) break;
  }
  for (size_t i = 0; i < rows; ++i) partial[i] -= x[col] * a[i][col];
  x[col] = 0;
}

}  // namespace

NonnegIntSolution solve_nonneg_int(const IMat& a, const IVec& b,
                                   long fallback_bound) {
  check(!a.empty(), "solve_nonneg_int: empty system");
  const size_t cols = a[0].size();
  if (rank_of(a) == cols) {
    auto x = solve_unique(to_q(a), to_q(b));
    if (!x) return {SolveStatus::NoSolution, {}};
    IVec xi(cols);
    for (size_t j = 0; j < cols; ++j) {
      if ((*x)[j].get_den() != 1 || (*x)[j] < 0)
        return {SolveStatus::NoSolution, {}};
      xi[j] = (*x)[j].get_num();
    }
    return {SolveStatus::Found, xi};
  }
  IVec x(cols, Z(0)), partial(a.size(), Z(0));
  std::vector<IVec> found;
  enumerate_box(a, b, fallback_bound, 0, x, partial, found);
  if (found.empty()) return {SolveStatus::NoSolution, {}};
  if (found.size() > 1) return {SolveStatus::Ambiguous, {}};
  return {SolveStatus::Found, found[0]};
}

IMat transpose(const IMat& m) {
  if (m.empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  IMat t(cols, IVec(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

IVec mat_vec(const IMat& a, const IVec& x) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

IMat stack_rows(const IMat& a, const IMat& b) {
  if (!a.empty() && !b.empty())
    check(a[0].size() == b[0].size(), "stack_rows: dimension mismatch");
  IMat out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace gcone
