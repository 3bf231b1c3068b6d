/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the rationals: elimination, rank, kernel
 *        bases, canonical subspace bases, and small solvers.
 *
 * Everything here is deterministic: pivots are chosen by first-nonzero scans
 * in a fixed order, so canonical forms are unique for a given input span.
 */
#pragma once

#include <optional>
#include <vector>

#include "gcone/exact.hpp"

namespace gcone {

/// In-place Gauss–Jordan reduction to reduced row echelon form.
/// Pivot columns (in increasing order) are reported through `pivots`.
/// Returns the rank.
size_t rref(QMat& m, std::vector<int>& pivots);

/// Rank via fraction-free Bareiss elimination over the integers (fast path
/// used by the cone engine's adjacency tests).
size_t rank_of(const IMat& m);
size_t rank_of(const QMat& m);

/// Primitive integer basis of the right null space {x : A x = 0}.
/// Basis vectors correspond to the free columns of the RREF in increasing
/// order, so the result is canonical for a given A.
IMat kernel_basis(const QMat& a);
IMat kernel_basis(const IMat& a);

/// Canonical basis of the row span: RREF rows rescaled to primitive integer
/// vectors (leading entries positive). Unique per subspace; empty input or
/// all-zero rows give an empty basis. All rows must share one dimension.
IMat canonical_subspace_basis(const IMat& rows);
IMat canonical_subspace_basis(const QMat& rows);

/// True iff the row spans coincide (computed via ranks of stacked matrices).
bool spans_equal(const IMat& a, const IMat& b);

/// Subtract multiples of the canonical basis rows so that every pivot
/// coordinate of the result is zero. `basis` must come from
/// canonical_subspace_basis (first nonzero of each row is its pivot).
QVec reduce_mod_subspace(const IMat& basis, const QVec& x);

/// Primitive integer representative of x modulo the subspace: reduce, then
/// rescale. Canonical for rays modulo a lineality space.
IVec canonical_mod_subspace(const IMat& basis, const IVec& x);

/// Membership of x in the row span of `basis` (any spanning set).
bool in_span(const IMat& basis, const IVec& x);

/// Solve A x = b where A has full column rank (checked). Returns the unique
/// solution, or nullopt when the system is inconsistent.
std::optional<QVec> solve_unique(const QMat& a, const QVec& b);

enum class SolveStatus { Found, NoSolution, Ambiguous };

struct NonnegIntSolution {
  SolveStatus status = SolveStatus::NoSolution;
  IVec x;  // meaningful only when status == Found
};

/// Solve A x = b with x integral and x >= 0 componentwise.
/// Full-column-rank systems are decided exactly via the unique rational
/// solution. Rank-deficient systems fall back to enumerating the box
/// [0, fallback_bound]^cols and report Ambiguous when two solutions exist.
NonnegIntSolution solve_nonneg_int(const IMat& a, const IVec& b,
                                   long fallback_bound = 6);

IMat transpose(const IMat& m);

/// Row-by-row dot products (A has rows of x's dimension).
IVec mat_vec(const IMat& a, const IVec& x);

/// Stack the rows of both matrices (dimension-checked when both nonempty).
IMat stack_rows(const IMat& a, const IMat& b);

}  // namespace gcone
