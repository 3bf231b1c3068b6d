/**
 * @file exact.hpp
 * @brief Exact arithmetic building blocks: arbitrary-precision integers and
 *        rationals plus the small vector helpers used across the library.
 *
 * Rationals are GMP-backed (mpq_class): always stored reduced with a positive
 * denominator, and every operation is exact — no floating point anywhere.
 * Integer vectors (mpz entries) are the common currency for rays, degree
 * vectors and weights; rational vectors appear inside eliminations, solves
 * and intermediate reductions.
 */
#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcone {

using Z = mpz_class;
using Q = mpq_class;
using IVec = std::vector<Z>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

/// Always-on invariant check; throws instead of aborting so callers (CLI,
/// tests) can surface the message.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("invariant violated: ") + msg);
}

/// Rational from numerator/denominator, canonicalized (reduced, den > 0).
inline Q q_of(const Z& num, const Z& den) {
  check(den != 0, "rational with zero denominator");
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline QVec to_q(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Q(v[i]);
  return r;
}

inline QMat to_q(const IMat& m) {
  QMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = to_q(m[i]);
  return r;
}

inline Z dot(const IVec& a, const IVec& b) {
  check(a.size() == b.size(), "dot: dimension mismatch");
  Z s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Q dot(const QVec& a, const QVec& b) {
  check(a.size() == b.size(), "dot: dimension mismatch");
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec add(const IVec& a, const IVec& b) {
  check(a.size() == b.size(), "add: dimension mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
  check(a.size() == b.size(), "sub: dimension mismatch");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline QVec add(const QVec& a, const QVec& b) {
  check(a.size() == b.size(), "add: dimension mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec scaled(const QVec& a, const Q& c) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline bool is_zero(const IVec& v) {
  for (const Z& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const QVec& v) {
  for (const Q& x : v)
    if (x != 0) return false;
  return true;
}

inline IVec zero_ivec(size_t n) { return IVec(n, Z(0)); }

/// Unit vector e_i in dimension n.
inline IVec unit_ivec(size_t n, size_t i) {
  IVec v(n, Z(0));
  check(i < n, "unit_ivec: index out of range");
  v[i] = 1;
  return v;
}

/// Smallest positive integer rescaling of a rational vector (direction
/// preserved). Zero maps to zero.
inline IVec primitive(const QVec& v) {
  Z den_lcm = 1;
  for (const Q& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  IVec w(v.size());
  Z num_gcd = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Q s = v[i] * Q(den_lcm);
    check(s.get_den() == 1, "primitive: clearing denominators failed");
    w[i] = s.get_num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), w[i].get_mpz_t());
  }
  if (num_gcd > 1)
    for (Z& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), num_gcd.get_mpz_t());
  return w;
}

inline IVec primitive(const IVec& v) { return primitive(to_q(v)); }

/// Flip sign so the first nonzero entry is positive (used for basis vectors
/// of linear subspaces, where both directions describe the same object).
inline IVec sign_canonical(IVec v) {
  for (const Z& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Z& y : v) y = -y;
    break;
  }
  return v;
}

inline std::string show(const Z& x) { return x.get_str(); }

inline std::string show(const Q& x) { return x.get_str(); }

inline std::string show(const IVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

inline std::string show(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

inline std::string show_rows(const IMat& m) {
  std::ostringstream os;
  for (const IVec& r : m) os << "  " << show(r) << '\n';
  return os.str();
}

}  // namespace gcone
