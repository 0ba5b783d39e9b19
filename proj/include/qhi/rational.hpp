#pragma once

// Exact rational linear algebra.  All combinatorial modules (root systems,
// alcove faces, lattices) work over Q; floating point never enters here.

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhi {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline RatVec scale(const Rat& s, const RatVec& a) {
  RatVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

inline RatVec negate(const RatVec& a) { return scale(Rat(-1), a); }

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != Rat(0)) return false;
  return true;
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline bool is_integer_vec(const RatVec& a) {
  for (const auto& x : a)
    if (!is_integer(x)) return false;
  return true;
}

// Solves A x = b by Gauss-Jordan elimination.  A is m x n given as rows.
// Returns true and writes a particular solution into x if the system is
// consistent; x has size n.  Free variables are set to zero.
bool solve_linear(RatMat a, RatVec b, RatVec& x);

// Rational kernel basis of the m x n matrix A (rows).  Each basis vector has
// size n.
RatMat kernel_basis(RatMat a);

// Rank of a rational matrix.
int rank(RatMat a);

// Inverse of a square rational matrix; throws std::invalid_argument if
// singular.
RatMat inverse(const RatMat& a);

// Matrix-vector product (rows of a times v).
inline RatVec mat_vec(const RatMat& a, const RatVec& v) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

}  // namespace qhi
