#include "qhi/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qhi {

namespace {

IntMat identity(std::size_t n) {
  IntMat id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

void add_row(IntMat& m, std::size_t dst, std::size_t src, long long f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(IntMat& m, std::size_t dst, std::size_t src, long long f) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

void swap_col(IntMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  SmithForm out;
  out.left = identity(m);
  out.right = identity(n);
  std::size_t t = 0;
  while (t < m && t < n) {
    // Find the entry of smallest nonzero magnitude in the trailing block.
    std::size_t pi = t, pj = t;
    long long best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    std::swap(out.left[t], out.left[pi]);
    swap_col(a, t, pj);
    swap_col(out.right, t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      long long q = a[i][t] / a[t][t];
      if (q != 0) {
        add_row(a, i, t, -q);
        add_row(out.left, i, t, -q);
      }
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      long long q = a[t][j] / a[t][t];
      if (q != 0) {
        add_col(a, j, t, -q);
        add_col(out.right, j, t, -q);
      }
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; re-pivot on a smaller entry

    // Enforce the divisibility chain: fold any non-divisible entry into the
    // pivot position and redo this step.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < m && divides_all; ++i)
      for (std::size_t j = t + 1; j < n && divides_all; ++j)
        if (a[i][j] % a[t][t] != 0) {
          add_row(a, t, i, 1);
          add_row(out.left, t, i, 1);
          divides_all = false;
        }
    if (!divides_all) continue;
    ++t;
  }
  out.diagonal.assign(std::min(m, n), 0);
  for (std::size_t i = 0; i < out.diagonal.size(); ++i)
    out.diagonal[i] = std::llabs(a[i][i]);
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  SmithForm s = smith_normal_form(a);
  // A x = 0  <=>  D (V^-1 x) = 0; kernel is spanned by the columns of V at
  // indices where the diagonal vanishes (or beyond the diagonal).
  IntMat basis;
  for (std::size_t j = 0; j < n; ++j) {
    const bool zero_diag = j >= s.diagonal.size() || s.diagonal[j] == 0;
    if (!zero_diag) continue;
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = s.right[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

long long sublattice_index(const IntMat& gens) {
  if (gens.empty()) throw std::invalid_argument("sublattice_index: no generators");
  const std::size_t n = gens[0].size();
  SmithForm s = smith_normal_form(gens);
  long long idx = 1;
  std::size_t nonzero = 0;
  for (long long d : s.diagonal)
    if (d != 0) {
      idx *= d;
      ++nonzero;
    }
  if (nonzero != n)
    throw std::invalid_argument("sublattice_index: span does not have full rank");
  return idx;
}

bool solvable_over_z(const IntMat& a, const IntVec& b) {
  const std::size_t m = a.size();
  SmithForm s = smith_normal_form(a);
  IntVec ub(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ub[i] += s.left[i][j] * b[j];
  for (std::size_t i = 0; i < m; ++i) {
    const long long d = i < s.diagonal.size() ? s.diagonal[i] : 0;
    if (d == 0) {
      if (ub[i] != 0) return false;
    } else if (ub[i] % d != 0) {
      return false;
    }
  }
  return true;
}

IntMat clear_denominators(const RatMat& a) {
  IntMat out;
  out.reserve(a.size());
  for (const auto& row : a) {
    long long l = 1;
    for (const auto& x : row) l = std::lcm(l, x.denominator());
    IntVec r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Rat y = row[j] * l;
      r[j] = y.numerator();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qhi
