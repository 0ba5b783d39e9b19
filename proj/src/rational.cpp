#include "qhi/rational.hpp"

namespace qhi {

namespace {

// Row-reduces a to reduced echelon form in place; returns pivot columns.
std::vector<int> row_reduce(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == Rat(0)) ++piv;
    if (piv == m) continue;
    std::swap(a[row], a[piv]);
    const Rat inv = Rat(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == Rat(0)) continue;
      const Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

bool solve_linear(RatMat a, RatVec b, RatVec& x) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) a[i].push_back(b[i]);
  RatMat aug = std::move(a);
  std::vector<int> pivots = row_reduce(aug);
  // Inconsistent if a pivot lands in the augmented column.
  for (int p : pivots)
    if (p == static_cast<int>(n)) return false;
  x = zero_vec(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return true;
}

RatMat kernel_basis(RatMat a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  std::vector<int> pivots = row_reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec v = zero_vec(n);
    v[free_col] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(RatMat a) { return static_cast<int>(row_reduce(a).size()); }

RatMat inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rat(0));
    aug[i][n + i] = Rat(1);
  }
  std::vector<int> pivots = row_reduce(aug);
  if (pivots.size() != n || pivots.back() != static_cast<int>(n - 1))
    throw std::invalid_argument("inverse: matrix is singular");
  RatMat inv(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace qhi
