#include "linalg.hpp"

#include <utility>

namespace intertwine::detail {

RationalMatrix to_rational(const std::vector<std::vector<int>>& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].assign(m[i].begin(), m[i].end());
  }
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].numerator() == 0) continue;
      const Rational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<std::vector<Rational>> express_in_basis(const std::vector<std::vector<Rational>>& basis,
                                                      const std::vector<Rational>& target) {
  // Solve the (dim x k) system with augmented column, then verify.
  const std::size_t k = basis.size();
  const std::size_t dim = target.size();
  RationalMatrix a(dim, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < dim; ++c) {
    std::size_t pivot = r;
    while (pivot < dim && a[pivot][c].numerator() == 0) ++pivot;
    if (pivot == dim) continue;
    std::swap(a[pivot], a[r]);
    const Rational p = a[r][c];
    for (auto& x : a[r]) x /= p;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == r || a[i][c].numerator() == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < dim; ++i) {
    if (a[i][k].numerator() != 0) return std::nullopt;
  }
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][k];
  return x;
}

}  // namespace intertwine::detail
