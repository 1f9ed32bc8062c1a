#include "divfree/linalg.hpp"

#include <stdexcept>

namespace divfree {

namespace {

// In-place reduction to row echelon form; returns pivot columns.
std::vector<int> echelon(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] == 0) continue;
      if (sel < 0 || bit_size(m[r][col]) < bit_size(m[sel][col])) sel = r;
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] /= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(echelon(m).size()); }

Matrix nullspace(const Matrix& m) {
  if (m.empty()) return {};
  Matrix e = m;
  std::vector<int> pivots = echelon(e);
  const int cols = static_cast<int>(m[0].size());
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Matrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(m[r].size()) != n) throw std::invalid_argument("not square");
    for (int c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("singular matrix");
  Matrix inv(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

std::optional<std::vector<Rational>> solve_row(const Matrix& m,
                                               const std::vector<Rational>& v) {
  // x * m = v  <=>  m^T x^T = v^T; eliminate on the transposed augmented system.
  const int rows = static_cast<int>(m.size());
  if (rows == 0) {
    for (const auto& e : v)
      if (e != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const int cols = static_cast<int>(m[0].size());
  Matrix aug(cols, std::vector<Rational>(rows + 1, Rational(0)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) aug[c][r] = m[r][c];
  for (int c = 0; c < cols; ++c) aug[c][rows] = v[c];
  std::vector<int> pivots = echelon(aug);
  std::vector<Rational> x(rows, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == rows) return std::nullopt;  // inconsistent
    x[pivots[r]] = aug[r][rows];
  }
  // Verify (guards against underdetermined systems).
  for (int c = 0; c < cols; ++c) {
    Rational acc(0);
    for (int r = 0; r < rows; ++r) acc += x[r] * m[r][c];
    if (acc != v[c]) return std::nullopt;
  }
  return x;
}

}  // namespace divfree
