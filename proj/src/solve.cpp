#include "ptv/detail/solve.hpp"

namespace ptv::detail {

std::optional<RatVec> solve_full_column_rank(const ExactMatrix& a,
                                             const RatVec& b) {
  const std::size_t m = a.rows(), k = a.cols();
  if (b.size() != m) throw size_error("rhs size mismatch");
  // Augmented elimination.
  ExactMatrix aug(m, k + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= k; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, k + 1) = b[i - 1];
  }
  std::size_t row = 1;
  std::vector<std::size_t> pivot_row(k + 1, 0);
  for (std::size_t col = 1; col <= k && row <= m; ++col) {
    std::size_t piv = row;
    while (piv <= m && aug.at(piv, col) == 0) ++piv;
    if (piv > m) continue;
    if (piv != row)
      for (std::size_t j = col; j <= k + 1; ++j)
        std::swap(aug.at(row, j), aug.at(piv, j));
    const Rat d = aug.at(row, col);
    for (std::size_t j = col; j <= k + 1; ++j) aug.at(row, j) /= d;
    for (std::size_t i = 1; i <= m; ++i) {
      if (i == row || aug.at(i, col) == 0) continue;
      const Rat f = aug.at(i, col);
      for (std::size_t j = col; j <= k + 1; ++j)
        aug.at(i, j) -= f * aug.at(row, j);
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t col = 1; col <= k; ++col)
    if (pivot_row[col] == 0) throw singular_error("dependent columns");
  // Consistency: remaining rows must have zero rhs.
  for (std::size_t i = row; i <= m; ++i)
    if (aug.at(i, k + 1) != 0) return std::nullopt;
  RatVec c(k);
  for (std::size_t col = 1; col <= k; ++col)
    c[col - 1] = aug.at(pivot_row[col], k + 1);
  return c;
}

std::size_t rank(const ExactMatrix& a) {
  ExactMatrix m(a);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 1, rk = 0;
  for (std::size_t col = 1; col <= cols && r <= rows; ++col) {
    std::size_t piv = r;
    while (piv <= rows && m.at(piv, col) == 0) ++piv;
    if (piv > rows) continue;
    if (piv != r)
      for (std::size_t j = col; j <= cols; ++j)
        std::swap(m.at(r, j), m.at(piv, j));
    for (std::size_t i = r + 1; i <= rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rat f = m.at(i, col) / m.at(r, col);
      for (std::size_t j = col; j <= cols; ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
    ++rk;
  }
  return rk;
}

}  // namespace ptv::detail
