#include "ptv/matrix.hpp"

#include <sstream>

namespace ptv {

ExactMatrix::ExactMatrix(
    std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw size_error("ragged initializer");
    for (const auto& v : row) data_.push_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_strings(
    const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw size_error("ragged rows");
    for (std::size_t j = 0; j < c; ++j)
      m.at(i + 1, j + 1) = rat_from_string(rows[i][j]);
  }
  return m;
}

const Rat& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw index_error("matrix index out of range");
  return data_[(i - 1) * cols_ + (j - 1)];
}

Rat& ExactMatrix::at(std::size_t i, std::size_t j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw index_error("matrix index out of range");
  return data_[(i - 1) * cols_ + (j - 1)];
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw size_error("dimension mismatch in product");
  ExactMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t k = 1; k <= cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 1; j <= rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

namespace {

// Fraction-free Bareiss determinant of an integer matrix. Destroys a.
mpz_class bareiss_det(std::vector<mpz_class>& a, std::size_t n) {
  auto e = [&](std::size_t i, std::size_t j) -> mpz_class& {
    return a[i * n + j];
  };
  mpz_class prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && e(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        e(i, j) = (e(k, k) * e(i, j) - e(i, k) * e(k, j)) / prev;
      }
      e(i, k) = 0;
    }
    prev = e(k, k);
  }
  return sign * e(n - 1, n - 1);
}

}  // namespace

Rat ExactMatrix::det() const {
  if (!is_square()) throw size_error("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Clear denominators row by row, track the scale.
  std::vector<mpz_class> a(n * n);
  mpz_class scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              data_[i * n + j].get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& q = data_[i * n + j];
      a[i * n + j] = q.get_num() * (lcm / q.get_den());
    }
    scale *= lcm;
  }
  mpz_class d = bareiss_det(a, n);
  Rat out(d, scale);
  out.canonicalize();
  return out;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw size_error("inverse of non-square matrix");
  const std::size_t n = rows_;
  // Gauss-Jordan over the rationals.
  ExactMatrix a(*this);
  ExactMatrix inv = identity(n);
  for (std::size_t col = 1; col <= n; ++col) {
    std::size_t piv = col;
    while (piv <= n && a.at(piv, col) == 0) ++piv;
    if (piv > n) throw singular_error("singular matrix");
    if (piv != col) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::swap(a.at(col, j), a.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    }
    const Rat d = a.at(col, col);
    for (std::size_t j = 1; j <= n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      const Rat f = a.at(i, col);
      for (std::size_t j = 1; j <= n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 1; i <= rows_; ++i) {
    os << (i == 1 ? "[" : " ");
    for (std::size_t j = 1; j <= cols_; ++j)
      os << rat_to_string(at(i, j)) << (j == cols_ ? "" : " ");
    os << (i == rows_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace ptv
