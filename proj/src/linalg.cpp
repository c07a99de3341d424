#include "ptv/linalg.hpp"

#include <algorithm>

namespace ptv {

namespace {

ExactMatrix submatrix(const ExactMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  ExactMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(i + 1, j + 1) = m.at(rows[i], cols[j]);
  return out;
}

void check_index_set(const std::vector<std::size_t>& v, std::size_t bound) {
  if (v.empty()) throw index_error("empty minor index set");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > bound) throw index_error("minor index out of range");
    if (i > 0 && v[i] <= v[i - 1])
      throw index_error("minor indices must be strictly increasing");
  }
}

}  // namespace

Rat minor_det(const ExactMatrix& m, const MinorIndex& idx) {
  if (idx.rows.size() != idx.cols.size())
    throw index_error("minor row/col sets differ in size");
  check_index_set(idx.rows, m.rows());
  check_index_set(idx.cols, m.cols());
  return submatrix(m, idx.rows, idx.cols).det();
}

ExactMatrix regular_nilpotent(std::size_t n) {
  ExactMatrix f(n, n);
  for (std::size_t i = 2; i <= n; ++i) f.at(i, i - 1) = 1;
  return f;
}

RatVec delta_vector(const ExactMatrix& m) {
  if (!m.is_square() || m.rows() < 2)
    throw size_error("delta_vector needs a square matrix of size >= 2");
  const std::size_t n = m.rows();
  RatVec out;
  out.reserve(n - 1);
  for (std::size_t i = 1; i <= n - 1; ++i) {
    std::vector<std::size_t> idx;
    for (std::size_t r = i + 1; r <= n; ++r) idx.push_back(r);
    out.push_back(submatrix(m, idx, idx).det());
  }
  return out;
}

RatVec lower_left_minors(const ExactMatrix& m) {
  if (!m.is_square() || m.rows() < 2)
    throw size_error("lower_left_minors needs a square matrix of size >= 2");
  const std::size_t n = m.rows();
  RatVec out;
  out.reserve(n - 1);
  for (std::size_t i = 1; i <= n - 1; ++i) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = i + 1; r <= n; ++r) rows.push_back(r);
    for (std::size_t c = 1; c <= n - i; ++c) cols.push_back(c);
    out.push_back(submatrix(m, rows, cols).det());
  }
  return out;
}

ExactMatrix ad_f(const ExactMatrix& m) {
  if (!m.is_square()) throw size_error("ad_f needs a square matrix");
  return m.inverse() * regular_nilpotent(m.rows()) * m;
}

RatVec q_vector(const ExactMatrix& m) {
  const ExactMatrix conj = ad_f(m);
  const std::size_t n = m.rows();
  RatVec out;
  out.reserve(n - 1);
  for (std::size_t i = 1; i <= n - 1; ++i) out.push_back(-conj.at(i, i + 1));
  return out;
}

bool is_totally_nonnegative(const ExactMatrix& m, std::size_t max_n,
                            bool force) {
  if (!m.is_square()) throw size_error("TNN test needs a square matrix");
  const std::size_t n = m.rows();
  if (n > max_n && !force)
    throw size_error("TNN minor enumeration refused for n > bound");
  // All C(n,k)^2 minors for every k. Index subsets via bitmasks.
  std::vector<std::vector<std::size_t>> subsets_by_size(n + 1);
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    // stored as masks, grouped by popcount
    subsets_by_size[static_cast<std::size_t>(__builtin_popcountl(mask))]
        .push_back(mask);
  }
  auto unpack = [n](unsigned long mask) {
    std::vector<std::size_t> v;
    for (std::size_t i = 1; i <= n; ++i)
      if (mask & (1ul << (i - 1))) v.push_back(i);
    return v;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    for (unsigned long rm : subsets_by_size[k]) {
      const auto rows = unpack(rm);
      for (unsigned long cm : subsets_by_size[k]) {
        const auto cols = unpack(cm);
        if (submatrix(m, rows, cols).det() < 0) return false;
      }
    }
  }
  return true;
}

bool is_unipotent_lower(const ExactMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    if (m.at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j <= m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  }
  return true;
}

bool is_unipotent_upper(const ExactMatrix& m) {
  return is_unipotent_lower(m.transpose());
}

}  // namespace ptv
