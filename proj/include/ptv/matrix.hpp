#ifndef PTV_MATRIX_HPP
#define PTV_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ptv/errors.hpp"
#include "ptv/rational.hpp"

namespace ptv {

/// Dense matrix over exact rationals, row-major, immutable in spirit:
/// all operations return new matrices. Indices in the public interface
/// are 1-based, matching the usual matrix conventions.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  // Rows given as an initializer list of initializer lists of rationals.
  ExactMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static ExactMatrix identity(std::size_t n);
  // Rows as strings, entries "p/q"; convenience for tests and JSON I/O.
  static ExactMatrix from_strings(
      const std::vector<std::vector<std::string>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rat& at(std::size_t i, std::size_t j) const;  // 1-based
  Rat& at(std::size_t i, std::size_t j);              // 1-based

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

  /// Exact determinant by fraction-free Bareiss elimination on a
  /// denominator-cleared integer matrix.
  Rat det() const;

  /// Exact inverse; throws singular_error when det = 0.
  ExactMatrix inverse() const;

  std::string to_string() const;  // human-readable, for diagnostics

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

}  // namespace ptv

#endif
