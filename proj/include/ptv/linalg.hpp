#ifndef PTV_LINALG_HPP
#define PTV_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ptv/matrix.hpp"

namespace ptv {

/// Row/column index sets of a minor; 1-based, strictly increasing, equal size.
struct MinorIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Exact determinant of the selected submatrix.
Rat minor_det(const ExactMatrix& m, const MinorIndex& idx);

/// The regular nilpotent matrix with 1's on the first subdiagonal.
ExactMatrix regular_nilpotent(std::size_t n);

/// Delta_i(M) = lower-right (n-i)x(n-i) minor, i = 1..n-1.
RatVec delta_vector(const ExactMatrix& m);

/// i-th entry = lower-left (n-i)x(n-i) minor (rows i+1..n, cols 1..n-i).
/// Coincides with delta_vector(M * w0_rep(n)).
RatVec lower_left_minors(const ExactMatrix& m);

/// M^{-1} f M with f the regular nilpotent; throws singular_error.
ExactMatrix ad_f(const ExactMatrix& m);

/// q_i(M) = -(ad_f(M))_{i,i+1}, i = 1..n-1.
RatVec q_vector(const ExactMatrix& m);

/// Whitney criterion: every minor of every size >= 0, checked exactly by
/// exhaustive enumeration. Exponential in n; refuses n > max_n unless forced.
bool is_totally_nonnegative(const ExactMatrix& m, std::size_t max_n = 8,
                            bool force = false);

bool is_unipotent_lower(const ExactMatrix& m);
bool is_unipotent_upper(const ExactMatrix& m);

}  // namespace ptv

#endif
