#ifndef PTV_DETAIL_SOLVE_HPP
#define PTV_DETAIL_SOLVE_HPP

#include <optional>

#include "ptv/matrix.hpp"

namespace ptv::detail {

/// Solves A c = b exactly for an m x k matrix A with full column rank.
/// Returns nullopt when the system is inconsistent (b outside the column
/// span); throws singular_error when the columns are dependent.
std::optional<RatVec> solve_full_column_rank(const ExactMatrix& a,
                                             const RatVec& b);

/// Rank of a rational matrix by exact elimination.
std::size_t rank(const ExactMatrix& a);

}  // namespace ptv::detail

#endif
