#ifndef PTV_WEYL_HPP
#define PTV_WEYL_HPP

#include <cstddef>
#include <vector>

#include "ptv/matrix.hpp"

namespace ptv {

/// Interval {lo..hi} of integers.
struct Interval {
  std::size_t lo, hi;
  bool operator==(const Interval&) const = default;
};

/// A subset of {1..n-1}, kept sorted and duplicate-free.
struct SubsetJ {
  std::size_t n = 2;
  std::vector<std::size_t> members;

  SubsetJ() = default;
  SubsetJ(std::size_t n_, std::vector<std::size_t> members_);

  bool contains(std::size_t i) const;
  bool subset_of(const SubsetJ& other) const;
  bool operator==(const SubsetJ&) const = default;

  static SubsetJ empty(std::size_t n) { return SubsetJ(n, {}); }
  static SubsetJ full(std::size_t n);
  /// Subset from a bitmask over {1..n-1} (bit i-1 <-> element i).
  static SubsetJ from_mask(std::size_t n, unsigned long mask);
  unsigned long mask() const;
};

/// All subsets of {1..n-1} in mask order (2^{n-1} of them).
std::vector<SubsetJ> all_subsets(std::size_t n);

/// Partition of [n] into the intervals Jbar_k = J_k u {max J_k + 1} and
/// leftover singletons.
struct BlockPartition {
  std::vector<Interval> blocks;
  std::vector<std::size_t> singletons;
};

struct ReducedWord {
  std::vector<std::size_t> letters;  // simple-reflection indices in [n-1]
};

/// x_i(t) = I + t E_{i,i+1}.
ExactMatrix chevalley_x(std::size_t i, const Rat& t, std::size_t n);
/// y_i(t) = I + t E_{i+1,i}.
ExactMatrix chevalley_y(std::size_t i, const Rat& t, std::size_t n);

/// The pinned simple-reflection representative y_i(-1) x_i(1) y_i(-1):
/// the block [[0,1],[-1,0]] at rows/cols {i,i+1}.
ExactMatrix simple_rep(std::size_t i, std::size_t n);

/// Ordered product of simple_rep matrices along the word.
ExactMatrix rep_of_word(const ReducedWord& word, std::size_t n);

/// Longest-permutation representative: entry (i, n+1-i) = (-1)^{i-1}.
ExactMatrix w0_rep(std::size_t n);

/// Maximal runs of consecutive integers, in increasing order.
std::vector<Interval> connected_components(const SubsetJ& j);

BlockPartition jbar_partition(const SubsetJ& j);

/// Block-diagonal representative of w_J: w0_rep on each Jbar block.
ExactMatrix wJ_rep(const SubsetJ& j);

bool is_j_block_diagonal(const ExactMatrix& m, const SubsetJ& j);
/// Additionally requires each block lower-unitriangular with constant
/// subdiagonals.
bool is_j_toeplitz(const ExactMatrix& m, const SubsetJ& j);

/// Permutation utilities (one-line notation, 1-based images).
using Permutation = std::vector<std::size_t>;
std::size_t coxeter_length(const Permutation& w);
Permutation longest_permutation(std::size_t n);
/// All reduced words of w, by exhaustive descent recursion. Factorial growth;
/// intended for n <= 4 plus small sampled use beyond.
std::vector<ReducedWord> all_reduced_words(const Permutation& w);
/// One reduced word chosen by repeatedly taking the smallest descent.
ReducedWord some_reduced_word(const Permutation& w);

}  // namespace ptv

#endif
