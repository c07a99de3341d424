#include "ptv/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "ptv/errors.hpp"

namespace ptv {

SubsetJ::SubsetJ(std::size_t n_, std::vector<std::size_t> members_)
    : n(n_), members(std::move(members_)) {
  if (n < 2) throw size_error("SubsetJ needs n >= 2");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t i : members)
    if (i < 1 || i > n - 1) throw index_error("subset element outside [n-1]");
}

bool SubsetJ::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool SubsetJ::subset_of(const SubsetJ& other) const {
  return std::includes(other.members.begin(), other.members.end(),
                       members.begin(), members.end());
}

SubsetJ SubsetJ::full(std::size_t n) {
  std::vector<std::size_t> all(n - 1);
  std::iota(all.begin(), all.end(), 1);
  return SubsetJ(n, std::move(all));
}

SubsetJ SubsetJ::from_mask(std::size_t n, unsigned long mask) {
  std::vector<std::size_t> v;
  for (std::size_t i = 1; i <= n - 1; ++i)
    if (mask & (1ul << (i - 1))) v.push_back(i);
  return SubsetJ(n, std::move(v));
}

unsigned long SubsetJ::mask() const {
  unsigned long m = 0;
  for (std::size_t i : members) m |= 1ul << (i - 1);
  return m;
}

std::vector<SubsetJ> all_subsets(std::size_t n) {
  std::vector<SubsetJ> out;
  out.reserve(1ul << (n - 1));
  for (unsigned long m = 0; m < (1ul << (n - 1)); ++m)
    out.push_back(SubsetJ::from_mask(n, m));
  return out;
}

ExactMatrix chevalley_x(std::size_t i, const Rat& t, std::size_t n) {
  if (i < 1 || i > n - 1) throw index_error("chevalley index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i, i + 1) = t;
  return m;
}

ExactMatrix chevalley_y(std::size_t i, const Rat& t, std::size_t n) {
  if (i < 1 || i > n - 1) throw index_error("chevalley index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i + 1, i) = t;
  return m;
}

ExactMatrix simple_rep(std::size_t i, std::size_t n) {
  if (i < 1 || i > n - 1) throw index_error("simple reflection out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i, i) = 0;
  m.at(i + 1, i + 1) = 0;
  m.at(i, i + 1) = 1;
  m.at(i + 1, i) = -1;
  return m;
}

ExactMatrix rep_of_word(const ReducedWord& word, std::size_t n) {
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t letter : word.letters) m = m * simple_rep(letter, n);
  return m;
}

ExactMatrix w0_rep(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    m.at(i, n + 1 - i) = (i % 2 == 1) ? 1 : -1;
  return m;
}

std::vector<Interval> connected_components(const SubsetJ& j) {
  std::vector<Interval> out;
  const auto& mem = j.members;
  std::size_t k = 0;
  while (k < mem.size()) {
    std::size_t start = k;
    while (k + 1 < mem.size() && mem[k + 1] == mem[k] + 1) ++k;
    out.push_back({mem[start], mem[k]});
    ++k;
  }
  return out;
}

BlockPartition jbar_partition(const SubsetJ& j) {
  BlockPartition bp;
  std::vector<bool> covered(j.n + 1, false);
  for (const Interval& c : connected_components(j)) {
    bp.blocks.push_back({c.lo, c.hi + 1});
    for (std::size_t p = c.lo; p <= c.hi + 1; ++p) covered[p] = true;
  }
  for (std::size_t p = 1; p <= j.n; ++p)
    if (!covered[p]) bp.singletons.push_back(p);
  return bp;
}

ExactMatrix wJ_rep(const SubsetJ& j) {
  ExactMatrix m = ExactMatrix::identity(j.n);
  for (const Interval& c : connected_components(j)) {
    const std::size_t lo = c.lo, sz = c.hi + 2 - c.lo;
    const ExactMatrix block = w0_rep(sz);
    for (std::size_t a = 1; a <= sz; ++a)
      for (std::size_t b = 1; b <= sz; ++b)
        m.at(lo + a - 1, lo + b - 1) = block.at(a, b);
  }
  return m;
}

namespace {

// block index of position p under jbar_partition, or npos for singletons
std::size_t block_of(const BlockPartition& bp, std::size_t p) {
  for (std::size_t b = 0; b < bp.blocks.size(); ++b)
    if (bp.blocks[b].lo <= p && p <= bp.blocks[b].hi) return b;
  return static_cast<std::size_t>(-1);
}

}  // namespace

bool is_j_block_diagonal(const ExactMatrix& m, const SubsetJ& j) {
  if (!m.is_square() || m.rows() != j.n) return false;
  const BlockPartition bp = jbar_partition(j);
  for (std::size_t r = 1; r <= j.n; ++r)
    for (std::size_t c = 1; c <= j.n; ++c) {
      if (r == c) continue;
      if (block_of(bp, r) != block_of(bp, c) ||
          block_of(bp, r) == static_cast<std::size_t>(-1)) {
        if (m.at(r, c) != 0) return false;
      }
    }
  return true;
}

bool is_j_toeplitz(const ExactMatrix& m, const SubsetJ& j) {
  if (!is_j_block_diagonal(m, j)) return false;
  for (std::size_t d = 1; d <= j.n; ++d)
    if (m.at(d, d) != 1) return false;
  for (const Interval& b : jbar_partition(j).blocks) {
    for (std::size_t r = b.lo; r <= b.hi; ++r)
      for (std::size_t c = r + 1; c <= b.hi; ++c)
        if (m.at(r, c) != 0) return false;  // lower triangular
    // constant subdiagonals
    for (std::size_t d = 1; d < b.hi - b.lo + 1; ++d)
      for (std::size_t r = b.lo + d; r + 1 <= b.hi; ++r)
        if (m.at(r, r - d) != m.at(r + 1, r + 1 - d)) return false;
  }
  return true;
}

std::size_t coxeter_length(const Permutation& w) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

Permutation longest_permutation(std::size_t n) {
  Permutation w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = n - i;
  return w;
}

namespace {

void reduced_words_rec(Permutation w, std::vector<std::size_t>& prefix,
                       std::vector<ReducedWord>& out) {
  bool any = false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) {  // right descent at i
      any = true;
      std::swap(w[i - 1], w[i]);
      prefix.push_back(i);
      reduced_words_rec(w, prefix, out);
      prefix.pop_back();
      std::swap(w[i - 1], w[i]);
    }
  }
  if (!any) {
    ReducedWord rw;
    rw.letters.assign(prefix.rbegin(), prefix.rend());
    out.push_back(std::move(rw));
  }
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  std::vector<std::size_t> prefix;
  reduced_words_rec(w, prefix, out);
  return out;
}

ReducedWord some_reduced_word(const Permutation& w) {
  Permutation v = w;
  ReducedWord rw;
  for (;;) {
    bool found = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i - 1] > v[i]) {
        std::swap(v[i - 1], v[i]);
        rw.letters.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  std::reverse(rw.letters.begin(), rw.letters.end());
  return rw;
}

}  // namespace ptv
