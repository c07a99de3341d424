#include "ptv/fan.hpp"

#include "ptv/detail/solve.hpp"
#include "ptv/errors.hpp"

namespace ptv {

RayVector RayVector::neg_coroot(std::size_t i, std::size_t n) {
  if (i < 1 || i > n - 1) throw index_error("ray index out of range");
  RayVector r{Kind::NegCoroot, i, RatVec(n - 1, Rat(0))};
  if (i >= 2) r.coords[i - 2] = 1;
  r.coords[i - 1] = -2;
  if (i <= n - 2) r.coords[i] = 1;
  return r;
}

RayVector RayVector::standard(std::size_t i, std::size_t n) {
  if (i < 1 || i > n - 1) throw index_error("ray index out of range");
  RayVector r{Kind::Standard, i, RatVec(n - 1, Rat(0))};
  r.coords[i - 1] = 1;
  return r;
}

ConeTau build_cone(const SubsetJ& K, const SubsetJ& J) {
  if (K.n != J.n) throw label_error("rank mismatch between K and J");
  if (!K.subset_of(J)) throw label_error("cone label needs K inside J");
  const std::size_t n = K.n;
  ConeTau c{K, J, {}};
  for (std::size_t i : K.members)
    c.generators.push_back(RayVector::neg_coroot(i, n));
  for (std::size_t i = 1; i <= n - 1; ++i)
    if (!J.contains(i)) c.generators.push_back(RayVector::standard(i, n));
  return c;
}

FanSigma enumerate_fan(std::size_t n) {
  if (n < 2) throw size_error("fan needs n >= 2");
  FanSigma fan{n, {}};
  for (const SubsetJ& J : all_subsets(n)) {
    // Subsets K of J, via submask enumeration.
    const unsigned long jm = J.mask();
    unsigned long km = jm;
    for (;;) {
      fan.cones.push_back(build_cone(SubsetJ::from_mask(n, km), J));
      if (km == 0) break;
      km = (km - 1) & jm;
    }
  }
  return fan;
}

namespace {

ExactMatrix generator_matrix(const ConeTau& c, std::size_t n) {
  ExactMatrix g(n - 1, c.generators.size());
  for (std::size_t j = 0; j < c.generators.size(); ++j)
    for (std::size_t i = 0; i < n - 1; ++i)
      g.at(i + 1, j + 1) = c.generators[j].coords[i];
  return g;
}

}  // namespace

std::size_t cone_dim(const ConeTau& c) {
  const std::size_t n = c.K.n;
  const std::size_t d = c.K.members.size() + (n - 1) - c.J.members.size();
  if (!c.generators.empty()) {
    if (detail::rank(generator_matrix(c, n)) != c.generators.size())
      throw std::logic_error("simpliciality violation: dependent generators");
  }
  return d;
}

bool cone_contains(const ConeTau& c, const RatVec& v) {
  const std::size_t n = c.K.n;
  if (v.size() != n - 1) throw size_error("vector length mismatch");
  if (c.generators.empty()) {
    for (const Rat& e : v)
      if (e != 0) return false;
    return true;
  }
  const auto coeffs = detail::solve_full_column_rank(generator_matrix(c, n), v);
  if (!coeffs) return false;  // outside the span
  for (const Rat& e : *coeffs)
    if (e < 0) return false;
  return true;
}

std::vector<const ConeTau*> locate(const RatVec& v, const FanSigma& fan) {
  std::vector<const ConeTau*> out;
  for (const ConeTau& c : fan.cones)
    if (c.is_maximal() && cone_contains(c, v)) out.push_back(&c);
  if (out.empty())
    throw std::logic_error("completeness violation: point in no maximal cone");
  return out;
}

std::vector<std::pair<RayVector, RayVector>> primitive_collections(
    std::size_t n) {
  std::vector<std::pair<RayVector, RayVector>> out;
  for (std::size_t i = 1; i <= n - 1; ++i)
    out.emplace_back(RayVector::neg_coroot(i, n), RayVector::standard(i, n));
  return out;
}

}  // namespace ptv
