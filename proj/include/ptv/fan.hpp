#ifndef PTV_FAN_HPP
#define PTV_FAN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ptv/rational.hpp"
#include "ptv/weyl.hpp"

namespace ptv {

/// Ray of the fan: either -alpha^vee_i = e_{i-1} - 2 e_i + e_{i+1}
/// (with e_0 = e_n = 0) or the standard basis vector e_i.
struct RayVector {
  enum class Kind { NegCoroot, Standard };
  Kind kind;
  std::size_t index;  // i in [n-1]
  RatVec coords;      // length n-1

  static RayVector neg_coroot(std::size_t i, std::size_t n);
  static RayVector standard(std::size_t i, std::size_t n);
};

/// tau_{K,J} = cone({-alpha^vee_i : i in K} u {e_i : i not in J}), K <= J.
struct ConeTau {
  SubsetJ K, J;
  std::vector<RayVector> generators;
  bool is_maximal() const { return K == J; }
};

struct FanSigma {
  std::size_t n;
  std::vector<ConeTau> cones;  // all K <= J <= [n-1]; 3^{n-1} of them
};

ConeTau build_cone(const SubsetJ& K, const SubsetJ& J);  // throws label_error

FanSigma enumerate_fan(std::size_t n);

/// |K| + (n-1) - |J|; asserted equal to the rank of the generator matrix.
std::size_t cone_dim(const ConeTau& c);

/// Exact membership: v is a nonnegative rational combination of the
/// (independent) generators; lower-dimensional cones require exact span
/// membership first.
bool cone_contains(const ConeTau& c, const RatVec& v);

/// All maximal cones (K = J) of the fan containing v.
std::vector<const ConeTau*> locate(const RatVec& v, const FanSigma& fan);

/// The n-1 primitive collections {cone(-alpha^vee_i), cone(e_i)}.
std::vector<std::pair<RayVector, RayVector>> primitive_collections(
    std::size_t n);

}  // namespace ptv

#endif
