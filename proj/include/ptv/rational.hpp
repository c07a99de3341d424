#ifndef PTV_RATIONAL_HPP
#define PTV_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptv {

// Exact rational scalar. mpq_class keeps values reduced with a positive
// denominator, which is exactly the invariant we need; equality is structural.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "p/q" or "p" (base 10). Throws parse_error on malformed input.
Rat rat_from_string(const std::string& s);

// Serializes as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Exact dyadic rational equal to the given double.
Rat rat_from_double(double x);

}  // namespace ptv

#endif
