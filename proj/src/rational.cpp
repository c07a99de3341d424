#include "ptv/rational.hpp"

namespace ptv {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) {
  return r.get_str(10);
}

Rat rat_from_double(double x) {
  return mpq_class(x);
}

}  // namespace ptv
