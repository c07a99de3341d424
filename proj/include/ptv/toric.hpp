#ifndef PTV_TORIC_HPP
#define PTV_TORIC_HPP

#include <cstddef>
#include <vector>

#include "ptv/polytope.hpp"
#include "ptv/rational.hpp"
#include "ptv/weyl.hpp"

namespace ptv {

/// diag(t_1..t_n) with product 1; positive entries (we only ever act with
/// elements of T_{>0} here).
struct TorusElement {
  std::vector<double> t;  // length n, product 1

  static TorusElement identity(std::size_t n);
};

/// Representative (x_1..x_{n-1}; y_1..y_{n-1}) of a class of
/// (C^{2(n-1)} - E)/T. Exact mode carries rationals, float mode doubles.
struct ToricPoint {
  enum class Mode { Exact, Float };
  Mode mode = Mode::Exact;
  RatVec x, y;                  // used in exact mode
  std::vector<double> xf, yf;   // used in float mode

  std::size_t rank() const {
    return (mode == Mode::Exact ? x.size() : xf.size()) + 1;
  }
  double x_at(std::size_t i) const;  // 1-based, mode-agnostic read
  double y_at(std::size_t i) const;

  static ToricPoint exact(RatVec x, RatVec y);
  static ToricPoint floating(std::vector<double> x, std::vector<double> y);
};

struct StratumLabel {
  SubsetJ K, J;
  bool operator==(const StratumLabel&) const = default;
};

/// Lattice points of P_{n-1} with the moment-map exponents
/// a_i(m) = <m, -alpha^vee_i> + 2 and b_i(m) = m_i.
struct MomentWeights {
  std::size_t n;
  std::vector<std::vector<long>> lattice_points;
  std::vector<std::vector<long>> a_exp;  // per point, length n-1
  std::vector<std::vector<long>> b_exp;  // per point, length n-1
};

/// x_i -> varpi_i(t) x_i, y_i -> alpha_i(t) y_i.
ToricPoint t_action(const TorusElement& t, const ToricPoint& p);

/// K = zero set of x, complement of J = zero set of y. Zeros are decided
/// within tol in float mode; throws ambiguous_support_error when some pair
/// (x_i, y_i) is entirely below tol, and exactly on E in exact mode.
StratumLabel stratum_of(const ToricPoint& p, double tol = 1e-9);

/// Unique nonnegative representative: y = indicator of J, x_i = 1 off J,
/// x_i = 0 on K, x_i > 0 free on J - K. Solved in logarithmic coordinates
/// on T_{>0}; output is in float mode (the solve is transcendental).
ToricPoint canonicalize_nonneg(const ToricPoint& p, double tol = 1e-9);

/// Equality in the quotient, decided for nonnegative points only:
/// same stratum and canonical forms within tol.
bool points_equal(const ToricPoint& p, const ToricPoint& q, double tol = 1e-9);

MomentWeights lattice_points(std::size_t n);

/// Moment map into P_{n-1}: weighted average of the lattice points with
/// weights prod |x_i|^{2 a_i(m)} prod |y_i|^{2 b_i(m)}.
std::vector<double> moment_map(const ToricPoint& p, const MomentWeights& mw);

}  // namespace ptv

#endif
