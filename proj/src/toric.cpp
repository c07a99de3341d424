#include "ptv/toric.hpp"

#include <cmath>

#include "ptv/errors.hpp"
#include "ptv/fan.hpp"

namespace ptv {

TorusElement TorusElement::identity(std::size_t n) {
  return TorusElement{std::vector<double>(n, 1.0)};
}

double ToricPoint::x_at(std::size_t i) const {
  return mode == Mode::Exact ? rat_to_double(x.at(i - 1)) : xf.at(i - 1);
}

double ToricPoint::y_at(std::size_t i) const {
  return mode == Mode::Exact ? rat_to_double(y.at(i - 1)) : yf.at(i - 1);
}

ToricPoint ToricPoint::exact(RatVec x, RatVec y) {
  if (x.size() != y.size()) throw size_error("x/y length mismatch");
  ToricPoint p;
  p.mode = Mode::Exact;
  p.x = std::move(x);
  p.y = std::move(y);
  return p;
}

ToricPoint ToricPoint::floating(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) throw size_error("x/y length mismatch");
  ToricPoint p;
  p.mode = Mode::Float;
  p.xf = std::move(x);
  p.yf = std::move(y);
  return p;
}

ToricPoint t_action(const TorusElement& t, const ToricPoint& p) {
  const std::size_t n = p.rank();
  if (t.t.size() != n) throw size_error("torus element rank mismatch");
  std::vector<double> x(n - 1), y(n - 1);
  double varpi = 1.0;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    varpi *= t.t[i - 1];                       // varpi_i = t_1...t_i
    const double alpha = t.t[i - 1] / t.t[i];  // alpha_i = t_i / t_{i+1}
    x[i - 1] = varpi * p.x_at(i);
    y[i - 1] = alpha * p.y_at(i);
  }
  return ToricPoint::floating(std::move(x), std::move(y));
}

StratumLabel stratum_of(const ToricPoint& p, double tol) {
  const std::size_t n = p.rank();
  std::vector<std::size_t> kk, jj;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    bool xz, yz;
    if (p.mode == ToricPoint::Mode::Exact) {
      xz = p.x[i - 1] == 0;
      yz = p.y[i - 1] == 0;
    } else {
      xz = std::abs(p.xf[i - 1]) <= tol;
      yz = std::abs(p.yf[i - 1]) <= tol;
    }
    if (xz && yz)
      throw ambiguous_support_error("support pair vanishes at index " +
                                    std::to_string(i));
    if (xz) kk.push_back(i);
    if (!yz) jj.push_back(i);
  }
  return StratumLabel{SubsetJ(n, kk), SubsetJ(n, jj)};
}

namespace {

void require_nonneg(const ToricPoint& p, double tol) {
  const std::size_t n = p.rank();
  for (std::size_t i = 1; i <= n - 1; ++i) {
    if (p.mode == ToricPoint::Mode::Exact) {
      if (p.x[i - 1] < 0 || p.y[i - 1] < 0)
        throw not_nonnegative_error("negative coordinate");
    } else {
      if (p.xf[i - 1] < -tol || p.yf[i - 1] < -tol)
        throw not_nonnegative_error("negative coordinate");
    }
  }
}

bool is_canonical_exact(const ToricPoint& p, const StratumLabel& s) {
  if (p.mode != ToricPoint::Mode::Exact) return false;
  const std::size_t n = p.rank();
  for (std::size_t i = 1; i <= n - 1; ++i) {
    if (s.J.contains(i)) {
      if (p.y[i - 1] != 1) return false;
    } else {
      if (p.y[i - 1] != 0 || p.x[i - 1] != 1) return false;
    }
  }
  return true;
}

// Solves the dense linear system in place; a is row-major m x m, rhs length m.
std::vector<double> gauss_solve(std::vector<double> a, std::vector<double> rhs,
                                std::size_t m) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (std::abs(a[piv * m + col]) < 1e-14)
      throw solve_error("ill-conditioned canonicalization system");
    if (piv != col) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[col * m + j], a[piv * m + j]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r * m + col] / a[col * m + col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < m; ++j) a[r * m + j] -= f * a[col * m + j];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < m; ++i) rhs[i] /= a[i * m + i];
  return rhs;
}

}  // namespace

ToricPoint canonicalize_nonneg(const ToricPoint& p, double tol) {
  require_nonneg(p, tol);
  const StratumLabel s = stratum_of(p, tol);
  if (is_canonical_exact(p, s)) return p;
  const std::size_t n = p.rank();
  const std::size_t m = n - 1;
  // Log coordinates u_i = log varpi_i(t). Rows: alpha_i(t) = 1/y_i for
  // i in J (Cartan row), varpi_i(t) = 1/x_i for i not in J (identity row).
  std::vector<double> a(m * m, 0.0), rhs(m, 0.0);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t r = i - 1;
    if (s.J.contains(i)) {
      if (i >= 2) a[r * m + (i - 2)] = -1.0;
      a[r * m + (i - 1)] = 2.0;
      if (i <= m - 1) a[r * m + i] = -1.0;
      rhs[r] = -std::log(p.y_at(i));
    } else {
      a[r * m + (i - 1)] = 1.0;
      rhs[r] = -std::log(p.x_at(i));
    }
  }
  const std::vector<double> u = gauss_solve(std::move(a), std::move(rhs), m);
  std::vector<double> x(m), y(m);
  for (std::size_t i = 1; i <= m; ++i) {
    if (s.K.contains(i))
      x[i - 1] = 0.0;
    else if (!s.J.contains(i))
      x[i - 1] = 1.0;
    else
      x[i - 1] = p.x_at(i) * std::exp(u[i - 1]);
    y[i - 1] = s.J.contains(i) ? 1.0 : 0.0;
  }
  return ToricPoint::floating(std::move(x), std::move(y));
}

bool points_equal(const ToricPoint& p, const ToricPoint& q, double tol) {
  const ToricPoint cp = canonicalize_nonneg(p, tol);
  const ToricPoint cq = canonicalize_nonneg(q, tol);
  if (cp.rank() != cq.rank()) return false;
  if (!(stratum_of(cp, tol) == stratum_of(cq, tol))) return false;
  for (std::size_t i = 1; i <= cp.rank() - 1; ++i) {
    if (std::abs(cp.x_at(i) - cq.x_at(i)) > tol) return false;
    if (std::abs(cp.y_at(i) - cq.y_at(i)) > tol) return false;
  }
  return true;
}

MomentWeights lattice_points(std::size_t n) {
  const PolytopeModel model = h_representation(n);
  long box = 0;
  for (const VertexVJ& v : model.vertices)
    for (long c : v.coords) box = std::max(box, c);
  MomentWeights mw;
  mw.n = n;
  const std::size_t d = n - 1;
  std::vector<long> m(d, 0);
  for (;;) {
    // feasibility and exponents
    bool ok = true;
    std::vector<long> a(d), b(d);
    for (std::size_t i = 1; i <= d && ok; ++i) {
      long dot = -2 * m[i - 1];
      if (i >= 2) dot += m[i - 2];
      if (i <= d - 1) dot += m[i];
      a[i - 1] = dot + 2;
      b[i - 1] = m[i - 1];
      if (a[i - 1] < 0) ok = false;
    }
    if (ok) {
      mw.lattice_points.push_back(m);
      mw.a_exp.push_back(std::move(a));
      mw.b_exp.push_back(std::move(b));
    }
    // next grid point
    std::size_t i = 0;
    while (i < d && m[i] == box) m[i++] = 0;
    if (i == d) break;
    ++m[i];
  }
  return mw;
}

std::vector<double> moment_map(const ToricPoint& p, const MomentWeights& mw) {
  const std::size_t n = p.rank();
  if (mw.n != n) throw size_error("moment weights rank mismatch");
  const std::size_t d = n - 1;
  for (std::size_t i = 1; i <= d; ++i)
    if (p.x_at(i) == 0.0 && p.y_at(i) == 0.0)
      throw exceptional_point_error("point on the exceptional set");
  std::vector<double> num(d, 0.0);
  double den = 0.0;
  for (std::size_t k = 0; k < mw.lattice_points.size(); ++k) {
    double w = 1.0;
    for (std::size_t i = 1; i <= d; ++i) {
      w *= std::pow(std::abs(p.x_at(i)), 2.0 * mw.a_exp[k][i - 1]);
      w *= std::pow(std::abs(p.y_at(i)), 2.0 * mw.b_exp[k][i - 1]);
    }
    den += w;
    for (std::size_t i = 0; i < d; ++i) num[i] += w * mw.lattice_points[k][i];
  }
  if (den <= 0.0) throw exceptional_point_error("vanishing weight sum");
  for (double& v : num) v /= den;
  return num;
}

}  // namespace ptv
