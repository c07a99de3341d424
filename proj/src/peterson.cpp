#include "ptv/peterson.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ptv/errors.hpp"

namespace ptv {

ExactMatrix toeplitz_matrix(const ToeplitzParams& tp) {
  const std::size_t k = tp.size;
  if (tp.params.size() + 1 != k)
    throw size_error("Toeplitz parameter count must be size - 1");
  ExactMatrix m = ExactMatrix::identity(k);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j < i; ++j) m.at(i, j) = tp.params[i - j - 1];
  return m;
}

ExactMatrix j_toeplitz_matrix(const PetersonPoint& p) {
  const std::size_t n = p.J.n;
  const auto comps = connected_components(p.J);
  if (comps.size() != p.blocks.size())
    throw size_error("block count does not match components of J");
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t b = 0; b < comps.size(); ++b) {
    const std::size_t lo = comps[b].lo;
    const std::size_t sz = comps[b].hi + 2 - comps[b].lo;  // |Jbar_k|
    if (p.blocks[b].size != sz)
      throw size_error("block size does not match Jbar interval");
    const ExactMatrix block = toeplitz_matrix(p.blocks[b]);
    for (std::size_t r = 1; r <= sz; ++r)
      for (std::size_t c = 1; c <= sz; ++c)
        m.at(lo + r - 1, lo + c - 1) = block.at(r, c);
  }
  return m;
}

ExactMatrix flag_rep(const PetersonPoint& p) {
  return j_toeplitz_matrix(p) * wJ_rep(p.J);
}

bool peterson_membership(const ExactMatrix& m) {
  const ExactMatrix conj = ad_f(m);
  const std::size_t n = m.rows();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      if (conj.at(i, j) != 0) return false;
  return true;
}

StratumYLabel stratum_of(const PetersonPoint& p) {
  const RatVec deltas = delta_vector(flag_rep(p));
  std::vector<std::size_t> kk;
  for (std::size_t i = 1; i <= deltas.size(); ++i)
    if (deltas[i - 1] == 0) kk.push_back(i);
  const SubsetJ K(p.J.n, kk);
  if (!K.subset_of(p.J))
    throw std::logic_error("zero set of Delta escapes J");
  return StratumYLabel{K, p.J};
}

bool is_tnn_point(const PetersonPoint& p) {
  for (const ToeplitzParams& tp : p.blocks)
    if (!is_totally_nonnegative(toeplitz_matrix(tp))) return false;
  for (const Rat& d : delta_vector(flag_rep(p)))
    if (d < 0) return false;
  return true;
}

ToricPoint psi(const PetersonPoint& p) {
  const ExactMatrix g = flag_rep(p);
  ToricPoint out = ToricPoint::exact(delta_vector(g), q_vector(g));
  for (std::size_t i = 0; i < out.x.size(); ++i)
    if (out.x[i] == 0 && out.y[i] == 0)
      throw std::logic_error("Psi image on the exceptional set");
  return out;
}

RatVec minor_map_forward(const ToeplitzParams& tp) {
  if (tp.size < 2) return {};
  return lower_left_minors(toeplitz_matrix(tp));
}

namespace {

double det_double(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

}  // namespace

std::vector<double> minor_map_forward(const std::vector<double>& params) {
  const std::size_t k = params.size() + 1;
  auto entry = [&](std::size_t i, std::size_t j) -> double {  // 1-based
    if (i == j) return 1.0;
    if (i > j) return params[i - j - 1];
    return 0.0;
  };
  std::vector<double> out(k - 1);
  for (std::size_t i = 1; i <= k - 1; ++i) {
    const std::size_t sz = k - i;
    std::vector<double> sub(sz * sz);
    for (std::size_t r = 0; r < sz; ++r)
      for (std::size_t c = 0; c < sz; ++c)
        sub[r * sz + c] = entry(i + 1 + r, 1 + c);
    out[i - 1] = det_double(std::move(sub), sz);
  }
  return out;
}

namespace {

double residual_norm(const std::vector<double>& f,
                     const std::vector<double>& target) {
  double r = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    r = std::max(r, std::abs(f[i] - target[i]));
  return r;
}

// Solves J d = -r by partial-pivot LU; falls back to a ridge-regularized
// normal-equation step when the Jacobian is rank deficient.
std::vector<double> newton_step(std::vector<double> jac, std::vector<double> r,
                                std::size_t m) {
  std::vector<double> a = jac;
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = -r[i];
  // scale for pivot threshold
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  bool singular = false;
  std::vector<std::size_t> perm(m);
  for (std::size_t col = 0; col < m && !singular; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < m; ++i)
      if (std::abs(a[i * m + col]) > std::abs(a[piv * m + col])) piv = i;
    if (std::abs(a[piv * m + col]) < 1e-12 * std::max(scale, 1.0)) {
      singular = true;
      break;
    }
    if (piv != col) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a[col * m + j], a[piv * m + j]);
      std::swap(rhs[col], rhs[piv]);
    }
    for (std::size_t i = col + 1; i < m; ++i) {
      const double f = a[i * m + col] / a[col * m + col];
      if (f == 0) continue;
      for (std::size_t j = col; j < m; ++j) a[i * m + j] -= f * a[col * m + j];
      rhs[i] -= f * rhs[col];
    }
  }
  if (!singular) {
    std::vector<double> d(m);
    for (std::size_t i = m; i-- > 0;) {
      double s = rhs[i];
      for (std::size_t j = i + 1; j < m; ++j) s -= a[i * m + j] * d[j];
      d[i] = s / a[i * m + i];
    }
    return d;
  }
  // (J^T J + lambda I) d = -J^T r
  const double lambda = 1e-10 * std::max(scale * scale, 1.0);
  std::vector<double> g(m * m, 0.0), b(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l)
        g[i * m + j] += jac[l * m + i] * jac[l * m + j];
    }
  for (std::size_t i = 0; i < m; ++i) {
    g[i * m + i] += lambda;
    for (std::size_t l = 0; l < m; ++l) b[i] -= jac[l * m + i] * r[l];
  }
  // small SPD system; reuse elimination
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < m; ++i)
      if (std::abs(g[i * m + col]) > std::abs(g[piv * m + col])) piv = i;
    if (piv != col) {
      for (std::size_t j = 0; j < m; ++j) std::swap(g[col * m + j], g[piv * m + j]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t i = col + 1; i < m; ++i) {
      const double f = g[i * m + col] / g[col * m + col];
      for (std::size_t j = col; j < m; ++j) g[i * m + j] -= f * g[col * m + j];
      b[i] -= f * b[col];
    }
  }
  std::vector<double> d(m);
  for (std::size_t i = m; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < m; ++j) s -= g[i * m + j] * d[j];
    d[i] = s / g[i * m + i];
  }
  return d;
}

std::vector<double> fd_jacobian(const std::vector<double>& x) {
  const std::size_t m = x.size();
  std::vector<double> jac(m * m);
  const std::vector<double> f0 = minor_map_forward(x);
  for (std::size_t j = 0; j < m; ++j) {
    const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
    std::vector<double> xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    const auto fp = minor_map_forward(xp);
    const auto fm = minor_map_forward(xm);
    for (std::size_t i = 0; i < m; ++i)
      jac[i * m + j] = (fp[i] - fm[i]) / (2 * h);
  }
  (void)f0;
  return jac;
}

// Damped Newton toward a fixed target; returns true on convergence.
bool newton_solve(std::vector<double>& x, const std::vector<double>& target,
                  const NewtonOptions& opts) {
  const std::size_t m = x.size();
  double tnorm = 1.0;
  for (double t : target) tnorm = std::max(tnorm, std::abs(t));
  const double tol = opts.residual_tol * tnorm;
  std::vector<double> f = minor_map_forward(x);
  double res = residual_norm(f, target);
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (res <= tol) return true;
    std::vector<double> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = f[i] - target[i];
    const std::vector<double> d = newton_step(fd_jacobian(x), r, m);
    double step = 1.0;
    bool improved = false;
    for (int h = 0; h <= opts.max_halvings; ++h) {
      std::vector<double> xn(m);
      for (std::size_t i = 0; i < m; ++i) xn[i] = x[i] + step * d[i];
      const std::vector<double> fn = minor_map_forward(xn);
      const double rn = residual_norm(fn, target);
      if (rn < res) {
        x = std::move(xn);
        f = fn;
        res = rn;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) return res <= tol;
  }
  return res <= tol;
}

std::vector<double> seed_params(std::size_t k) {
  // exp(f): 1/j! on the j-th subdiagonal; all lower-left minors positive.
  std::vector<double> p(k - 1);
  double fact = 1.0;
  for (std::size_t j = 1; j <= k - 1; ++j) {
    fact *= static_cast<double>(j);
    p[j - 1] = 1.0 / fact;
  }
  return p;
}

}  // namespace

ToeplitzParams minor_map_inverse(const std::vector<double>& targets,
                                 std::size_t k, const NewtonOptions& opts) {
  if (targets.size() + 1 != k)
    throw size_error("target count must be k - 1");
  for (double t : targets)
    if (t < 0) throw domain_input_error("negative minor target");
  ToeplitzParams tp;
  tp.size = k;
  if (k == 1) return tp;
  const bool all_zero =
      std::all_of(targets.begin(), targets.end(), [](double t) { return t == 0; });
  if (all_zero) {
    tp.params.assign(k - 1, Rat(0));
    return tp;
  }
  std::mt19937_64 jitter_rng(0x9e3779b97f4a7c15ull ^ k);
  std::uniform_real_distribution<double> jitter(0.5, 2.0);
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    std::vector<double> x = seed_params(k);
    if (attempt > 0)
      for (double& v : x) v *= jitter(jitter_rng);
    const std::vector<double> start = minor_map_forward(x);
    bool ok = true;
    for (int s = 1; s <= opts.continuation_steps && ok; ++s) {
      const double tau =
          static_cast<double>(s) / static_cast<double>(opts.continuation_steps);
      std::vector<double> mid(targets.size());
      for (std::size_t i = 0; i < targets.size(); ++i)
        mid[i] = (1 - tau) * start[i] + tau * targets[i];
      ok = newton_solve(x, mid, opts);
    }
    if (ok) {
      tp.params.clear();
      for (double v : x) {
        if (std::abs(v) < 1e-13) v = 0.0;
        tp.params.push_back(rat_from_double(v));
      }
      return tp;
    }
  }
  throw solve_error("minor map inversion did not converge");
}

PetersonPoint sample_stratum(const SubsetJ& K, const SubsetJ& J,
                             std::uint64_t seed) {
  if (!K.subset_of(J)) throw label_error("stratum label needs K inside J");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  PetersonPoint p;
  p.J = J;
  for (const Interval& c : connected_components(J)) {
    const std::size_t sz = c.hi + 2 - c.lo;  // |Jbar_k|
    std::vector<double> targets(sz - 1);
    for (std::size_t pos = 1; pos <= sz - 1; ++pos) {
      const std::size_t i = c.lo + pos - 1;  // global index in J_k
      targets[pos - 1] = K.contains(i) ? 0.0 : std::exp(logu(rng));
    }
    p.blocks.push_back(minor_map_inverse(targets, sz));
  }
  return p;
}

PetersonPoint psi_inverse_nonneg(const ToricPoint& q, double tol) {
  const std::size_t n = q.rank();
  std::vector<std::size_t> jj;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const double y = q.y_at(i);
    if (std::abs(y - 1.0) <= tol)
      jj.push_back(i);
    else if (std::abs(y) > tol)
      throw domain_input_error("input is not canonical: y off {0,1}");
  }
  const SubsetJ J(n, jj);
  PetersonPoint p;
  p.J = J;
  for (const Interval& c : connected_components(J)) {
    const std::size_t sz = c.hi + 2 - c.lo;
    std::vector<double> targets(sz - 1);
    for (std::size_t pos = 1; pos <= sz - 1; ++pos) {
      double t = q.x_at(c.lo + pos - 1);
      if (std::abs(t) <= tol) t = 0.0;
      if (t < 0) throw domain_input_error("negative canonical coordinate");
      targets[pos - 1] = t;
    }
    p.blocks.push_back(minor_map_inverse(targets, sz));
  }
  return p;
}

}  // namespace ptv
