#include "ptv/polytope.hpp"

#include <cmath>

#include "ptv/detail/solve.hpp"
#include "ptv/errors.hpp"
#include "ptv/fan.hpp"

namespace ptv {

VertexVJ vertex_vJ(const SubsetJ& J) {
  const std::size_t n = J.n;
  VertexVJ v{J, std::vector<long>(n - 1, 0)};
  for (const Interval& c : connected_components(J)) {
    const long a = static_cast<long>(c.lo), b = static_cast<long>(c.hi);
    for (long i = a; i <= b; ++i)
      v.coords[static_cast<std::size_t>(i) - 1] += (i + 1 - a) * (b + 1 - i);
  }
  return v;
}

namespace {

RatVec coords_to_rat(const std::vector<long>& c) {
  RatVec out;
  out.reserve(c.size());
  for (long v : c) out.emplace_back(v);
  return out;
}

}  // namespace

Rat slack(const PolytopeModel& model, std::size_t idx, const RatVec& p) {
  const HalfSpace& h = model.inequalities.at(idx);
  Rat s = -h.rhs;
  for (std::size_t i = 0; i < p.size(); ++i) s += h.normal[i] * p[i];
  return s;
}

bool is_feasible(const PolytopeModel& model, const RatVec& p) {
  for (std::size_t idx = 0; idx < model.inequalities.size(); ++idx)
    if (slack(model, idx, p) < 0) return false;
  return true;
}

PolytopeModel h_representation(std::size_t n) {
  if (n < 2) throw size_error("polytope needs n >= 2");
  PolytopeModel model;
  model.n = n;
  for (const SubsetJ& J : all_subsets(n)) model.vertices.push_back(vertex_vJ(J));
  // <e_i, x> >= 0 for i in [n-1], then <-alpha^vee_i, x> >= -2.
  for (std::size_t i = 1; i <= n - 1; ++i)
    model.inequalities.push_back(
        {RayVector::standard(i, n).coords, Rat(0)});
  for (std::size_t i = 1; i <= n - 1; ++i)
    model.inequalities.push_back(
        {RayVector::neg_coroot(i, n).coords, Rat(-2)});

  // V/H agreement: feasibility of every vertex, and uniqueness of the
  // solution of each vertex's n-1 active constraints.
  for (const VertexVJ& v : model.vertices) {
    const RatVec p = coords_to_rat(v.coords);
    if (!is_feasible(model, p))
      throw std::logic_error("model error: vertex violates an inequality");
    ExactMatrix active(n - 1, n - 1);
    RatVec rhs;
    std::size_t row = 1;
    for (std::size_t i = 1; i <= n - 1; ++i) {
      const std::size_t idx = v.J.contains(i) ? (n - 1) + (i - 1) : i - 1;
      for (std::size_t col = 1; col <= n - 1; ++col)
        active.at(row, col) = model.inequalities[idx].normal[col - 1];
      rhs.push_back(model.inequalities[idx].rhs);
      ++row;
    }
    const auto x = detail::solve_full_column_rank(active, rhs);
    if (!x || *x != p)
      throw std::logic_error("model error: active constraints do not pin v_J");
  }
  return model;
}

std::vector<VertexVJ> face_vertices(const SubsetJ& K, const SubsetJ& J) {
  if (!K.subset_of(J)) throw label_error("face label needs K inside J");
  std::vector<VertexVJ> out;
  const unsigned long km = K.mask(), jm = J.mask();
  const unsigned long free = jm & ~km;
  unsigned long sub = free;
  for (;;) {
    out.push_back(vertex_vJ(SubsetJ::from_mask(K.n, km | sub)));
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return out;
}

FaceLabel carrier_face(const RatVec& p, const PolytopeModel& model) {
  const std::size_t n = model.n;
  std::vector<std::size_t> kk, jj;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    const Rat se = slack(model, i - 1, p);
    const Rat sc = slack(model, (n - 1) + (i - 1), p);
    if (se < 0 || sc < 0) throw outside_error("point outside the polytope");
    if (sc == 0) kk.push_back(i);
    if (se != 0) jj.push_back(i);
  }
  return FaceLabel{SubsetJ(n, kk), SubsetJ(n, jj)};
}

RatVec face_barycenter(const FaceLabel& f) {
  const auto verts = face_vertices(f.K, f.J);
  const std::size_t d = f.K.n - 1;
  RatVec c(d, Rat(0));
  for (const VertexVJ& v : verts)
    for (std::size_t i = 0; i < d; ++i) c[i] += v.coords[i];
  for (Rat& e : c) e /= Rat(static_cast<long>(verts.size()));
  return c;
}

namespace {

void flag_rec(const RatVec& p, const PolytopeModel& model, const Rat& weight,
              FlagChain& chain) {
  const FaceLabel f = carrier_face(p, model);
  const RatVec c = face_barycenter(f);
  chain.faces.push_back(f);
  if (p == c) {
    chain.weights.push_back(weight);
    return;
  }
  // Exit point of the ray c -> p through the boundary of the carrier.
  RatVec d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - c[i];
  bool found = false;
  Rat s_max;
  for (std::size_t idx = 0; idx < model.inequalities.size(); ++idx) {
    Rat ad(0);
    for (std::size_t i = 0; i < d.size(); ++i)
      ad += model.inequalities[idx].normal[i] * d[i];
    if (ad >= 0) continue;
    const Rat s = -slack(model, idx, c) / ad;
    if (!found || s < s_max) {
      s_max = s;
      found = true;
    }
  }
  if (!found || s_max <= 1)
    throw std::logic_error("ray exit failed; carrier misclassified");
  RatVec q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = c[i] + s_max * d[i];
  chain.weights.push_back(weight * (1 - 1 / s_max));
  flag_rec(q, model, weight / s_max, chain);
}

}  // namespace

FlagChain barycentric_flag(const RatVec& p, const PolytopeModel& model) {
  FlagChain chain;
  flag_rec(p, model, Rat(1), chain);
  return chain;
}

RatVec cube_face_barycenter(const FaceLabel& f) {
  const std::size_t d = f.K.n - 1;
  RatVec c(d);
  for (std::size_t i = 1; i <= d; ++i) {
    if (f.K.contains(i))
      c[i - 1] = 0;
    else if (!f.J.contains(i))
      c[i - 1] = 1;
    else
      c[i - 1] = Rat(1, 2);
  }
  return c;
}

RatVec cube_homeo(const RatVec& p, const PolytopeModel& model) {
  const FlagChain chain = barycentric_flag(p, model);
  RatVec out(model.n - 1, Rat(0));
  for (std::size_t k = 0; k < chain.faces.size(); ++k) {
    const RatVec b = cube_face_barycenter(chain.faces[k]);
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += chain.weights[k] * b[i];
  }
  return out;
}

RatVec snap_to_face(const std::vector<double>& p, const PolytopeModel& model,
                    double tol) {
  const std::size_t d = model.n - 1;
  if (p.size() != d) throw size_error("point length mismatch");
  RatVec p0;
  for (double v : p) p0.push_back(rat_from_double(v));
  std::vector<std::size_t> active;
  for (std::size_t idx = 0; idx < model.inequalities.size(); ++idx) {
    const double s = rat_to_double(slack(model, idx, p0));
    if (s < -tol) throw outside_error("point outside the polytope");
    if (std::abs(s) <= tol) active.push_back(idx);
  }
  if (active.empty()) {
    if (!is_feasible(model, p0)) throw outside_error("point outside");
    return p0;
  }
  // Orthogonal projection onto {A q = b}: q = p0 + A^T lam,
  // (A A^T) lam = b - A p0, solved exactly.
  const std::size_t m = active.size();
  ExactMatrix a(m, d);
  RatVec b(m);
  for (std::size_t r = 0; r < m; ++r) {
    const HalfSpace& h = model.inequalities[active[r]];
    for (std::size_t j = 0; j < d; ++j) a.at(r + 1, j + 1) = h.normal[j];
    b[r] = h.rhs;
  }
  const ExactMatrix at = a.transpose();
  const ExactMatrix gram = a * at;
  RatVec rhs(m);
  for (std::size_t r = 0; r < m; ++r) {
    Rat ap(0);
    for (std::size_t j = 0; j < d; ++j) ap += a.at(r + 1, j + 1) * p0[j];
    rhs[r] = b[r] - ap;
  }
  const auto lam = detail::solve_full_column_rank(gram, rhs);
  if (!lam) throw outside_error("degenerate active set while snapping");
  RatVec q = p0;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < m; ++r) q[j] += at.at(j + 1, r + 1) * (*lam)[r];
  if (!is_feasible(model, q))
    throw outside_error("snapped point infeasible; tolerance too coarse");
  return q;
}

bool cube_interior_member(const RatVec& x, const SubsetJ& K, const SubsetJ& J) {
  if (!K.subset_of(J)) throw label_error("cube face needs K inside J");
  for (std::size_t i = 1; i <= K.n - 1; ++i) {
    const Rat& v = x.at(i - 1);
    if (K.contains(i)) {
      if (v != 0) return false;
    } else if (!J.contains(i)) {
      if (v != 1) return false;
    } else if (v <= 0 || v >= 1) {
      return false;
    }
  }
  return true;
}

bool cube_interior_member(const std::vector<double>& x, const SubsetJ& K,
                          const SubsetJ& J, double tol) {
  if (!K.subset_of(J)) throw label_error("cube face needs K inside J");
  for (std::size_t i = 1; i <= K.n - 1; ++i) {
    const double v = x.at(i - 1);
    if (K.contains(i)) {
      if (std::abs(v) > tol) return false;
    } else if (!J.contains(i)) {
      if (std::abs(v - 1) > tol) return false;
    } else if (v <= tol || v >= 1 - tol) {
      return false;
    }
  }
  return true;
}

}  // namespace ptv
