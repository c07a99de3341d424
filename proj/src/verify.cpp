#include "ptv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ptv/detail/solve.hpp"
#include "ptv/errors.hpp"
#include "ptv/fan.hpp"
#include "ptv/json_io.hpp"
#include "ptv/linalg.hpp"
#include "ptv/peterson.hpp"
#include "ptv/polytope.hpp"
#include "ptv/toric.hpp"

namespace ptv {

using nlohmann::json;

void VerificationReport::add(CheckResult r) {
  switch (r.status) {
    case CheckStatus::Pass: ++passed; break;
    case CheckStatus::Fail: ++failed; break;
    case CheckStatus::Skipped: ++skipped; break;
  }
  results.push_back(std::move(r));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
  }
};

CheckResult make_result(const std::string& id, std::size_t n, bool pass,
                        const Timer& t, std::uint64_t seed = 0,
                        std::string witness = {},
                        std::optional<double> metric = {}) {
  CheckResult r;
  r.check_id = id;
  r.n = n;
  r.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  r.seed = seed;
  r.elapsed_ms = t.ms();
  r.witness = std::move(witness);
  r.metric = metric;
  return r;
}

Rat random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::string vec_to_str(const RatVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + rat_to_string(v[i]);
  return s + "]";
}

}  // namespace

std::vector<CheckResult> verify_fan(std::size_t n, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const FanSigma fan = enumerate_fan(n);

  {
    Timer t;
    std::size_t expect = 1;
    for (std::size_t i = 1; i <= n - 1; ++i) expect *= 3;
    out.push_back(make_result("fan.cone_count", n, fan.cones.size() == expect,
                              t, seed, "", double(fan.cones.size())));
  }
  {
    Timer t;
    bool ok = true;
    std::string witness;
    for (const ConeTau& c : fan.cones) {
      try {
        const std::size_t d = cone_dim(c);  // throws on rank deficiency
        const std::size_t expect =
            c.K.members.size() + (n - 1) - c.J.members.size();
        if (d != expect || d != c.generators.size()) {
          ok = false;
          witness = "K=" + std::to_string(c.K.mask()) +
                    " J=" + std::to_string(c.J.mask());
          break;
        }
      } catch (const std::logic_error& e) {
        ok = false;
        witness = e.what();
        break;
      }
    }
    out.push_back(make_result("fan.simplicial_dims", n, ok, t, seed, witness));
  }
  {
    // Face closure: dropping any generator subset lands on another cone label.
    Timer t;
    bool ok = true;
    for (const ConeTau& c : fan.cones) {
      const std::size_t g = c.generators.size();
      for (unsigned long keep = 0; keep < (1ul << g) && ok; ++keep) {
        std::vector<std::size_t> kk, jc;  // K' and complement of J'
        for (std::size_t idx = 0; idx < g; ++idx) {
          if (!(keep & (1ul << idx))) continue;
          const RayVector& r = c.generators[idx];
          if (r.kind == RayVector::Kind::NegCoroot)
            kk.push_back(r.index);
          else
            jc.push_back(r.index);
        }
        SubsetJ kp(n, kk);
        std::vector<std::size_t> jp;
        for (std::size_t i = 1; i <= n - 1; ++i)
          if (std::find(jc.begin(), jc.end(), i) == jc.end()) jp.push_back(i);
        SubsetJ jj(n, jp);
        if (!kp.subset_of(jj) || !kp.subset_of(c.K) || !c.J.subset_of(jj))
          ok = false;
        bool present = false;
        for (const ConeTau& c2 : fan.cones)
          if (c2.K == kp && c2.J == jj) {
            present = true;
            break;
          }
        if (!present) ok = false;
      }
      if (!ok) break;
    }
    out.push_back(make_result("fan.face_closure", n, ok, t, seed));
  }
  {
    // Completeness on seeded samples, with exact membership via the
    // precomputed inverse of each maximal generator matrix.
    Timer t;
    std::vector<ExactMatrix> inverses;
    std::vector<const ConeTau*> maximal;
    for (const ConeTau& c : fan.cones) {
      if (!c.is_maximal()) continue;
      ExactMatrix g(n - 1, n - 1);
      for (std::size_t j = 0; j < c.generators.size(); ++j)
        for (std::size_t i = 0; i < n - 1; ++i)
          g.at(i + 1, j + 1) = c.generators[j].coords[i];
      inverses.push_back(g.inverse());
      maximal.push_back(&c);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-100, 100);
    bool ok = true;
    std::string witness;
    std::size_t multi_interior_failures = 0;
    for (std::size_t s = 0; s < 10000 && ok; ++s) {
      RatVec v(n - 1);
      for (Rat& e : v) e = coord(rng);
      std::size_t covers = 0, boundary_covers = 0;
      for (std::size_t c = 0; c < inverses.size(); ++c) {
        bool nonneg = true;
        bool on_boundary = false;
        for (std::size_t i = 1; i <= n - 1; ++i) {
          Rat acc(0);
          for (std::size_t j = 1; j <= n - 1; ++j)
            acc += inverses[c].at(i, j) * v[j - 1];
          if (acc < 0) {
            nonneg = false;
            break;
          }
          if (acc == 0) on_boundary = true;
        }
        if (nonneg) {
          ++covers;
          if (on_boundary) ++boundary_covers;
        }
      }
      if (covers == 0) {
        ok = false;
        witness = vec_to_str(v);
      }
      // Interior disjointness: every cone of a multiple cover must see the
      // point on its own boundary (the shared face).
      if (covers > 1 && boundary_covers != covers) ++multi_interior_failures;
    }
    out.push_back(make_result("fan.completeness", n,
                              ok && multi_interior_failures == 0, t, seed,
                              witness, double(multi_interior_failures)));
  }
  {
    // Primitive collections: each pair {-alpha_i, e_i} spans no cone;
    // every generator set of a fan cone avoids such pairs by construction.
    Timer t;
    bool ok = primitive_collections(n).size() == n - 1;
    for (const ConeTau& c : fan.cones) {
      for (std::size_t i = 1; i <= n - 1 && ok; ++i) {
        bool has_coroot = c.K.contains(i);
        bool has_standard = !c.J.contains(i);
        if (has_coroot && has_standard) ok = false;
      }
    }
    out.push_back(make_result("fan.primitive_collections", n, ok, t, seed));
  }
  return out;
}

std::vector<CheckResult> verify_polytope(std::size_t n) {
  std::vector<CheckResult> out;
  PolytopeModel model;
  {
    Timer t;
    bool ok = true;
    std::string witness;
    try {
      model = h_representation(n);  // validates V/H agreement internally
    } catch (const std::logic_error& e) {
      ok = false;
      witness = e.what();
    }
    out.push_back(make_result("polytope.vh_agreement", n, ok, t, 0, witness));
    if (!ok) return out;
  }
  {
    // Facet-equality pattern lemma, exhaustive over subsets.
    Timer t;
    bool ok = true;
    for (const VertexVJ& v : model.vertices) {
      RatVec p;
      for (long c : v.coords) p.emplace_back(c);
      for (std::size_t i = 1; i <= n - 1; ++i) {
        const bool e_zero = slack(model, i - 1, p) == 0;
        const bool c_zero = slack(model, (n - 1) + (i - 1), p) == 0;
        if (e_zero != !v.J.contains(i)) ok = false;
        if (c_zero != v.J.contains(i)) ok = false;
      }
    }
    out.push_back(make_result("polytope.facet_pattern", n, ok, t));
  }
  {
    // Simplicity: every vertex on exactly n-1 facets.
    Timer t;
    bool ok = true;
    for (const VertexVJ& v : model.vertices) {
      RatVec p;
      for (long c : v.coords) p.emplace_back(c);
      std::size_t active = 0;
      for (std::size_t idx = 0; idx < model.inequalities.size(); ++idx)
        if (slack(model, idx, p) == 0) ++active;
      if (active != n - 1) ok = false;
    }
    out.push_back(make_result("polytope.simplicity", n, ok, t));
  }
  {
    // dim F_{K,J} = |J| - |K| via affine rank of the face vertices.
    Timer t;
    bool ok = true;
    for (const SubsetJ& J : all_subsets(n)) {
      const unsigned long jm = J.mask();
      unsigned long km = jm;
      for (;;) {
        const SubsetJ K = SubsetJ::from_mask(n, km);
        const auto verts = face_vertices(K, J);
        ExactMatrix diffs(verts.size() > 1 ? verts.size() - 1 : 1, n - 1);
        for (std::size_t r = 1; r < verts.size(); ++r)
          for (std::size_t i = 0; i < n - 1; ++i)
            diffs.at(r, i + 1) = verts[r].coords[i] - verts[0].coords[i];
        const std::size_t dim =
            verts.size() > 1 ? detail::rank(diffs) : 0;
        if (dim != J.members.size() - K.members.size()) ok = false;
        if (verts.size() != (1ul << (J.members.size() - K.members.size())))
          ok = false;
        if (km == 0) break;
        km = (km - 1) & jm;
      }
    }
    out.push_back(make_result("polytope.face_dimensions", n, ok, t));
  }
  {
    // Face poset isomorphic to the cube poset. Exhaustive through n = 5.
    Timer t;
    bool ok = true;
    struct Label {
      SubsetJ K, J;
    };
    std::vector<Label> labels;
    for (const SubsetJ& J : all_subsets(n)) {
      unsigned long km = J.mask();
      for (;;) {
        labels.push_back({SubsetJ::from_mask(n, km), J});
        if (km == 0) break;
        km = (km - 1) & J.mask();
      }
    }
    auto face_vertex_masks = [&](const Label& l) {
      std::set<unsigned long> s;
      for (const VertexVJ& v : face_vertices(l.K, l.J)) s.insert(v.J.mask());
      return s;
    };
    std::vector<std::set<unsigned long>> vsets;
    vsets.reserve(labels.size());
    for (const Label& l : labels) vsets.push_back(face_vertex_masks(l));
    std::mt19937_64 rng(7);
    const bool exhaustive = n <= 5;
    const std::size_t pair_samples = 4000;
    auto check_pair = [&](std::size_t a, std::size_t b) {
      const Label &la = labels[a], &lb = labels[b];
      const bool face_sub = std::includes(vsets[b].begin(), vsets[b].end(),
                                          vsets[a].begin(), vsets[a].end());
      const bool label_cond = lb.K.subset_of(la.K) && la.K.subset_of(la.J) &&
                              la.J.subset_of(lb.J);
      // cube containment E_{K,J} <= E_{K',J'}: same label condition by the
      // cube-face description, checked independently from the coordinate
      // patterns.
      bool cube_sub = true;
      for (std::size_t i = 1; i <= n - 1; ++i) {
        const bool a0 = la.K.contains(i), a1 = !la.J.contains(i);
        const bool b0 = lb.K.contains(i), b1 = !lb.J.contains(i);
        if (b0 && !a0) cube_sub = false;  // pinned to 0 outside must be pinned inside
        if (b1 && !a1) cube_sub = false;
      }
      return face_sub == label_cond && cube_sub == label_cond;
    };
    if (exhaustive) {
      for (std::size_t a = 0; a < labels.size() && ok; ++a)
        for (std::size_t b = 0; b < labels.size() && ok; ++b)
          if (!check_pair(a, b)) ok = false;
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
      for (std::size_t s = 0; s < pair_samples && ok; ++s)
        if (!check_pair(pick(rng), pick(rng))) ok = false;
    }
    out.push_back(make_result("polytope.cube_poset_iso", n, ok, t));
  }
  {
    // Normal-fan correspondence: a functional from the relative interior of
    // tau_{K,J} attains its vertex minimum exactly on face_vertices(K,J).
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(1, 5);
    const FanSigma fan = enumerate_fan(n);
    for (const ConeTau& c : fan.cones) {
      RatVec w(n - 1, Rat(0));
      for (const RayVector& g : c.generators) {
        const long a = coeff(rng);
        for (std::size_t i = 0; i < n - 1; ++i) w[i] += a * g.coords[i];
      }
      Rat best;
      bool first = true;
      std::vector<unsigned long> argmin;
      for (const VertexVJ& v : model.vertices) {
        Rat val(0);
        for (std::size_t i = 0; i < n - 1; ++i) val += w[i] * v.coords[i];
        if (first || val < best) {
          best = val;
          argmin.clear();
          first = false;
        }
        Rat diff = val - best;
        if (diff == 0) argmin.push_back(v.J.mask());
      }
      // recompute argmin cleanly (the incremental pass above can miss
      // earlier vertices when best improves late)
      argmin.clear();
      for (const VertexVJ& v : model.vertices) {
        Rat val(0);
        for (std::size_t i = 0; i < n - 1; ++i) val += w[i] * v.coords[i];
        if (val == best) argmin.push_back(v.J.mask());
      }
      std::set<unsigned long> expect;
      for (const VertexVJ& v : face_vertices(c.K, c.J)) expect.insert(v.J.mask());
      if (std::set<unsigned long>(argmin.begin(), argmin.end()) != expect)
        ok = false;
    }
    out.push_back(make_result("polytope.normal_fan_argmin", n, ok, t));
  }
  if (n == 3) {
    Timer t;
    std::set<std::vector<long>> vs;
    for (const VertexVJ& v : model.vertices) vs.insert(v.coords);
    const bool ok = vs == std::set<std::vector<long>>{
                              {0, 0}, {1, 0}, {0, 1}, {2, 2}};
    out.push_back(make_result("polytope.p2_vertices", n, ok, t));
  }
  if (n == 4) {
    Timer t;
    std::set<std::vector<long>> vs;
    for (const VertexVJ& v : model.vertices) vs.insert(v.coords);
    const bool ok = vs.count({3, 4, 3}) && vs.count({0, 2, 2}) &&
                    vs.count({2, 2, 0});
    out.push_back(make_result("polytope.p3_vertices", n, ok, t));
  }
  return out;
}

std::vector<CheckResult> verify_q_pattern(std::size_t n, std::size_t samples,
                                          std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer t;
  std::mt19937_64 rng(seed);
  bool ok = true;
  std::string witness;
  for (const SubsetJ& J : all_subsets(n)) {
    const auto comps = connected_components(J);
    for (std::size_t s = 0; s < samples && ok; ++s) {
      PetersonPoint p;
      p.J = J;
      for (const Interval& c : comps) {
        ToeplitzParams tp;
        tp.size = c.hi + 2 - c.lo;
        for (std::size_t i = 0; i + 1 < tp.size; ++i)
          tp.params.push_back(random_rational(rng));
        p.blocks.push_back(std::move(tp));
      }
      const ExactMatrix g = flag_rep(p);
      const RatVec q = q_vector(g);
      const RatVec d = delta_vector(g);
      for (std::size_t i = 1; i <= n - 1; ++i) {
        if (q[i - 1] != (J.contains(i) ? 1 : 0)) ok = false;
        if (!J.contains(i) && d[i - 1] != 1) ok = false;  // off-J normalization
      }
      if (!ok) witness = "J mask " + std::to_string(J.mask());
    }
  }
  out.push_back(make_result("peterson.q_pattern", n, ok, t, seed, witness));
  return out;
}

std::vector<CheckResult> verify_rietsch_param(std::size_t k_max,
                                              std::size_t samples,
                                              std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  for (std::size_t k = 2; k <= k_max; ++k) {
    Timer t;
    bool ok = true;
    double max_res = 0.0;
    std::string witness;
    // every zero pattern, cycling through them across the sample budget
    const std::size_t patterns = 1ul << (k - 1);
    for (std::size_t s = 0; s < samples && ok; ++s) {
      const std::size_t pat = s % patterns;
      std::vector<double> targets(k - 1);
      for (std::size_t i = 0; i < k - 1; ++i)
        targets[i] = (pat & (1ul << i)) ? 0.0 : std::exp(logu(rng));
      try {
        const ToeplitzParams tp = minor_map_inverse(targets, k);
        std::vector<double> params;
        for (const Rat& v : tp.params) params.push_back(rat_to_double(v));
        const std::vector<double> back = minor_map_forward(params);
        for (std::size_t i = 0; i < k - 1; ++i)
          max_res = std::max(max_res, std::abs(back[i] - targets[i]));
        if (max_res >= 1e-8) {
          ok = false;
          std::ostringstream os;
          os << "targets";
          for (double v : targets) os << " " << v;
          witness = os.str();
        }
      } catch (const solve_error& e) {
        ok = false;
        witness = e.what();
      }
    }
    out.push_back(make_result("rietsch.roundtrip_k" + std::to_string(k), k + 0,
                              ok, t, seed, witness, max_res));
  }
  // Analytic oracle agreement at k = 2, 3.
  {
    Timer t;
    bool ok = true;
    double max_err = 0.0;
    std::mt19937_64 rng2(seed ^ 0xabcdef);
    for (std::size_t s = 0; s < 200; ++s) {
      {
        const double d1 = std::exp(logu(rng2));
        const ToeplitzParams tp = minor_map_inverse({d1}, 2);
        max_err = std::max(max_err, std::abs(rat_to_double(tp.params[0]) - d1));
      }
      {
        const double d1 = (s % 4 == 0) ? 0.0 : std::exp(logu(rng2));
        const double d2 = (s % 8 < 2) ? 0.0 : std::exp(logu(rng2));
        const ToeplitzParams tp = minor_map_inverse({d1, d2}, 3);
        const double a = std::sqrt(d1 + d2), b = d2;
        max_err = std::max(max_err,
                           std::abs(rat_to_double(tp.params[0]) - a));
        max_err = std::max(max_err,
                           std::abs(rat_to_double(tp.params[1]) - b));
      }
    }
    ok = max_err < 1e-12;
    out.push_back(
        make_result("rietsch.analytic_oracle", 3, ok, t, seed, "", max_err));
  }
  return out;
}

std::vector<CheckResult> verify_psi_cells(std::size_t n,
                                          std::size_t samples_per_stratum,
                                          std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer t;
  bool ok = true;
  std::string witness;
  const double class_tol = 1e-6;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<SubsetJ, SubsetJ>> strata;
  for (const SubsetJ& J : all_subsets(n)) {
    unsigned long km = J.mask();
    for (;;) {
      strata.emplace_back(SubsetJ::from_mask(n, km), J);
      if (km == 0) break;
      km = (km - 1) & J.mask();
    }
  }
  // Stratum correspondence and the exact q-pattern on solver samples.
  for (const auto& [K, J] : strata) {
    for (std::size_t s = 0; s < samples_per_stratum && ok; ++s) {
      try {
        const PetersonPoint p = sample_stratum(K, J, rng());
        const ToricPoint img = psi(p);
        for (std::size_t i = 1; i <= n - 1; ++i) {
          const double xv = rat_to_double(img.x[i - 1]);
          if (xv < -1e-8) ok = false;  // nonnegative up to solver residual
          if (img.y[i - 1] != (J.contains(i) ? 1 : 0)) ok = false;
        }
        // classification with the solver-aware tolerance
        std::vector<double> xf, yf;
        for (const Rat& v : img.x) xf.push_back(rat_to_double(v));
        for (const Rat& v : img.y) yf.push_back(rat_to_double(v));
        const StratumLabel lab =
            stratum_of(ToricPoint::floating(xf, yf), class_tol);
        if (!(lab.K == K) || !(lab.J == J)) ok = false;
        if (!ok)
          witness = "K=" + std::to_string(K.mask()) +
                    " J=" + std::to_string(J.mask());
      } catch (const solve_error& e) {
        ok = false;
        witness = e.what();
      }
    }
    if (!ok) break;
  }
  out.push_back(
      make_result("psi.stratum_correspondence", n, ok, t, seed, witness));

  // Sampled injectivity within strata.
  {
    Timer t2;
    bool inj = true;
    double min_sep = 1e300;
    std::size_t pairs = 0;
    std::mt19937_64 rng2(seed ^ 0x5eed);
    while (pairs < 1000 && inj) {
      for (const auto& [K, J] : strata) {
        if (pairs >= 1000) break;
        if (J.members.size() == K.members.size()) continue;  // 0-dim stratum
        const PetersonPoint a = sample_stratum(K, J, rng2());
        const PetersonPoint b = sample_stratum(K, J, rng2());
        // skip coincident draws
        bool same = true;
        for (std::size_t blk = 0; blk < a.blocks.size() && same; ++blk)
          for (std::size_t i = 0; i < a.blocks[blk].params.size(); ++i)
            if (std::abs(rat_to_double(a.blocks[blk].params[i]) -
                         rat_to_double(b.blocks[blk].params[i])) > 1e-6)
              same = false;
        if (same) continue;
        const ToricPoint pa = psi(a), pb = psi(b);
        double sep = 0.0;
        for (std::size_t i = 0; i < pa.x.size(); ++i)
          sep = std::max(sep,
                         std::abs(rat_to_double(pa.x[i] - pb.x[i])));
        min_sep = std::min(min_sep, sep);
        if (sep <= 1e-8) inj = false;
        // quotient-level comparison on float copies (the exact images carry
        // solver residue of either sign on K)
        std::vector<double> ax, ay, bx, by;
        for (const Rat& v : pa.x) ax.push_back(rat_to_double(v));
        for (const Rat& v : pa.y) ay.push_back(rat_to_double(v));
        for (const Rat& v : pb.x) bx.push_back(rat_to_double(v));
        for (const Rat& v : pb.y) by.push_back(rat_to_double(v));
        if (points_equal(ToricPoint::floating(ax, ay),
                         ToricPoint::floating(bx, by), 1e-8))
          inj = false;
        ++pairs;
      }
    }
    out.push_back(make_result("psi.sampled_injectivity", n, inj, t2, seed, "",
                              min_sep));
  }
  return out;
}

std::vector<CheckResult> verify_homeomorphism(std::size_t n,
                                              std::size_t samples_per_stratum,
                                              std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer t;
  bool ok = true;
  std::string witness;
  const double pattern_tol = 1e-7, margin = 1e-6;
  const PolytopeModel model = h_representation(n);
  const MomentWeights mw = lattice_points(n);
  std::mt19937_64 rng(seed);
  std::vector<RatVec> images;
  std::vector<std::pair<std::size_t, std::size_t>> image_src;  // stratum, dim
  std::size_t stratum_counter = 0;
  // The moment map contracts double-exponentially in the canonical
  // coordinates, so wide samples would land within the interior margin of
  // the cube boundary; [1/2, 2] keeps the free image coordinates clear of it.
  std::uniform_real_distribution<double> logu(std::log(0.5), std::log(2.0));
  auto draw_sample = [&](const SubsetJ& K, const SubsetJ& J) {
    std::vector<double> xf(n - 1), yf(n - 1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
      yf[i - 1] = J.contains(i) ? 1.0 : 0.0;
      if (K.contains(i))
        xf[i - 1] = 0.0;
      else if (!J.contains(i))
        xf[i - 1] = 1.0;
      else
        xf[i - 1] = std::exp(logu(rng));
    }
    return psi_inverse_nonneg(ToricPoint::floating(xf, yf));
  };
  for (const SubsetJ& J : all_subsets(n)) {
    unsigned long km = J.mask();
    for (;;) {
      const SubsetJ K = SubsetJ::from_mask(n, km);
      for (std::size_t s = 0; s < samples_per_stratum && ok; ++s) {
        try {
          const PetersonPoint p = draw_sample(K, J);
          const ToricPoint img = psi(p);
          // zero-snap the solver residue on K before the moment map
          std::vector<double> xf, yf;
          for (const Rat& v : img.x) {
            double d = rat_to_double(v);
            if (std::abs(d) <= 1e-8) d = 0.0;
            xf.push_back(d);
          }
          for (const Rat& v : img.y) yf.push_back(rat_to_double(v));
          const std::vector<double> mu =
              moment_map(ToricPoint::floating(xf, yf), mw);
          const RatVec snapped = snap_to_face(mu, model, 1e-9);
          const RatVec phi = cube_homeo(snapped, model);
          std::vector<double> phif;
          for (const Rat& v : phi) phif.push_back(rat_to_double(v));
          for (std::size_t i = 1; i <= n - 1; ++i) {
            const double v = phif[i - 1];
            if (K.contains(i)) {
              if (std::abs(v) > pattern_tol) ok = false;
            } else if (!J.contains(i)) {
              if (std::abs(v - 1) > pattern_tol) ok = false;
            } else if (v <= margin || v >= 1 - margin) {
              ok = false;
            }
          }
          if (!cube_interior_member(phi, K, J)) ok = false;
          images.push_back(phi);
          image_src.emplace_back(stratum_counter,
                                 J.members.size() - K.members.size());
          if (!ok)
            witness = "K=" + std::to_string(K.mask()) +
                      " J=" + std::to_string(J.mask());
        } catch (const std::exception& e) {
          ok = false;
          witness = e.what();
        }
      }
      ++stratum_counter;
      if (km == 0) break;
      km = (km - 1) & J.mask();
    }
    if (!ok) break;
  }
  out.push_back(make_result("phi.cell_mapping", n, ok, t, seed, witness));

  {
    // Sampled injectivity of the composite on collected images.
    Timer t2;
    bool inj = true;
    std::size_t checked = 0;
    std::mt19937_64 rng2(seed ^ 0xfeed);
    if (images.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, images.size() - 1);
      while (checked < 1000) {
        const std::size_t a = pick(rng2), b = pick(rng2);
        if (a == b) continue;
        // a 0-dimensional stratum is a single point; its repeated samples
        // map to the same cube vertex by design
        if (image_src[a] == image_src[b] && image_src[a].second == 0) continue;
        if (images[a] == images[b]) inj = false;
        ++checked;
      }
    }
    out.push_back(make_result("phi.sampled_injectivity", n, inj, t2, seed));
  }

  if (n == 2) {
    // The interval picture: endpoints from the two 0-dimensional strata.
    Timer t3;
    bool ok2 = true;
    try {
      const PetersonPoint id_point{SubsetJ::empty(2), {}};
      const ToricPoint a = psi(id_point);
      const std::vector<double> mu_a =
          moment_map(ToricPoint::floating({1.0}, {0.0}), mw);
      const RatVec phi_a = cube_homeo(snap_to_face(mu_a, model, 1e-9), model);
      ok2 = ok2 && phi_a == RatVec{Rat(1)};
      const PetersonPoint w0_point{SubsetJ::full(2),
                                   {ToeplitzParams{2, {Rat(0)}}}};
      const ToricPoint b = psi(w0_point);
      ok2 = ok2 && b.x[0] == 0 && b.y[0] == 1;
      const std::vector<double> mu_b =
          moment_map(ToricPoint::floating({0.0}, {1.0}), mw);
      const RatVec phi_b = cube_homeo(snap_to_face(mu_b, model, 1e-9), model);
      ok2 = ok2 && phi_b == RatVec{Rat(0)};
      (void)a;
    } catch (const std::exception&) {
      ok2 = false;
    }
    out.push_back(make_result("phi.interval_endpoints", n, ok2, t3, seed));
  }
  return out;
}

std::vector<CheckResult> verify_tnn_engine(std::size_t samples,
                                           std::uint64_t seed) {
  std::vector<CheckResult> out;
  Timer t;
  std::mt19937_64 rng(seed);
  bool ok = true;
  const std::size_t n = 4;
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<std::size_t> index(1, n - 1);
  std::uniform_int_distribution<long> tval(0, 3);
  auto random_word = [&]() {
    ExactMatrix m = ExactMatrix::identity(n);
    std::uniform_int_distribution<int> len(1, 4);
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      const Rat tv(tval(rng));
      m = m * (kind(rng) ? chevalley_x(index(rng), tv, n)
                         : chevalley_y(index(rng), tv, n));
    }
    return m;
  };
  for (std::size_t s = 0; s < samples && ok; ++s) {
    const ExactMatrix a = random_word(), b = random_word();
    if (!is_totally_nonnegative(a) || !is_totally_nonnegative(b) ||
        !is_totally_nonnegative(a * b))
      ok = false;
  }
  out.push_back(make_result("tnn.closure_under_products", n, ok, t, seed));
  {
    Timer t2;
    bool ok2 = true;
    const ExactMatrix neg{{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}};
    if (is_totally_nonnegative(neg)) ok2 = false;
    const ExactMatrix negminor{{Rat(1), Rat(2)}, {Rat(3), Rat(1)}};
    if (is_totally_nonnegative(negminor)) ok2 = false;
    const ExactMatrix good{{Rat(7), Rat(2)}, {Rat(3), Rat(1)}};
    if (!is_totally_nonnegative(good)) ok2 = false;
    out.push_back(make_result("tnn.known_cases", 2, ok2, t2, seed));
  }
  return out;
}

VerificationReport run_all(const VerifyConfig& config) {
  VerificationReport rep;
  rep.version = "0.1.0";
  {
    std::ostringstream os;
    os << "n=" << config.n_min << ".." << config.n_max
       << " seed=" << config.seed << " samples=" << config.samples
       << " tol=" << config.tol;
    rep.config_echo = os.str();
  }
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    if (n <= 6) {
      for (auto& r : verify_fan(n, config.seed)) rep.add(std::move(r));
      for (auto& r : verify_polytope(n)) rep.add(std::move(r));
    } else {
      CheckResult r;
      r.check_id = "fan+polytope";
      r.n = n;
      r.status = CheckStatus::Skipped;
      rep.add(std::move(r));
    }
    if (n <= 6) {
      for (auto& r : verify_q_pattern(n, 50, config.seed))
        rep.add(std::move(r));
    }
    if (n <= 5) {
      for (auto& r : verify_psi_cells(n, config.samples, config.seed))
        rep.add(std::move(r));
    } else {
      CheckResult r;
      r.check_id = "psi.stratum_correspondence";
      r.n = n;
      r.status = CheckStatus::Skipped;
      rep.add(std::move(r));
    }
    if (n <= 4) {
      for (auto& r : verify_homeomorphism(n, config.samples, config.seed))
        rep.add(std::move(r));
    } else {
      CheckResult r;
      r.check_id = "phi.cell_mapping";
      r.n = n;
      r.status = CheckStatus::Skipped;
      rep.add(std::move(r));
    }
  }
  for (auto& r : verify_rietsch_param(5, 200, config.seed))
    rep.add(std::move(r));
  for (auto& r : verify_tnn_engine(1000, config.seed)) rep.add(std::move(r));
  return rep;
}

std::string check_result_to_json(const CheckResult& r) {
  json j;
  j["check_id"] = r.check_id;
  j["n"] = r.n;
  if (r.stratum) {
    j["K"] = subset_to_json(r.stratum->first);
    j["J"] = subset_to_json(r.stratum->second);
  }
  j["status"] = r.status == CheckStatus::Pass
                    ? "pass"
                    : (r.status == CheckStatus::Fail ? "fail" : "skipped");
  if (r.metric) j["metric"] = *r.metric;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j.dump();
}

std::string report_to_json_lines(const VerificationReport& rep) {
  std::ostringstream os;
  for (const CheckResult& r : rep.results) os << check_result_to_json(r) << "\n";
  json summary;
  summary["summary"] = {{"version", rep.version},
                        {"config", rep.config_echo},
                        {"passed", rep.passed},
                        {"failed", rep.failed},
                        {"skipped", rep.skipped}};
  os << summary.dump() << "\n";
  return os.str();
}

}  // namespace ptv
