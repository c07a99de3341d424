#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ptv/errors.hpp"
#include "ptv/peterson.hpp"

using namespace ptv;

namespace {

PetersonPoint make_point(std::size_t n, std::vector<std::size_t> j,
                         std::vector<RatVec> blocks) {
  PetersonPoint p;
  p.J = SubsetJ(n, std::move(j));
  const auto comps = connected_components(p.J);
  REQUIRE(comps.size() == blocks.size());
  for (std::size_t b = 0; b < comps.size(); ++b)
    p.blocks.push_back({comps[b].hi + 2 - comps[b].lo, std::move(blocks[b])});
  return p;
}

PetersonPoint random_point(std::size_t n, const SubsetJ& J,
                           std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  PetersonPoint p;
  p.J = J;
  for (const Interval& c : connected_components(J)) {
    ToeplitzParams tp;
    tp.size = c.hi + 2 - c.lo;
    for (std::size_t i = 0; i + 1 < tp.size; ++i) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      tp.params.push_back(v);
    }
    p.blocks.push_back(std::move(tp));
  }
  return p;
}

}  // namespace

TEST_CASE("toeplitz_matrix") {
  CHECK(toeplitz_matrix({3, {Rat(5), Rat(7)}}) ==
        ExactMatrix{{Rat(1), Rat(0), Rat(0)},
                    {Rat(5), Rat(1), Rat(0)},
                    {Rat(7), Rat(5), Rat(1)}});
  CHECK(toeplitz_matrix({1, {}}) == ExactMatrix{{Rat(1)}});
  CHECK(toeplitz_matrix({2, {Rat(4)}}) ==
        ExactMatrix{{Rat(1), Rat(0)}, {Rat(4), Rat(1)}});
}

TEST_CASE("flag_rep") {
  CHECK(flag_rep(make_point(3, {}, {})) == ExactMatrix::identity(3));
  const Rat a(5), b(3);
  CHECK(flag_rep(make_point(3, {1, 2}, {{a, b}})) ==
        ExactMatrix{{Rat(0), Rat(0), Rat(1)},
                    {Rat(0), Rat(-1), a},
                    {Rat(1), -a, b}});
  // two components assemble block-diagonally before the twist
  const PetersonPoint p = make_point(5, {1, 3, 4}, {{a}, {a, b}});
  CHECK(is_j_toeplitz(j_toeplitz_matrix(p), p.J));
  CHECK(flag_rep(p) == j_toeplitz_matrix(p) * wJ_rep(p.J));
}

TEST_CASE("peterson_membership") {
  CHECK(peterson_membership(ExactMatrix::identity(4)));
  CHECK(peterson_membership(w0_rep(4)));
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 5; ++n)
    for (const SubsetJ& J : all_subsets(n))
      CHECK(peterson_membership(flag_rep(random_point(n, J, rng))));
  // a generic unipotent flag is not in the Peterson variety
  const ExactMatrix g{{Rat(1), Rat(3), Rat(1)},
                      {Rat(0), Rat(1), Rat(1)},
                      {Rat(0), Rat(0), Rat(1)}};
  CHECK_FALSE(peterson_membership(g));
}

TEST_CASE("stratum_of") {
  const StratumYLabel a = stratum_of(make_point(3, {1, 2}, {{Rat(1), Rat(1)}}));
  CHECK(a.K == SubsetJ(3, {1}));
  const StratumYLabel b = stratum_of(make_point(3, {1, 2}, {{Rat(2), Rat(1)}}));
  CHECK(b.K == SubsetJ(3, {}));
  const StratumYLabel c =
      stratum_of(make_point(5, {1, 2, 4}, {{Rat(1), Rat(1)}, {Rat(3)}}));
  CHECK(c.K == SubsetJ(5, {1}));
  CHECK(c.J == SubsetJ(5, {1, 2, 4}));
}

TEST_CASE("is_tnn_point") {
  CHECK(is_tnn_point(make_point(3, {1, 2}, {{Rat(1), Rat(1)}})));
  CHECK_FALSE(is_tnn_point(make_point(3, {1, 2}, {{Rat(1), Rat(2)}})));
  CHECK(is_tnn_point(make_point(3, {}, {})));
}

TEST_CASE("psi") {
  const ToricPoint id = psi(make_point(4, {}, {}));
  CHECK(id.x == RatVec{1, 1, 1});
  CHECK(id.y == RatVec{0, 0, 0});
  const ToricPoint p = psi(make_point(3, {1, 2}, {{Rat(2), Rat(1)}}));
  CHECK(p.x == RatVec{3, 1});
  CHECK(p.y == RatVec{1, 1});
  const ToricPoint w0p = psi(make_point(3, {1, 2}, {{Rat(0), Rat(0)}}));
  CHECK(w0p.x == RatVec{0, 0});
  CHECK(w0p.y == RatVec{1, 1});
}

TEST_CASE("minor_map_forward") {
  const Rat a(4), b(9);
  CHECK(minor_map_forward(ToeplitzParams{3, {a, b}}) == RatVec{a * a - b, b});
  CHECK(minor_map_forward(ToeplitzParams{2, {a}}) == RatVec{a});
  CHECK(minor_map_forward(ToeplitzParams{4, {Rat(0), Rat(0), Rat(0)}}) ==
        RatVec{0, 0, 0});
  // the double overload agrees with the exact one
  const std::vector<double> fwd = minor_map_forward(std::vector<double>{4.0, 9.0});
  CHECK(fwd[0] == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(fwd[1] == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("minor_map_inverse") {
  const ToeplitzParams a = minor_map_inverse({3.0, 1.0}, 3);
  CHECK(rat_to_double(a.params[0]) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rat_to_double(a.params[1]) == doctest::Approx(1.0).epsilon(1e-10));
  const ToeplitzParams b = minor_map_inverse({5.0}, 2);
  CHECK(rat_to_double(b.params[0]) == doctest::Approx(5.0).epsilon(1e-12));
  const ToeplitzParams c = minor_map_inverse({0.0, 1.0}, 3);
  CHECK(rat_to_double(c.params[0]) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rat_to_double(c.params[1]) == doctest::Approx(1.0).epsilon(1e-10));
  const ToeplitzParams z = minor_map_inverse({0.0, 0.0, 0.0}, 4);
  for (const Rat& v : z.params) CHECK(v == 0);
  CHECK_THROWS_AS(minor_map_inverse({-1.0}, 2), domain_input_error);
}

TEST_CASE("minor map round trip on random targets") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> logu(std::log(0.1), std::log(10.0));
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t k = 2; k <= 5; ++k)
    for (int s = 0; s < 40; ++s) {
      std::vector<double> targets(k - 1);
      for (double& t : targets) t = zero(rng) == 0 ? 0.0 : std::exp(logu(rng));
      const ToeplitzParams tp = minor_map_inverse(targets, k);
      std::vector<double> params;
      for (const Rat& v : tp.params) params.push_back(rat_to_double(v));
      const std::vector<double> back = minor_map_forward(params);
      for (std::size_t i = 0; i < k - 1; ++i)
        CHECK(back[i] == doctest::Approx(targets[i]).epsilon(1e-9));
    }
}

TEST_CASE("sample_stratum") {
  const PetersonPoint e = sample_stratum(SubsetJ(4, {}), SubsetJ(4, {}), 1);
  CHECK(e.blocks.empty());
  const PetersonPoint full =
      sample_stratum(SubsetJ(3, {1, 2}), SubsetJ(3, {1, 2}), 1);
  REQUIRE(full.blocks.size() == 1);
  for (const Rat& v : full.blocks[0].params) CHECK(v == 0);
  std::mt19937_64 rng(43);
  for (std::size_t n = 2; n <= 5; ++n)
    for (const SubsetJ& J : all_subsets(n)) {
      unsigned long km = J.mask();
      for (;;) {
        const SubsetJ K = SubsetJ::from_mask(n, km);
        const PetersonPoint p = sample_stratum(K, J, rng());
        // solver residue on the zeroed minors can dip a hair below zero,
        // so nonnegativity is checked with a tolerance rather than exactly
        for (const ToeplitzParams& tp : p.blocks) {
          std::vector<double> ps;
          for (const Rat& v : tp.params) ps.push_back(rat_to_double(v));
          for (double pv : ps) CHECK(pv >= -1e-8);
          for (double mv : minor_map_forward(ps)) CHECK(mv >= -1e-8);
        }
        const RatVec d = delta_vector(flag_rep(p));
        for (std::size_t i = 1; i <= n - 1; ++i) {
          const double v = rat_to_double(d[i - 1]);
          if (K.contains(i))
            CHECK(std::abs(v) < 1e-8);
          else
            CHECK(v > 1e-3);
        }
        if (km == 0) break;
        km = (km - 1) & J.mask();
      }
    }
}

TEST_CASE("psi_inverse_nonneg") {
  const PetersonPoint id =
      psi_inverse_nonneg(ToricPoint::exact({1, 1}, {0, 0}));
  CHECK(id.J == SubsetJ(3, {}));
  const PetersonPoint p =
      psi_inverse_nonneg(ToricPoint::floating({3.0, 1.0}, {1.0, 1.0}));
  CHECK(p.J == SubsetJ(3, {1, 2}));
  REQUIRE(p.blocks.size() == 1);
  CHECK(rat_to_double(p.blocks[0].params[0]) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rat_to_double(p.blocks[0].params[1]) == doctest::Approx(1.0).epsilon(1e-10));
  const PetersonPoint w0p =
      psi_inverse_nonneg(ToricPoint::floating({0.0, 0.0}, {1.0, 1.0}));
  for (const Rat& v : w0p.blocks[0].params) CHECK(v == 0);
  CHECK_THROWS_AS(
      psi_inverse_nonneg(ToricPoint::floating({1.0, 1.0}, {0.5, 1.0})),
      domain_input_error);
}

TEST_CASE("psi round trip over all strata, n <= 4") {
  std::mt19937_64 rng(47);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const SubsetJ& J : all_subsets(n)) {
      unsigned long km = J.mask();
      for (;;) {
        const SubsetJ K = SubsetJ::from_mask(n, km);
        const PetersonPoint p = sample_stratum(K, J, rng());
        const ToricPoint img = psi(p);
        std::vector<double> x, y;
        for (const Rat& v : img.x) {
          double d = rat_to_double(v);
          if (std::abs(d) < 1e-9) d = 0.0;
          x.push_back(d);
        }
        for (const Rat& v : img.y) y.push_back(rat_to_double(v));
        const PetersonPoint back =
            psi_inverse_nonneg(ToricPoint::floating(x, y));
        REQUIRE(back.blocks.size() == p.blocks.size());
        for (std::size_t bidx = 0; bidx < p.blocks.size(); ++bidx)
          for (std::size_t i = 0; i < p.blocks[bidx].params.size(); ++i)
            CHECK(rat_to_double(back.blocks[bidx].params[i]) ==
                  doctest::Approx(rat_to_double(p.blocks[bidx].params[i]))
                      .epsilon(1e-7));
        if (km == 0) break;
        km = (km - 1) & J.mask();
      }
    }
}

TEST_CASE("q pattern and off-J normalization") {
  std::mt19937_64 rng(53);
  for (std::size_t n = 2; n <= 5; ++n)
    for (const SubsetJ& J : all_subsets(n))
      for (int s = 0; s < 5; ++s) {
        const ExactMatrix g = flag_rep(random_point(n, J, rng));
        const RatVec q = q_vector(g);
        const RatVec d = delta_vector(g);
        for (std::size_t i = 1; i <= n - 1; ++i) {
          CHECK(q[i - 1] == (J.contains(i) ? 1 : 0));
          if (!J.contains(i)) CHECK(d[i - 1] == 1);
        }
      }
}
