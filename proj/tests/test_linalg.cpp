#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ptv/linalg.hpp"
#include "ptv/weyl.hpp"

using namespace ptv;

namespace {

ExactMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Rat v(num(rng), den(rng));
      v.canonicalize();
      m.at(i, j) = v;
    }
  return m;
}

ExactMatrix random_upper_unipotent(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) m.at(i, j) = num(rng);
  return m;
}

ExactMatrix random_lower_triangular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> diag(1, 5);
  ExactMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    m.at(i, i) = diag(rng);
    for (std::size_t j = 1; j < i; ++j) m.at(i, j) = num(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("minor_det") {
  CHECK(minor_det(ExactMatrix::identity(3), {{2, 3}, {2, 3}}) == 1);
  const ExactMatrix m{{Rat(7), Rat(2)}, {Rat(3), Rat(1)}};
  CHECK(minor_det(m, {{1, 2}, {1, 2}}) == 1);
  std::mt19937_64 rng(1);
  const ExactMatrix g = random_matrix(4, rng);
  CHECK(minor_det(g, {{4}, {4}}) == g.at(4, 4));
  CHECK_THROWS_AS(minor_det(m, {{1, 3}, {1, 2}}), index_error);
  CHECK_THROWS_AS(minor_det(m, {{2, 1}, {1, 2}}), index_error);
}

TEST_CASE("delta_vector") {
  const RatVec id_delta = delta_vector(ExactMatrix::identity(4));
  CHECK(id_delta == RatVec{1, 1, 1});
  // (0 0 1; 0 -1 a; 1 -a b) has Delta = (a^2 - b, b)
  const Rat a(3), b(2);
  const ExactMatrix m{{Rat(0), Rat(0), Rat(1)},
                      {Rat(0), Rat(-1), a},
                      {Rat(1), -a, b}};
  CHECK(delta_vector(m) == RatVec{a * a - b, b});
  CHECK(delta_vector(w0_rep(3)) == RatVec{0, 0});
  CHECK_THROWS_AS(delta_vector(ExactMatrix(1, 1)), size_error);
}

TEST_CASE("lower_left_minors") {
  CHECK(lower_left_minors(ExactMatrix::identity(3)) == RatVec{0, 0});
  const Rat a(5), b(7);
  const ExactMatrix x{{Rat(1), Rat(0), Rat(0)},
                      {a, Rat(1), Rat(0)},
                      {b, a, Rat(1)}};
  CHECK(lower_left_minors(x) == RatVec{a * a - b, b});
  const ExactMatrix x2{{Rat(1), Rat(0)}, {a, Rat(1)}};
  CHECK(lower_left_minors(x2) == RatVec{a});
}

TEST_CASE("lower_left_minors agrees with delta of M * w0") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int s = 0; s < 10; ++s) {
      const ExactMatrix m = random_matrix(n, rng);
      CHECK(lower_left_minors(m) == delta_vector(m * w0_rep(n)));
    }
}

TEST_CASE("ad_f") {
  const ExactMatrix f = regular_nilpotent(3);
  CHECK(ad_f(ExactMatrix::identity(3)) == f);
  const ExactMatrix conj = ad_f(w0_rep(3));
  CHECK(conj.at(1, 2) == -1);
  CHECK(conj.at(2, 3) == -1);
  CHECK(conj.at(1, 3) == 0);
  const Rat t(3);
  const ExactMatrix d{{t, Rat(0)}, {Rat(0), Rat(1) / t}};
  const ExactMatrix c2 = ad_f(d);
  CHECK(c2.at(2, 1) == t * t);
  CHECK(c2.at(1, 2) == 0);
  ExactMatrix sing(3, 3);
  CHECK_THROWS_AS(ad_f(sing), singular_error);
}

TEST_CASE("q_vector") {
  CHECK(q_vector(ExactMatrix::identity(4)) == RatVec{0, 0, 0});
  CHECK(q_vector(w0_rep(3)) == RatVec{1, 1});
}

TEST_CASE("is_totally_nonnegative") {
  CHECK(is_totally_nonnegative(ExactMatrix::identity(5)));
  CHECK_FALSE(is_totally_nonnegative(
      ExactMatrix{{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}}));
  // x_1(2) y_1(3)
  CHECK(is_totally_nonnegative(ExactMatrix{{Rat(7), Rat(2)}, {Rat(3), Rat(1)}}));
  CHECK_THROWS_AS(is_totally_nonnegative(ExactMatrix::identity(9)), size_error);
  CHECK(is_totally_nonnegative(ExactMatrix::identity(9), 8, true));
}

TEST_CASE("unipotent predicates") {
  CHECK(is_unipotent_lower(ExactMatrix::identity(3)));
  CHECK(is_unipotent_upper(ExactMatrix::identity(3)));
  const ExactMatrix l{{Rat(1), Rat(0)}, {Rat(5), Rat(1)}};
  CHECK(is_unipotent_lower(l));
  CHECK_FALSE(is_unipotent_upper(l));
  const ExactMatrix d{{Rat(2), Rat(0)}, {Rat(0), Rat(1, 2)}};
  CHECK_FALSE(is_unipotent_lower(d));
  CHECK_FALSE(is_unipotent_upper(d));
}

TEST_CASE("delta is invariant under left multiplication by U^+") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int s = 0; s < 10; ++s) {
      const ExactMatrix u = random_upper_unipotent(n, rng);
      const ExactMatrix b = random_lower_triangular(n, rng);
      CHECK(delta_vector(u * b) == delta_vector(b));
    }
}

TEST_CASE("delta scales with right lower-triangular factors") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int s = 0; s < 10; ++s) {
      const ExactMatrix g = random_matrix(n, rng);
      const ExactMatrix b = random_lower_triangular(n, rng);
      const RatVec dg = delta_vector(g), dgb = delta_vector(g * b);
      for (std::size_t i = 1; i <= n - 1; ++i) {
        Rat tail(1);
        for (std::size_t j = i + 1; j <= n; ++j) tail *= b.at(j, j);
        CHECK(dgb[i - 1] == dg[i - 1] * tail);
      }
    }
}

TEST_CASE("q scales by the inverse simple root of a right factor") {
  std::mt19937_64 rng(17);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int s = 0; s < 10; ++s) {
      // g with gB^- in the Peterson variety and nonzero q: representatives
      // of w0 B^- (a lower-triangular g would give identically zero q).
      const ExactMatrix g = w0_rep(n) * random_lower_triangular(n, rng);
      if (g.det() == 0) continue;
      const ExactMatrix b = random_lower_triangular(n, rng);
      const RatVec qg = q_vector(g), qgb = q_vector(g * b);
      for (std::size_t i = 1; i <= n - 1; ++i) {
        const Rat alpha = b.at(i, i) / b.at(i + 1, i + 1);
        CHECK(qgb[i - 1] == qg[i - 1] / alpha);
      }
    }
}

TEST_CASE("tnn closure under products") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> tval(0, 4);
  std::uniform_int_distribution<std::size_t> idx(1, 3);
  std::uniform_int_distribution<int> kind(0, 1);
  auto word = [&]() {
    ExactMatrix m = ExactMatrix::identity(4);
    for (int i = 0; i < 4; ++i) {
      const Rat t(tval(rng));
      m = m * (kind(rng) ? chevalley_x(idx(rng), t, 4)
                         : chevalley_y(idx(rng), t, 4));
    }
    return m;
  };
  for (int s = 0; s < 50; ++s) {
    const ExactMatrix a = word(), b = word();
    REQUIRE(is_totally_nonnegative(a));
    REQUIRE(is_totally_nonnegative(b));
    CHECK(is_totally_nonnegative(a * b));
  }
}
