#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ptv/errors.hpp"
#include "ptv/fan.hpp"

using namespace ptv;

TEST_CASE("ray vectors") {
  CHECK(RayVector::standard(2, 4).coords == RatVec{0, 1, 0});
  CHECK(RayVector::neg_coroot(2, 4).coords == RatVec{1, -2, 1});
  CHECK(RayVector::neg_coroot(1, 4).coords == RatVec{-2, 1, 0});
  CHECK(RayVector::neg_coroot(3, 4).coords == RatVec{0, 1, -2});
  // n=2 keeps the non-primitive ray -2 e_1 as-is
  CHECK(RayVector::neg_coroot(1, 2).coords == RatVec{-2});
}

TEST_CASE("build_cone") {
  const ConeTau c = build_cone(SubsetJ(3, {}), SubsetJ(3, {}));
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0].coords == RatVec{1, 0});
  CHECK(c.generators[1].coords == RatVec{0, 1});

  const ConeTau c2 = build_cone(SubsetJ(3, {1}), SubsetJ(3, {1}));
  REQUIRE(c2.generators.size() == 2);
  CHECK(c2.generators[0].coords == RatVec{-2, 1});
  CHECK(c2.generators[1].coords == RatVec{0, 1});

  const ConeTau zero = build_cone(SubsetJ(3, {}), SubsetJ(3, {1, 2}));
  CHECK(zero.generators.empty());

  CHECK_THROWS_AS(build_cone(SubsetJ(3, {1}), SubsetJ(3, {2})), label_error);
}

TEST_CASE("enumerate_fan counts") {
  CHECK(enumerate_fan(2).cones.size() == 3);
  CHECK(enumerate_fan(3).cones.size() == 9);
  CHECK(enumerate_fan(4).cones.size() == 27);
}

TEST_CASE("cone_dim") {
  CHECK(cone_dim(build_cone(SubsetJ(4, {}), SubsetJ(4, {1, 2, 3}))) == 0);
  CHECK(cone_dim(build_cone(SubsetJ(3, {1}), SubsetJ(3, {1}))) == 2);
  CHECK(cone_dim(build_cone(SubsetJ(3, {}), SubsetJ(3, {1}))) == 1);
}

TEST_CASE("simpliciality, exhaustive n <= 6") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const ConeTau& c : enumerate_fan(n).cones)
      CHECK(cone_dim(c) == c.generators.size());
}

TEST_CASE("cone_contains") {
  const ConeTau quad = build_cone(SubsetJ(3, {}), SubsetJ(3, {}));
  CHECK(cone_contains(quad, RatVec{1, 1}));
  CHECK_FALSE(cone_contains(quad, RatVec{-1, -1}));
  const ConeTau c = build_cone(SubsetJ(3, {1}), SubsetJ(3, {1}));
  CHECK(cone_contains(c, RatVec{-2, 1}));
  // a lower-dimensional cone requires exact span membership
  const ConeTau ray = build_cone(SubsetJ(3, {}), SubsetJ(3, {2}));
  CHECK(cone_contains(ray, RatVec{3, 0}));
  CHECK_FALSE(cone_contains(ray, RatVec{3, 1}));
  CHECK_FALSE(cone_contains(ray, RatVec{-3, 0}));
  const ConeTau zero = build_cone(SubsetJ(3, {}), SubsetJ(3, {1, 2}));
  CHECK(cone_contains(zero, RatVec{0, 0}));
  CHECK_FALSE(cone_contains(zero, RatVec{1, 0}));
}

TEST_CASE("locate") {
  const FanSigma fan = enumerate_fan(3);
  const auto at = [&](const RatVec& v) {
    std::vector<std::pair<unsigned long, unsigned long>> labels;
    for (const ConeTau* c : locate(v, fan))
      labels.emplace_back(c->K.mask(), c->J.mask());
    return labels;
  };
  using Labels = std::vector<std::pair<unsigned long, unsigned long>>;
  const bool first_quadrant = at(RatVec{1, 1}) == Labels{{0, 0}};
  CHECK(first_quadrant);
  CHECK(at(RatVec{0, 0}).size() == 4);  // apex shared by all maximal cones
  const bool opposite = at(RatVec{-1, -1}) == Labels{{3, 3}};
  CHECK(opposite);
}

TEST_CASE("primitive collections") {
  const auto pairs = primitive_collections(3);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].first.coords == RatVec{-2, 1});
  CHECK(pairs[0].second.coords == RatVec{1, 0});
  CHECK(primitive_collections(2).size() == 1);
  // no cone of the fan uses both rays of a primitive collection
  for (std::size_t n = 2; n <= 5; ++n)
    for (const ConeTau& c : enumerate_fan(n).cones)
      for (std::size_t i = 1; i <= n - 1; ++i) {
        const bool uses_both = c.K.contains(i) && !c.J.contains(i);
        CHECK_FALSE(uses_both);
      }
}
