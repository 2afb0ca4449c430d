#include <set>

#include "doctest.h"
#include "spinsurf/errors.hpp"
#include "spinsurf/icosa_group.hpp"

using namespace spinsurf;

TEST_CASE("SL2(F5) has 120 elements and is closed") {
  const auto& g = enumerate_group();
  REQUIRE(g.size() == 120);
  const std::set<Mat2F5> elements(g.begin(), g.end());
  CHECK(elements.size() == 120);
  for (const Mat2F5& x : g) {
    CHECK(elements.count(x.inverse()) == 1);
    CHECK(x * x.inverse() == Mat2F5::identity());
    for (const Mat2F5& y : g) REQUIRE(elements.count(x * y) == 1);
  }
  CHECK_THROWS_AS(Mat2F5(1, 1, 1, 1), Error);
}

TEST_CASE("structure") {
  const auto center = group_center();
  REQUIRE(center.size() == 2);
  CHECK(center[0] != center[1]);
  for (const Mat2F5& z : center) CHECK((z == Mat2F5::identity() || z == Mat2F5::minus_identity()));
  CHECK(verify_perfect());
  CHECK(quotient_order() == 60);
  const std::map<int, int> expected{{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 24}, {6, 20}, {10, 24}};
  CHECK(element_order_census() == expected);
  // A proper cyclic subgroup is abelian, hence not perfect.
  const auto c = cyclic_subgroup(Mat2F5(1, 1, 0, 1));
  CHECK(c.size() == 5);
  CHECK_FALSE(verify_perfect(c));
}

TEST_CASE("presentation triple") {
  const PresentationTriple t = find_presentation_triple();
  CHECK(presentation_relations_hold(t));
  CHECK(t.x1.order() == 4);
  CHECK(t.x2.order() == 6);
  CHECK(t.x3.order() == 10);
  CHECK(t.x1 * t.x2 * t.x3 == Mat2F5::identity());
  CHECK(t.x1.pow(2) == Mat2F5::minus_identity());
  CHECK(t.x2.pow(-3) == Mat2F5::minus_identity());
  CHECK(t.x3.pow(-5) == Mat2F5::minus_identity());
  PresentationTriple broken = t;
  broken.x3 = t.x2;
  CHECK_FALSE(presentation_relations_hold(broken));
}

TEST_CASE("restriction of twice the regular representation of A5") {
  // The regular character of G/center is |G/center| at 1 and 0 elsewhere,
  // so on a cyclic subgroup of order m it is 120/m copies of the regular one.
  for (int m : {2, 3, 5}) {
    const RestrictionProfile p = regular_restriction_profile(m);
    CHECK(p.dimension == 120);
    CHECK(p.copies == 120 / m);
    REQUIRE(p.character.size() == static_cast<std::size_t>(m));
    CHECK(p.character[0] == 120);
    for (int k = 1; k < m; ++k) CHECK(p.character[k] == 0);
    CHECK(p.multiplicities == std::vector<int>(m, 120 / m));
  }
  CHECK_THROWS_AS(regular_restriction_profile(4), Error);
}
