#include "doctest.h"
#include "spinsurf/char_classes.hpp"
#include "spinsurf/errors.hpp"

using namespace spinsurf;

namespace {

BigInt ipow(const BigInt& x, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// h^0 of a degree-d line bundle for the cases that occur for powers of the
// canonical bundle, read off degrees alone.
std::int64_t oracle_h0(int g, int m) {
  if (m == 0) return 1;
  if (g == 0) {
    const std::int64_t d = -2 * std::int64_t{m};
    return d >= 0 ? d + 1 : 0;
  }
  if (g == 1) return 1;  // K is trivial
  if (m < 0) return 0;
  if (m == 1) return g;
  return (2 * std::int64_t{m} - 1) * (g - 1);
}

}  // namespace

TEST_CASE("sphere kappa: recursion equals closed form") {
  for (int n = 0; n <= 40; ++n) REQUIRE(sphere_kappa(n) == sphere_kappa_closed(n));
  CHECK(sphere_kappa(0).str() == "2");
  CHECK(sphere_kappa(1).is_zero());
  CHECK(sphere_kappa(4).str() == "2*p1^2");
  CHECK_THROWS_AS(sphere_kappa(-1), Error);
}

TEST_CASE("projective bundles and HP^infinity") {
  CHECK(proj_bundle_kappa(2).str() == "2*c1^2 - 8*c2");
  CHECK(proj_bundle_kappa(3).is_zero());
  for (int n = 0; n <= 20; ++n) {
    // c1 = 0, c2 = u
    const IntPolynomial restricted = proj_bundle_kappa(n).substitute(
        {"u"}, {{"c1", IntPolynomial({"u"})}, {"c2", IntPolynomial::generator({"u"}, "u")}});
    CHECK(restricted == hp_infinity_kappa(n));
    if (n % 2 == 0) {
      const int m = n / 2;
      const BigInt c = (m % 2 == 0 ? 1 : -1) * (BigInt(1) << (2 * m + 1));
      CHECK(hp_infinity_kappa(n) == IntPolynomial::monomial({"u"}, "u", m, c));
    }
  }
  // Evaluation oracle: kappa_{2k} = 2 (c1^2 - 4 c2)^k.
  for (int c1 = -3; c1 <= 3; ++c1) {
    for (int c2 = -3; c2 <= 3; ++c2) {
      for (int k = 0; k <= 6; ++k) {
        CHECK(proj_bundle_kappa(2 * k).evaluate({c1, c2}) == 2 * ipow(BigInt(c1 * c1 - 4 * c2), k));
      }
    }
  }
}

TEST_CASE("lambda_n are power sums of the Chern roots") {
  // Roots x1, x2, -x1-x2: c2 = e2, c3 = e3, p_n = x1^n + x2^n + x3^n.
  for (int x1 = -4; x1 <= 4; ++x1) {
    for (int x2 = -4; x2 <= 4; ++x2) {
      const int x3 = -x1 - x2;
      const BigInt e2 = x1 * x2 + x1 * x3 + x2 * x3;
      const BigInt e3 = x1 * x2 * x3;
      for (int n = 1; n <= 16; ++n) {
        const BigInt p = ipow(x1, n) + ipow(x2, n) + ipow(x3, n);
        REQUIRE(sphere_lambda_integral(n).evaluate({e2, e3}) == p);
      }
    }
  }
  CHECK(sphere_lambda_integral(0).str() == "2");
  CHECK(sphere_lambda_integral(2).str() == "-2*c2");
  CHECK(sphere_lambda_integral(3).str() == "3*c3");
}

TEST_CASE("lambda and kappa in Z[c2,c3]/(2 c3)") {
  for (int n : {0, 1, 2, 4}) CHECK(lambda_kappa_difference(n).is_zero());
  CHECK_FALSE(lambda_kappa_difference(3).is_zero());
  for (int n = 0; n <= 40; ++n) {
    const QuotientedPolynomial d = lambda_kappa_difference(n);
    REQUIRE((BigInt(2) * d).is_zero());
    REQUIRE(d == sphere_lambda(n) - sphere_kappa_in_quotient(n));
  }
  // Coefficients on c3-monomials live in {0, 1}.
  const QuotientedPolynomial q(IntPolynomial::monomial(QuotientedPolynomial::generators(), "c3", 1, 3));
  CHECK(q.str() == "c3");
}

TEST_CASE("torus bundles") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(torus_kappa(n) == 0);
    const BigInt c = (n % 2 == 0 ? 1 : -1) * (1 - (BigInt(1) << n));
    CHECK(torus_lambda(n) == IntPolynomial::monomial({"u"}, "u", n, c));
  }
  CHECK(torus_lambda(1).str() == "u");
  CHECK(torus_lambda(2).str() == "-3*u^2");
  CHECK_THROWS_AS(torus_lambda(0), Error);
}

TEST_CASE("Riemann-Roch table") {
  for (int g = 0; g <= 10; ++g) {
    for (int m = -10; m <= 10; ++m) {
      const RiemannRochDim d = riemann_roch_dim(g, m);
      REQUIRE(d.dimension == oracle_h0(g, m));
      REQUIRE(serre_duality_check(g, m));
    }
  }
  CHECK(riemann_roch_dim(3, 1).dimension == 3);
  CHECK(riemann_roch_dim(4, 2).dimension == 9);
  CHECK(riemann_roch_dim(0, -2).dimension == 5);
  CHECK(riemann_roch_rows_consistent());
  CHECK_THROWS_AS(riemann_roch_dim(-1, 0), Error);
}

TEST_CASE("polynomial arithmetic") {
  const std::vector<std::string> gens{"x", "y"};
  const IntPolynomial x = IntPolynomial::generator(gens, "x");
  const IntPolynomial y = IntPolynomial::generator(gens, "y");
  const IntPolynomial p = (x + y).pow(3);
  CHECK(p.coefficient({2, 1}) == 3);
  CHECK(p.evaluate({2, 5}) == 343);
  CHECK((p - p).is_zero());
  CHECK((x * y - y * x).is_zero());
  CHECK((x - y).str() == "x - y");
  CHECK_THROWS_AS(x + IntPolynomial::generator({"u"}, "u"), Error);
}
