#include "doctest.h"
#include "spinsurf/errors.hpp"
#include "spinsurf/exact_arith.hpp"

using namespace spinsurf;
using boost::multiprecision::cpp_rational;

namespace {

// Classical Bernoulli numbers from sum_{j<=n} C(n+1, j) b_j = 0, b_0 = 1,
// using boost rationals directly.
std::vector<cpp_rational> classical_bernoulli(int max_n) {
  std::vector<cpp_rational> b(max_n + 1);
  b[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    cpp_rational sum = 0;
    BigInt binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      sum += cpp_rational(binom) * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = -sum / cpp_rational(n + 1);
  }
  return b;
}

Rational from_boost(const cpp_rational& r) {
  return Rational(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Bernoulli numbers match the classical recurrence") {
  const auto b = classical_bernoulli(60);
  for (int k = 1; k <= 30; ++k) {
    const Rational classical = from_boost(b[2 * k]);
    // Positive convention: B_k = (-1)^{k+1} b_{2k}.
    const Rational expected = k % 2 == 1 ? classical : -classical;
    REQUIRE(bernoulli(k) == expected);
    REQUIRE(bernoulli(k).sign() > 0);
  }
  CHECK(bernoulli(1) == Rational(BigInt(1), BigInt(6)));
  CHECK(bernoulli(2) == Rational(BigInt(1), BigInt(30)));
  CHECK(bernoulli(3) == Rational(BigInt(1), BigInt(42)));
  CHECK(bernoulli(6) == Rational(BigInt(691), BigInt(2730)));
  CHECK_THROWS_AS(bernoulli(0), Error);
}

TEST_CASE("Todd series times (1 - e^{-z})/z is 1") {
  const int n = 24;
  const ToddSeries td = todd_coefficients(n);
  REQUIRE(td.max_degree() == static_cast<std::size_t>(n));
  // (1 - e^{-z})/z = sum_j (-1)^j z^j / (j+1)!
  std::vector<Rational> f(n + 1);
  BigInt fact = 1;
  for (int j = 0; j <= n; ++j) {
    fact *= j + 1;
    f[j] = Rational(BigInt(j % 2 == 0 ? 1 : -1), fact);
  }
  for (int d = 0; d <= n; ++d) {
    Rational s;
    for (int j = 0; j <= d; ++j) s += td[j] * f[d - j];
    CHECK(s == Rational(d == 0 ? 1 : 0));
  }
  CHECK(td[1] == Rational(BigInt(1), BigInt(2)));
  CHECK(td[2] == Rational(BigInt(1), BigInt(12)));
}

TEST_CASE("von Staudt-Clausen") {
  const auto b = classical_bernoulli(60);
  for (int k = 1; k <= 30; ++k) {
    // den(b_{2k}) = product of primes p with (p-1) | 2k.
    BigInt primes = 1;
    for (std::int64_t p = 2; p <= 2 * k + 1; ++p) {
      if (is_prime(p) && (2 * k) % (p - 1) == 0) primes *= p;
    }
    CHECK(boost::multiprecision::denominator(b[2 * k]) == primes);

    // The prime-power product computes den(B_k/2k).
    const BigInt den = bernoulli_ratio_den(k);
    CHECK(den == from_boost(b[2 * k] / (2 * k)).den());
    CHECK(den % 2 == 0);
    CHECK(von_staudt_den(k) == den);
  }
  CHECK(von_staudt_den(1) == 12);
  CHECK(von_staudt_den(2) == 120);
  CHECK(von_staudt_den(6) == 32760);
  CHECK(von_staudt_findings(30).empty());
}

TEST_CASE("number-theory helpers") {
  CHECK(p_adic_valuation(48, 2) == 4);
  CHECK(p_adic_valuation(45, 3) == 2);
  CHECK(p_adic_valuation(7, 2) == 0);
  CHECK(primes_up_to(20) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("GRR coefficient carries the sign (-1)^{k+1}") {
  for (int k = 1; k <= 12; ++k) {
    const Rational expected = bernoulli_ratio(k) * Rational(k % 2 == 1 ? 1 : -1);
    CHECK(grr_odd_coefficient(k) == expected);
  }
}

TEST_CASE("divisibility table") {
  CHECK(divisor_oriented(1) == 12);
  CHECK(divisor_oriented(3) == 120);
  CHECK(divisor_oriented(2) == 2);
  for (int m = 1; m <= 10; ++m) {
    const DivisibilityBound b = divisor_spin(2 * m);
    CHECK(b.spin_divisor == BigInt(1) << (2 * m + 1));
    CHECK(b.spin_maximality == Maximality::kProvenMaximal);
  }
  CHECK(divisor_spin(1).spin_divisor == 48);
  CHECK(divisor_spin(3).spin_divisor == 1920);
  CHECK(divisor_spin(3).spin_formula == "2^4 * den(B_2/4)");
  CHECK(divisor_spin(3).spin_maximality == Maximality::kLowerBoundOnly);
  CHECK(maximality_name(Maximality::kLowerBoundOnly) == "lower_bound_only");
  for (int n = 1; n <= 30; ++n) {
    const DivisibilityBound b = divisor_spin(n);
    REQUIRE(b.spin_divisor % b.oriented_divisor == 0);
    BigInt q = b.spin_divisor / b.oriented_divisor;
    while (q % 2 == 0) q /= 2;
    CHECK(q == 1);
  }
  CHECK_THROWS_AS(divisor_oriented(0), Error);
}

TEST_CASE("rationals and Q/Z") {
  CHECK(Rational::parse("-6/8") == Rational(BigInt(-3), BigInt(4)));
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);

  const ModZ e(Rational(BigInt(-1), BigInt(12)));
  CHECK(e.residue() == Rational(BigInt(11), BigInt(12)));
  CHECK(e.alias() == Rational(BigInt(-1), BigInt(12)));
  CHECK(e.str() == "11/12 (alias -1/12)");
  CHECK(ModZ(Rational(BigInt(1), BigInt(2))).str() == "1/2");
  CHECK(modz_order(e, 24) == 12);
  CHECK(modz_order(ModZ(Rational(BigInt(1), BigInt(25))), 24) == std::nullopt);
  CHECK(modz_scale(e, 12) == ModZ());
  CHECK(e + ModZ(Rational(BigInt(1), BigInt(12))) == ModZ());
}
