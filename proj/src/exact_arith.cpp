#include "spinsurf/exact_arith.hpp"

#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

void require_positive(int k, const char* what) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, std::string(what) + " must be positive");
}

}  // namespace

ToddSeries todd_coefficients(int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::kInvalidArgument, "max_degree must be nonnegative");
  // (1 - e^{-z})/z = sum_k (-1)^k z^k / (k+1)!
  std::vector<Rational> f(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    f[k] = Rational(BigInt(k % 2 == 0 ? 1 : -1), factorial(k + 1));
  }
  std::vector<Rational> c(max_degree + 1);
  c[0] = 1;
  for (int n = 1; n <= max_degree; ++n) {
    Rational acc;
    for (int k = 1; k <= n; ++k) acc += f[k] * c[n - k];
    c[n] = -acc;
  }
  return ToddSeries{std::move(c)};
}

Rational bernoulli(int k) {
  require_positive(k, "Bernoulli index");
  const ToddSeries td = todd_coefficients(2 * k);
  Rational b = td[2 * k] * Rational(factorial(2 * k));
  if (k % 2 == 0) b = -b;
  if (b.sign() <= 0) throw Error(ErrorKind::kInternalInvariant, "Bernoulli number not positive");
  return b;
}

Rational bernoulli_ratio(int k) { return bernoulli(k) / Rational(2 * k); }

BigInt bernoulli_ratio_den(int k) { return bernoulli_ratio(k).den(); }

std::int64_t p_adic_valuation(std::int64_t value, std::int64_t p) {
  if (value == 0 || p < 2) throw Error(ErrorKind::kInvalidArgument, "valuation needs value != 0, p >= 2");
  std::int64_t v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

BigInt von_staudt_den(int k) {
  require_positive(k, "von Staudt index");
  const std::int64_t two_k = 2 * static_cast<std::int64_t>(k);
  BigInt product = 1;
  for (std::int64_t p : primes_up_to(two_k + 1)) {
    if (two_k % (p - 1) != 0) continue;
    const std::int64_t e = 1 + (two_k % p == 0 ? p_adic_valuation(two_k, p) : 0);
    for (std::int64_t i = 0; i < e; ++i) product *= p;
  }
  return product;
}

std::vector<VonStaudtFinding> von_staudt_findings(int max_k) {
  std::vector<VonStaudtFinding> findings;
  for (int k = 1; k <= max_k; ++k) {
    BigInt formula = von_staudt_den(k);
    BigInt exact = bernoulli_ratio_den(k);
    if (formula != exact) findings.push_back({k, std::move(formula), std::move(exact)});
  }
  return findings;
}

Rational grr_odd_coefficient(int k) {
  require_positive(k, "GRR index");
  const ToddSeries td = todd_coefficients(2 * k);
  return td[2 * k] * Rational(factorial(2 * k - 1));
}

BigInt divisor_oriented(int n) {
  require_positive(n, "MMM index");
  if (n % 2 == 0) return 2;
  return bernoulli_ratio_den((n + 1) / 2);
}

std::string maximality_name(Maximality m) {
  return m == Maximality::kProvenMaximal ? "proven_maximal" : "lower_bound_only";
}

DivisibilityBound divisor_spin(int n) {
  require_positive(n, "MMM index");
  DivisibilityBound bound;
  bound.index = n;
  bound.oriented_divisor = divisor_oriented(n);
  if (n % 2 == 0) {
    const int m = n / 2;
    bound.spin_divisor = pow2(2 * m + 1);
    bound.spin_maximality = Maximality::kProvenMaximal;
    bound.spin_formula = "2^" + std::to_string(2 * m + 1);
  } else {
    const int m = (n + 1) / 2;
    bound.spin_divisor = pow2(2 * m) * bound.oriented_divisor;
    bound.spin_maximality = Maximality::kLowerBoundOnly;
    bound.spin_formula = "2^" + std::to_string(2 * m) + " * den(B_" + std::to_string(m) + "/" +
                         std::to_string(2 * m) + ")";
  }
  if (bound.spin_divisor % bound.oriented_divisor != 0) {
    throw Error(ErrorKind::kInternalInvariant, "oriented divisor does not divide spin divisor");
  }
  return bound;
}

}  // namespace spinsurf
