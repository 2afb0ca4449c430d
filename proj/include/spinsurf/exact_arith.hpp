#pragma once

// Todd series, Bernoulli numbers, von Staudt-Clausen denominators and the
// divisibility bounds for MMM-classes of (spin) surface bundles.

#include <cstdint>
#include <string>
#include <vector>

#include "spinsurf/rational.hpp"

namespace spinsurf {

/// Coefficients of z/(1 - e^{-z}); coefficients[k] multiplies z^k.
struct ToddSeries {
  std::vector<Rational> coefficients;

  const Rational& operator[](std::size_t k) const { return coefficients.at(k); }
  std::size_t max_degree() const { return coefficients.size() - 1; }
};

/// Exact power-series inversion of (1 - e^{-z})/z through z^max_degree.
ToddSeries todd_coefficients(int max_degree);

/// Positive Bernoulli number B_k = (-1)^{k+1} (2k)! [z^{2k}] td(z), k >= 1.
/// B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
Rational bernoulli(int k);

/// B_k / 2k, the ratio whose denominator bounds the odd MMM-classes.
Rational bernoulli_ratio(int k);

/// den(B_k / 2k) read off the exact rational.
BigInt bernoulli_ratio_den(int k);

/// Prime-power product over primes p with (p-1) | 2k of p^{1 + v_p(2k)}.
BigInt von_staudt_den(int k);

/// A k where the product formula and the exact denominator disagree.
struct VonStaudtFinding {
  int k;
  BigInt product_formula;
  BigInt exact;
};

/// Compares both routes for 1 <= k <= max_k; empty when they agree.
std::vector<VonStaudtFinding> von_staudt_findings(int max_k);

std::int64_t p_adic_valuation(std::int64_t value, std::int64_t p);
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Coefficient of kappa_{2k-1} in s_{2k-1} of the index bundle of the
/// Cauchy-Riemann operator: (2k-1)! [z^{2k}] td(z) = (-1)^{k+1} B_k/2k.
Rational grr_odd_coefficient(int k);

/// Maximal divisor of kappa_n for oriented surface bundles: 2 for even n,
/// den(B_i/2i) for n = 2i - 1.
BigInt divisor_oriented(int n);

enum class Maximality { kProvenMaximal, kLowerBoundOnly };

std::string maximality_name(Maximality m);

struct DivisibilityBound {
  int index = 0;
  BigInt oriented_divisor;
  BigInt spin_divisor;
  Maximality spin_maximality = Maximality::kLowerBoundOnly;
  std::string spin_formula;  // e.g. "2^4 * den(B_2/4)"
};

/// Spin divisibility of kappa_n: 2^{2m+1} for n = 2m (maximal),
/// 2^{2m} den(B_m/2m) for n = 2m - 1 (lower bound only).
DivisibilityBound divisor_spin(int n);

}  // namespace spinsurf
