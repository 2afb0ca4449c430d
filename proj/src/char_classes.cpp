#include "spinsurf/char_classes.hpp"

#include <array>
#include <functional>
#include <optional>

#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

const std::vector<std::string> kP1{"p1"};
const std::vector<std::string> kChernW{"c1", "c2"};
const std::vector<std::string> kU{"u"};

void require_nonnegative(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "class index must be nonnegative");
}

BigInt pow2(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

}  // namespace

IntPolynomial sphere_kappa(int n) {
  require_nonnegative(n);
  const IntPolynomial p1 = IntPolynomial::generator(kP1, "p1");
  // kappa_{k+2} = p1 kappa_k
  IntPolynomial kappa = n % 2 == 0 ? IntPolynomial::constant(kP1, 2) : IntPolynomial(kP1);
  for (int k = n % 2; k + 2 <= n; k += 2) kappa = p1 * kappa;
  return kappa;
}

IntPolynomial sphere_kappa_closed(int n) {
  require_nonnegative(n);
  if (n % 2 == 1) return IntPolynomial(kP1);
  return IntPolynomial::monomial(kP1, "p1", n / 2, 2);
}

IntPolynomial proj_bundle_kappa(int n) {
  require_nonnegative(n);
  if (n % 2 == 1) return IntPolynomial(kChernW);
  const IntPolynomial c1 = IntPolynomial::generator(kChernW, "c1");
  const IntPolynomial c2 = IntPolynomial::generator(kChernW, "c2");
  const IntPolynomial disc = c1 * c1 - BigInt(4) * c2;
  return BigInt(2) * disc.pow(n / 2);
}

IntPolynomial hp_infinity_kappa(int n) {
  require_nonnegative(n);
  if (n % 2 == 1) return IntPolynomial(kU);
  const int m = n / 2;
  BigInt c = pow2(2 * m + 1);
  if (m % 2 == 1) c = -c;
  return IntPolynomial::monomial(kU, "u", m, c);
}

IntPolynomial sphere_lambda_integral(int n) {
  require_nonnegative(n);
  const auto& gens = QuotientedPolynomial::generators();
  if (n == 0) return IntPolynomial::constant(gens, 2);
  const IntPolynomial c2 = IntPolynomial::generator(gens, "c2");
  const IntPolynomial c3 = IntPolynomial::generator(gens, "c3");
  // lambda[1..n]
  std::vector<IntPolynomial> lambda(std::max(n, 3) + 1, IntPolynomial(gens));
  lambda[2] = BigInt(-2) * c2;
  lambda[3] = BigInt(3) * c3;
  for (int k = 4; k <= n; ++k) lambda[k] = c3 * lambda[k - 3] - c2 * lambda[k - 2];
  return lambda[n];
}

QuotientedPolynomial sphere_lambda(int n) { return QuotientedPolynomial(sphere_lambda_integral(n)); }

QuotientedPolynomial sphere_kappa_in_quotient(int n) {
  const auto& gens = QuotientedPolynomial::generators();
  const IntPolynomial minus_c2 = BigInt(-1) * IntPolynomial::generator(gens, "c2");
  return QuotientedPolynomial(sphere_kappa(n).substitute(gens, {{"p1", minus_c2}}));
}

QuotientedPolynomial lambda_kappa_difference(int n) {
  return sphere_lambda(n) - sphere_kappa_in_quotient(n);
}

BigInt torus_kappa(int n) {
  require_nonnegative(n);
  return 0;
}

IntPolynomial torus_lambda(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "torus lambda index must be positive");
  BigInt c = 1 - pow2(n);
  if (n % 2 == 1) c = -c;
  return IntPolynomial::monomial(kU, "u", n, c);
}

namespace {

struct TableRow {
  std::function<bool(int, int)> applies;
  std::function<std::int64_t(int, int)> value;
};

const std::array<TableRow, 7>& table_rows() {
  static const std::array<TableRow, 7> rows{{
      {[](int, int m) { return m == 0; }, [](int, int) -> std::int64_t { return 1; }},
      {[](int, int m) { return m == 1; }, [](int g, int) -> std::int64_t { return g; }},
      {[](int g, int m) { return g == 0 && m <= 0; }, [](int, int m) -> std::int64_t { return 1 - 2 * std::int64_t{m}; }},
      {[](int g, int m) { return g == 0 && m > 0; }, [](int, int) -> std::int64_t { return 0; }},
      {[](int g, int) { return g == 1; }, [](int, int) -> std::int64_t { return 1; }},
      {[](int g, int m) { return g >= 2 && m < 0; }, [](int, int) -> std::int64_t { return 0; }},
      {[](int g, int m) { return g >= 2 && m >= 2; },
       [](int g, int m) -> std::int64_t { return (2 * std::int64_t{m} - 1) * (g - 1); }},
  }};
  return rows;
}

}  // namespace

RiemannRochDim riemann_roch_dim(int g, int m) {
  if (g < 0) throw Error(ErrorKind::kInvalidArgument, "genus must be nonnegative");
  for (const TableRow& row : table_rows()) {
    if (row.applies(g, m)) return RiemannRochDim{g, m, row.value(g, m)};
  }
  throw Error(ErrorKind::kInternalInvariant, "Riemann-Roch table has no row for this input");
}

bool serre_duality_check(int g, int m) {
  const std::int64_t ker = riemann_roch_dim(g, m).dimension;
  const std::int64_t coker = riemann_roch_dim(g, 1 - m).dimension;
  return ker - coker == (2 * std::int64_t{m} - 1) * (g - 1);
}

bool riemann_roch_rows_consistent(int max_genus) {
  for (int g = 0; g <= max_genus; ++g) {
    for (int m = -2 * max_genus - 2; m <= 2 * max_genus + 2; ++m) {
      std::optional<std::int64_t> seen;
      for (const TableRow& row : table_rows()) {
        if (!row.applies(g, m)) continue;
        const std::int64_t v = row.value(g, m);
        if (seen && *seen != v) return false;
        seen = v;
      }
      if (!seen) return false;
    }
  }
  return true;
}

}  // namespace spinsurf
