#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <numbers>

#include "doctest.h"
#include "spinsurf/errors.hpp"
#include "spinsurf/seifert.hpp"

using namespace spinsurf;
using boost::multiprecision::cpp_rational;

namespace {

Rational frac(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a domain error");
  return ErrorKind::kInternalInvariant;
}

RepSpec trivial_spec(std::int64_t n, std::vector<std::vector<Rational>> s) {
  RepSpec spec;
  spec.dimension = n;
  for (std::size_t j = 0; j < s.size(); ++j) spec.profiles.push_back({static_cast<int>(j + 1), s[j]});
  return spec;
}

std::vector<Rational> repeat(std::vector<std::pair<std::int64_t, int>> counts) {
  std::vector<Rational> out;
  for (auto [value, times] : counts) out.insert(out.end(), times, Rational(value));
  return out;
}

}  // namespace

TEST_CASE("Seifert data") {
  const SeifertData p = SeifertData::poincare_sphere();
  CHECK(p.product() == 30);
  CHECK(homology_sphere_value(p) == Rational(1));
  CHECK(is_integral_homology_sphere(p));
  CHECK_FALSE(is_integral_homology_sphere(SeifertData({{2, 1}, {3, 1}, {5, 1}})));
  CHECK(homology_sphere_value(SeifertData({{2, 1}, {3, 1}, {5, 1}})) == Rational(31));
  CHECK(kind_of([] { SeifertData({{4, 2}}); }) == ErrorKind::kNonCoprimePair);
  CHECK(kind_of([] { SeifertData({{0, 1}}); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("presentation strings") {
  const Presentation p = presentation(SeifertData::poincare_sphere());
  CHECK(p.generators == std::vector<std::string>{"h", "x1", "x2", "x3"});
  CHECK(p.relations == std::vector<std::string>{"[h,x1] = 1", "[h,x2] = 1", "[h,x3] = 1", "x1 x2 x3 = 1",
                                                "x1^2 = h", "x2^3 = h^-1", "x3^5 = h^-1"});
  const Presentation q = presentation(SeifertData({{1, 0}}));
  CHECK(q.relations.back() == "x1 = 1");
  CHECK(presentation(SeifertData({})).relations.empty());
}

TEST_CASE("Jones-Westbury formulas on hand profiles") {
  const SeifertData d = SeifertData::poincare_sphere();
  // Example 2: fiber profiles forced by traces -2, 0, -2 in dimension 18.
  const RepSpec ex2 = trivial_spec(18, {repeat({{0, 8}, {1, 10}}), repeat({{0, 6}, {1, 6}, {2, 6}}),
                                        repeat({{0, 2}, {1, 4}, {2, 4}, {3, 4}, {4, 4}})});
  CHECK(e_simple(d, ex2) == ModZ(frac(1, 2)));
  // Example 3 in dimension 10.
  const RepSpec ex3 = trivial_spec(10, {repeat({{0, 4}, {1, 6}}), repeat({{0, 2}, {1, 4}, {2, 4}}),
                                        repeat({{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}})});
  // Oracle: -30 (6/8 + (4 + 16)/18 + (2 + 8 + 18 + 32)/50) = -45/2 - 100/3 - 36.
  const cpp_rational expected = cpp_rational(-45, 2) - cpp_rational(100, 3) - 36;
  CHECK(e_simple(d, ex3) ==
        ModZ(Rational(boost::multiprecision::numerator(expected), boost::multiprecision::denominator(expected))));
  CHECK(e_simple(d, ex3) == ModZ(frac(1, 6)));

  // All-zero profiles.
  CHECK(e_simple(d, trivial_spec(4, {repeat({{0, 4}}), repeat({{0, 4}}), repeat({{0, 4}})})) == ModZ());

  // For det 1 the general formula is 2 N e.
  for (const RepSpec* spec : {&ex2, &ex3}) {
    CHECK(e_general(d, *spec) == modz_scale(e_simple(d, *spec), 2 * spec->dimension));
  }

  // s -> s + a_j leaves e unchanged.
  RepSpec shifted = ex3;
  for (std::size_t j = 0; j < shifted.profiles.size(); ++j) {
    for (Rational& s : shifted.profiles[j].s_values) s += Rational(d.pairs()[j].a);
  }
  CHECK(e_simple(d, shifted) == e_simple(d, ex3));
}

TEST_CASE("formula preconditions") {
  const SeifertData d = SeifertData::poincare_sphere();
  RepSpec spec = trivial_spec(2, {repeat({{0, 2}}), repeat({{0, 2}})});
  CHECK(kind_of([&] { e_simple(d, spec); }) == ErrorKind::kProfileMismatch);
  spec = trivial_spec(2, {repeat({{0, 2}}), repeat({{0, 2}}), repeat({{0, 3}})});
  CHECK(kind_of([&] { e_general(d, spec); }) == ErrorKind::kProfileMismatch);
  spec = trivial_spec(2, {repeat({{0, 2}}), repeat({{0, 2}}), repeat({{0, 2}})});
  spec.center = CentralBehavior::scalar(1);
  CHECK(kind_of([&] { e_simple(d, spec); }) == ErrorKind::kWrongCentralBehavior);
  CHECK_NOTHROW(e_general(d, spec));
  spec.center = CentralBehavior::scalar(2);  // zeta_2^2 = 1
  CHECK_NOTHROW(e_simple(d, spec));
}

TEST_CASE("s-values from exponents") {
  // N = 28, h acts by -1 = zeta_28^14; a = 2, b = -1.
  CHECK(s_from_exponents(2, -1, 28, 14, {14, 42}) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(s_from_exponents(3, 1, 28, 14, {-70}) == std::vector<Rational>{Rational(1)});  // normalized to 14
  CHECK(kind_of([] { s_from_exponents(2, -1, 28, 14, {1}); }) == ErrorKind::kNonIntegralExponent);
}

TEST_CASE("multiplicity solver") {
  const MultiplicitySolution s = multiplicity_solve(6, 28, 2, {1, 3, 5}, true);
  CHECK(s.exponents == std::vector<int>{1, 3, 5});
  CHECK(s.multiplicities == std::vector<int>{10, 8, 10});

  for (int m : {2, 3, 4, 5, 6, 10}) {
    for (std::int64_t dim : {10, 18, 28}) {
      for (std::int64_t trace : {-2, 0, 2}) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        for (const MultiplicitySolution& sol : multiplicity_solutions(m, dim, trace, all, true)) {
          // Numeric oracle: the trace of the diagonal matrix.
          std::complex<double> tr = 0;
          std::int64_t total = 0;
          for (std::size_t i = 0; i < sol.exponents.size(); ++i) {
            tr += static_cast<double>(sol.multiplicities[i]) *
                  std::polar(1.0, 2 * std::numbers::pi * sol.exponents[i] / m);
            total += sol.multiplicities[i];
            CHECK(sol.multiplicities[i] == sol.multiplicities[(m - sol.exponents[i]) % m]);
          }
          CHECK(total == dim);
          CHECK(std::abs(tr - std::complex<double>(static_cast<double>(trace))) < 1e-9);
        }
      }
    }
  }

  CHECK(kind_of([] { multiplicity_solve(2, 3, 0, {0, 1}, true); }) == ErrorKind::kNoSolution);
  CHECK(kind_of([] { multiplicity_solve(4, 2, 0, {0, 1, 2, 3}, false); }) == ErrorKind::kMultipleSolutions);
  CHECK(multiplicity_solutions(4, 2, 0, {0, 1, 2, 3}, false).size() == 2);
  CHECK(kind_of([] { multiplicity_solve(2, 3, 5, {0, 1}, true); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("orders in pi_3") {
  CHECK(lefschetz_trace(4) == -2);
  CHECK(lefschetz_trace(0) == 2);
  CHECK(order_in_pi3(ModZ(frac(-1, 12))) == 12);
  CHECK(order_in_pi3(ModZ(frac(1, 6))) == 6);
  CHECK(order_in_pi3(ModZ()) == 1);
  CHECK(kind_of([] { order_in_pi3(ModZ(frac(1, 7))); }) == ErrorKind::kNotTorsion);
  CHECK(order_constraint_set(ModZ(frac(1, 3)), 28) == std::set<std::int64_t>{3, 6, 12, 24});
  CHECK(kind_of([] { order_constraint_set(ModZ(frac(1, 7)), 28); }) == ErrorKind::kNotTorsion);
}

TEST_CASE("icosahedral examples") {
  const IcosahedralExample ex1 = icosahedral_example(1);
  CHECK(ex1.genus == 14);
  CHECK(ex1.uses_general_formula);
  CHECK(ex1.value == ModZ(frac(1, 3)));
  CHECK(ex1.order_candidates == std::set<std::int64_t>{3, 6, 12, 24});
  CHECK(ex1.fibers[1].multiplicities.multiplicities == std::vector<int>{10, 8, 10});
  CHECK(ex1.fibers[2].multiplicities.multiplicities == std::vector<int>{6, 6, 4, 6, 6});

  const IcosahedralExample ex2 = icosahedral_example(2);
  CHECK(ex2.genus == 9);
  CHECK(ex2.value == ModZ(frac(1, 2)));
  CHECK(ex2.order == 2);

  const IcosahedralExample ex3 = icosahedral_example(3);
  CHECK(ex3.genus == 5);
  CHECK(ex3.fibers[0].multiplicities.multiplicities == std::vector<int>{4, 6});
  CHECK(ex3.value == ModZ(frac(1, 6)));
  CHECK(ex3.order == 6);

  // The genus follows from Riemann-Hurwitz for the 60-element quotient.
  for (const IcosahedralExample* ex : {&ex1, &ex2, &ex3}) {
    CHECK(ex->spec.dimension == 2 * ex->genus);
    for (const FiberDerivation& f : ex->fibers) CHECK(f.trace == 2 - f.fixed_points);
  }
  CHECK_THROWS_AS(icosahedral_example(4), Error);
}

TEST_CASE("stabilization") {
  CHECK(regular_representation_increment() == ModZ(frac(-1, 3)));
  for (int n = 0; n <= 10; ++n) {
    CHECK(stabilized_e(n) == ModZ(frac(1, 6) - frac(n, 3)));
  }
}
