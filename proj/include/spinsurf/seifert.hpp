#pragma once

// Seifert homology spheres, the Jones-Westbury e-invariant formulas and the
// icosahedral worked examples.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinsurf/rational.hpp"

namespace spinsurf {

/// Largest order of an element of pi_3 of the stable framed bordism
/// (Z/24); e-invariants of surface-bundle classes live in (1/24)Z/Z.
inline constexpr std::int64_t kPi3Order = 24;

struct FiberPair {
  std::int64_t a = 1;
  std::int64_t b = 0;
  friend bool operator==(const FiberPair&, const FiberPair&) = default;
};

/// Exceptional fibers (a_j, b_j), each pair coprime.
class SeifertData {
 public:
  explicit SeifertData(std::vector<FiberPair> pairs);

  static SeifertData poincare_sphere() { return SeifertData({{2, -1}, {3, 1}, {5, 1}}); }

  const std::vector<FiberPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  /// a = product of the a_j.
  BigInt product() const;

 private:
  std::vector<FiberPair> pairs_;
};

/// a * sum_j b_j / a_j; the manifold is an integral homology sphere iff
/// this is +-1.
Rational homology_sphere_value(const SeifertData& d);
bool is_integral_homology_sphere(const SeifertData& d);

struct Presentation {
  std::vector<std::string> generators;  // h, x1, ..., xn
  std::vector<std::string> relations;   // commutators, product, then powers
};

Presentation presentation(const SeifertData& d);

struct EigenvalueProfile {
  int fiber = 0;  // 1-based
  std::vector<Rational> s_values;
};

/// h acts by the scalar zeta_N^{r_h}, or trivially.
struct CentralBehavior {
  std::optional<std::int64_t> scalar_exponent;

  static CentralBehavior trivial() { return {}; }
  static CentralBehavior scalar(std::int64_t r) { return {r}; }
  bool is_trivial() const { return !scalar_exponent.has_value(); }
};

struct RepSpec {
  std::int64_t dimension = 0;  // N
  CentralBehavior center;
  std::vector<EigenvalueProfile> profiles;  // one per exceptional fiber
};

/// 2 Re(N e) = -a sum_j sum_{k,l} (s_k(j) - s_l(j))^2 / (2 a_j^2) mod Z.
ModZ e_general(const SeifertData& d, const RepSpec& spec);

/// e = -sum_j sum_k a s_k(j)^2 / (2 a_j^2) mod Z, for trivial center.
ModZ e_simple(const SeifertData& d, const RepSpec& spec);

/// s_k = (t_k + b r_h) / N for exponents t_k of zeta_{N a}, each normalized
/// into [0, N a). Throws kNonIntegralExponent when N does not divide
/// t_k + b r_h.
std::vector<Rational> s_from_exponents(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t r_h,
                                       const std::vector<std::int64_t>& exponents);

struct MultiplicitySolution {
  std::vector<int> exponents;       // allowed exponents, ascending
  std::vector<int> multiplicities;  // aligned with exponents
  friend bool operator==(const MultiplicitySolution&, const MultiplicitySolution&) = default;
};

/// All nonnegative (mu_i) over the allowed exponents of zeta_m with
/// sum mu_i = dimension and sum mu_i zeta_m^i = trace exactly in Z[zeta_m]
/// (and mu_i = mu_{m-i} when `real`).
std::vector<MultiplicitySolution> multiplicity_solutions(int m, std::int64_t dimension, std::int64_t trace,
                                                         const std::vector<int>& allowed, bool real);

/// The unique solution; kNoSolution / kMultipleSolutions otherwise.
MultiplicitySolution multiplicity_solve(int m, std::int64_t dimension, std::int64_t trace,
                                        const std::vector<int>& allowed, bool real);

/// Trace on H_1 of a finite-order orientation-preserving surface map with
/// the given number of fixed points.
std::int64_t lefschetz_trace(std::int64_t fixed_points);

/// Orders of e in (1/24)Z/Z compatible with 2 N e = value.
std::set<std::int64_t> order_constraint_set(const ModZ& two_n_e, std::int64_t n);

/// Order of e in Z/24; throws kNotTorsion when 24 e is not integral.
std::int64_t order_in_pi3(const ModZ& e);

struct FiberDerivation {
  std::int64_t fixed_points = 0;
  std::int64_t trace = 0;
  int root_order = 0;  // m with eigenvalues zeta_m^c
  MultiplicitySolution multiplicities;
};

struct IcosahedralExample {
  int index = 0;
  int genus = 0;
  SeifertData seifert = SeifertData::poincare_sphere();
  RepSpec spec;
  std::vector<FiberDerivation> fibers;
  bool uses_general_formula = false;
  /// e itself (simple formula) or 2 Re(N e) (general formula).
  ModZ value;
  std::optional<std::int64_t> order;      // simple formula
  std::set<std::int64_t> order_candidates;  // general formula
};

/// k in {1, 2, 3}: the hyperelliptic icosahedral actions branched at edge
/// midpoints (genus 14), face midpoints (genus 9) and vertices (genus 5).
IcosahedralExample icosahedral_example(int k);

/// e-invariant of 2 * (pullback of the regular representation), from the
/// restriction profiles of the group model.
ModZ regular_representation_increment();

/// Example 3 stabilized by n copies of the regular-representation summand.
ModZ stabilized_e(std::int64_t n);

}  // namespace spinsurf
