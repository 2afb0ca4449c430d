#include "spinsurf/seifert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spinsurf/cyclotomic.hpp"
#include "spinsurf/errors.hpp"
#include "spinsurf/icosa_group.hpp"

namespace spinsurf {

SeifertData::SeifertData(std::vector<FiberPair> pairs) : pairs_(std::move(pairs)) {
  for (const FiberPair& p : pairs_) {
    if (p.a < 1) throw Error(ErrorKind::kInvalidArgument, "exceptional fiber multiplicity a_j must be >= 1");
    if (std::gcd(p.a, p.b) != 1) {
      throw Error(ErrorKind::kNonCoprimePair,
                  "pair (" + std::to_string(p.a) + ", " + std::to_string(p.b) + ") is not coprime");
    }
  }
}

BigInt SeifertData::product() const {
  BigInt a = 1;
  for (const FiberPair& p : pairs_) a *= p.a;
  return a;
}

Rational homology_sphere_value(const SeifertData& d) {
  Rational sum;
  for (const FiberPair& p : d.pairs()) sum += Rational(BigInt(p.b), BigInt(p.a));
  return Rational(d.product()) * sum;
}

bool is_integral_homology_sphere(const SeifertData& d) {
  const Rational v = homology_sphere_value(d);
  return v == Rational(1) || v == Rational(-1);
}

Presentation presentation(const SeifertData& d) {
  Presentation p;
  p.generators.push_back("h");
  const std::size_t n = d.size();
  for (std::size_t i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) p.relations.push_back("[h,x" + std::to_string(i) + "] = 1");
  if (n > 0) {
    std::string product;
    for (std::size_t i = 1; i <= n; ++i) product += (i > 1 ? " x" : "x") + std::to_string(i);
    p.relations.push_back(product + " = 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const FiberPair& f = d.pairs()[i];
    std::string lhs = "x" + std::to_string(i + 1);
    if (f.a != 1) lhs += "^" + std::to_string(f.a);
    const std::int64_t e = -f.b;
    const std::string rhs = e == 0 ? "1" : e == 1 ? "h" : "h^" + std::to_string(e);
    p.relations.push_back(lhs + " = " + rhs);
  }
  return p;
}

namespace {

// Profiles ordered by fiber, validated against the data.
std::vector<const EigenvalueProfile*> ordered_profiles(const SeifertData& d, const RepSpec& spec) {
  if (spec.dimension < 1) throw Error(ErrorKind::kInvalidArgument, "representation dimension must be positive");
  if (spec.profiles.size() != d.size()) {
    throw Error(ErrorKind::kProfileMismatch, "expected " + std::to_string(d.size()) + " profiles, got " +
                                                 std::to_string(spec.profiles.size()));
  }
  std::vector<const EigenvalueProfile*> ordered(d.size(), nullptr);
  for (const EigenvalueProfile& p : spec.profiles) {
    if (p.fiber < 1 || p.fiber > static_cast<int>(d.size()) || ordered[p.fiber - 1] != nullptr) {
      throw Error(ErrorKind::kProfileMismatch, "profile fiber index " + std::to_string(p.fiber) + " is invalid");
    }
    if (static_cast<std::int64_t>(p.s_values.size()) != spec.dimension) {
      throw Error(ErrorKind::kProfileMismatch, "fiber " + std::to_string(p.fiber) + " has " +
                                                   std::to_string(p.s_values.size()) + " s-values, expected N = " +
                                                   std::to_string(spec.dimension));
    }
    ordered[p.fiber - 1] = &p;
  }
  return ordered;
}

bool center_is_trivial(const RepSpec& spec) {
  return spec.center.is_trivial() || *spec.center.scalar_exponent % spec.dimension == 0;
}

}  // namespace

ModZ e_general(const SeifertData& d, const RepSpec& spec) {
  const auto profiles = ordered_profiles(d, spec);
  const Rational a(d.product());
  Rational total;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const auto& s = profiles[j]->s_values;
    Rational sum;
    for (const Rational& sk : s) {
      for (const Rational& sl : s) {
        const Rational diff = sk - sl;
        sum += diff * diff;
      }
    }
    const std::int64_t aj = d.pairs()[j].a;
    total -= a * sum / Rational(2 * aj * aj);
  }
  return ModZ(total);
}

ModZ e_simple(const SeifertData& d, const RepSpec& spec) {
  if (!center_is_trivial(spec)) {
    throw Error(ErrorKind::kWrongCentralBehavior, "the simple formula needs h to act trivially");
  }
  const auto profiles = ordered_profiles(d, spec);
  const Rational a(d.product());
  Rational total;
  for (std::size_t j = 0; j < d.size(); ++j) {
    Rational sum;
    for (const Rational& s : profiles[j]->s_values) sum += s * s;
    const std::int64_t aj = d.pairs()[j].a;
    total -= a * sum / Rational(2 * aj * aj);
  }
  return ModZ(total);
}

std::vector<Rational> s_from_exponents(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t r_h,
                                       const std::vector<std::int64_t>& exponents) {
  if (a < 1 || n < 1) throw Error(ErrorKind::kInvalidArgument, "need a_j >= 1 and N >= 1");
  const std::int64_t period = n * a;
  std::vector<Rational> out;
  out.reserve(exponents.size());
  for (std::int64_t t : exponents) {
    t %= period;
    if (t < 0) t += period;
    const std::int64_t numerator = t + b * r_h;
    if (numerator % n != 0) {
      throw Error(ErrorKind::kNonIntegralExponent,
                  "exponent " + std::to_string(t) + " gives s = " + std::to_string(numerator) + "/" +
                      std::to_string(n) + "; no canonical lift, supply s-values directly");
    }
    out.emplace_back(numerator / n);
  }
  return out;
}

std::vector<MultiplicitySolution> multiplicity_solutions(int m, std::int64_t dimension, std::int64_t trace,
                                                         const std::vector<int>& allowed, bool real) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "element order must be positive");
  if (dimension < 0 || trace > dimension || trace < -dimension) {
    throw Error(ErrorKind::kInvalidArgument, "need |trace| <= dimension");
  }
  std::vector<int> exps;
  for (int c : allowed) exps.push_back(((c % m) + m) % m);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  // One unknown per orbit of c -> -c (when real); exponents whose conjugate
  // is not allowed are forced to zero.
  struct Orbit {
    std::vector<int> members;
    CyclotomicInt sum;
  };
  std::vector<Orbit> orbits;
  for (int c : exps) {
    const int partner = (m - c) % m;
    if (real) {
      if (!std::binary_search(exps.begin(), exps.end(), partner)) continue;
      if (partner < c) continue;
    }
    Orbit o{{c}, CyclotomicInt::root_power(m, c)};
    if (real && partner != c) {
      o.members.push_back(partner);
      o.sum += CyclotomicInt::root_power(m, partner);
    }
    orbits.push_back(std::move(o));
  }

  const CyclotomicInt target = CyclotomicInt::integer(m, trace);
  std::vector<MultiplicitySolution> solutions;
  std::vector<std::int64_t> mu(orbits.size(), 0);
  std::function<void(std::size_t, std::int64_t, const CyclotomicInt&)> recurse =
      [&](std::size_t i, std::int64_t remaining, const CyclotomicInt& partial) {
        if (i == orbits.size()) {
          if (remaining != 0 || partial != target) return;
          MultiplicitySolution s;
          s.exponents = exps;
          s.multiplicities.assign(exps.size(), 0);
          for (std::size_t o = 0; o < orbits.size(); ++o) {
            for (int c : orbits[o].members) {
              const auto pos = std::lower_bound(exps.begin(), exps.end(), c) - exps.begin();
              s.multiplicities[pos] = static_cast<int>(mu[o]);
            }
          }
          solutions.push_back(std::move(s));
          return;
        }
        const std::int64_t width = static_cast<std::int64_t>(orbits[i].members.size());
        const bool last = i + 1 == orbits.size();
        for (std::int64_t k = last ? remaining / width : 0; k * width <= remaining; ++k) {
          mu[i] = k;
          recurse(i + 1, remaining - k * width, partial + k * orbits[i].sum);
        }
      };
  recurse(0, dimension, CyclotomicInt(m));
  return solutions;
}

MultiplicitySolution multiplicity_solve(int m, std::int64_t dimension, std::int64_t trace,
                                        const std::vector<int>& allowed, bool real) {
  auto solutions = multiplicity_solutions(m, dimension, trace, allowed, real);
  const std::string where = "order " + std::to_string(m) + ", dimension " + std::to_string(dimension) +
                            ", trace " + std::to_string(trace);
  if (solutions.empty()) throw Error(ErrorKind::kNoSolution, "no multiplicity vector for " + where);
  if (solutions.size() > 1) {
    std::string list;
    for (const auto& s : solutions) {
      list += " (";
      for (std::size_t i = 0; i < s.multiplicities.size(); ++i) {
        list += (i ? "," : "") + std::to_string(s.multiplicities[i]);
      }
      list += ")";
    }
    throw Error(ErrorKind::kMultipleSolutions,
                std::to_string(solutions.size()) + " multiplicity vectors for " + where + ":" + list);
  }
  return solutions.front();
}

std::int64_t lefschetz_trace(std::int64_t fixed_points) {
  if (fixed_points < 0) throw Error(ErrorKind::kInvalidArgument, "fixed-point count must be nonnegative");
  return 2 - fixed_points;
}

std::set<std::int64_t> order_constraint_set(const ModZ& two_n_e, std::int64_t n) {
  std::set<std::int64_t> orders;
  for (std::int64_t s = 0; s < kPi3Order; ++s) {
    const ModZ e{Rational(BigInt(s), BigInt(kPi3Order))};
    if (modz_scale(e, 2 * n) == two_n_e) orders.insert(*modz_order(e, kPi3Order));
  }
  if (orders.empty()) {
    throw Error(ErrorKind::kNotTorsion, "no e in (1/24)Z/Z has 2N e = " + two_n_e.residue().str());
  }
  return orders;
}

std::int64_t order_in_pi3(const ModZ& e) {
  const auto order = modz_order(e, kPi3Order);
  if (!order || kPi3Order % *order != 0) throw Error(ErrorKind::kNotTorsion, e.residue().str() + " is not 24-torsion");
  return *order;
}

namespace {

struct ExampleData {
  int genus;
  std::int64_t n;
  std::optional<std::int64_t> r_h;
  std::array<std::int64_t, 3> fixed_points;
};

// Canned geometry of the three hyperelliptic actions: h is the hyperelliptic
// involution in the first (so acts as -1 = zeta_28^14 on H_1) and trivial in
// the other two.
ExampleData example_data(int k) {
  switch (k) {
    case 1: return {14, 28, 14, {2, 0, 0}};
    case 2: return {9, 18, std::nullopt, {4, 2, 4}};
    case 3: return {5, 10, std::nullopt, {4, 4, 2}};
    default: throw Error(ErrorKind::kInvalidArgument, "example index must be 1, 2 or 3");
  }
}

}  // namespace

IcosahedralExample icosahedral_example(int k) {
  const ExampleData data = example_data(k);
  IcosahedralExample ex;
  ex.index = k;
  ex.genus = data.genus;
  ex.spec.dimension = data.n;
  ex.spec.center = data.r_h ? CentralBehavior::scalar(*data.r_h) : CentralBehavior::trivial();
  const std::int64_t r_h = data.r_h.value_or(0);

  for (std::size_t j = 0; j < ex.seifert.size(); ++j) {
    const FiberPair f = ex.seifert.pairs()[j];
    // Eigenvalues zeta_{N a}^t of alpha_j satisfy alpha_j^a = rho(h)^{-b},
    // i.e. t = -b r_h mod N; pass to the smallest root order that holds them.
    const std::int64_t period = data.n * f.a;
    std::vector<std::int64_t> ts;
    std::int64_t common = period;
    for (std::int64_t t = 0; t < period; ++t) {
      if (((t + f.b * r_h) % data.n + data.n) % data.n == 0) {
        ts.push_back(t);
        common = std::gcd(common, t);
      }
    }
    const std::int64_t step = common;
    const int m = static_cast<int>(period / step);
    std::vector<int> allowed;
    for (std::int64_t t : ts) allowed.push_back(static_cast<int>(t / step));

    FiberDerivation fd;
    fd.fixed_points = data.fixed_points[j];
    fd.trace = lefschetz_trace(fd.fixed_points);
    fd.root_order = m;
    fd.multiplicities = multiplicity_solve(m, data.n, fd.trace, allowed, true);

    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < fd.multiplicities.exponents.size(); ++i) {
      for (int rep = 0; rep < fd.multiplicities.multiplicities[i]; ++rep) {
        exps.push_back(fd.multiplicities.exponents[i] * step);
      }
    }
    ex.spec.profiles.push_back(
        EigenvalueProfile{static_cast<int>(j + 1), s_from_exponents(f.a, f.b, data.n, r_h, exps)});
    ex.fibers.push_back(std::move(fd));
  }

  if (ex.spec.center.is_trivial()) {
    ex.value = e_simple(ex.seifert, ex.spec);
    ex.order = order_in_pi3(ex.value);
  } else {
    ex.uses_general_formula = true;
    ex.value = e_general(ex.seifert, ex.spec);
    ex.order_candidates = order_constraint_set(ex.value, data.n);
  }
  return ex;
}

ModZ regular_representation_increment() {
  const SeifertData d = SeifertData::poincare_sphere();
  RepSpec spec;
  spec.center = CentralBehavior::trivial();
  for (std::size_t j = 0; j < d.size(); ++j) {
    const FiberPair f = d.pairs()[j];
    const RestrictionProfile r = regular_restriction_profile(static_cast<int>(f.a));
    if (spec.dimension == 0) spec.dimension = r.dimension;
    if (spec.dimension != r.dimension) throw Error(ErrorKind::kInternalInvariant, "restriction dimensions differ");
    std::vector<std::int64_t> exps;
    for (int c = 0; c < r.subgroup_order; ++c) {
      for (int rep = 0; rep < r.multiplicities[c]; ++rep) exps.push_back(c * spec.dimension);
    }
    spec.profiles.push_back(
        EigenvalueProfile{static_cast<int>(j + 1), s_from_exponents(f.a, f.b, spec.dimension, 0, exps)});
  }
  return e_simple(d, spec);
}

ModZ stabilized_e(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "stabilization count must be nonnegative");
  return icosahedral_example(3).value + modz_scale(regular_representation_increment(), n);
}

}  // namespace spinsurf
