#include "spinsurf/icosa_group.hpp"

#include <algorithm>
#include <set>

#include "spinsurf/cyclotomic.hpp"
#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

int mod5(int x) { return ((x % 5) + 5) % 5; }

Mat2F5 coset_rep(const Mat2F5& m) { return std::min(m, m.negated()); }

std::vector<Mat2F5> generated_subgroup(const std::set<Mat2F5>& generators) {
  std::set<Mat2F5> seen{Mat2F5::identity()};
  std::vector<Mat2F5> frontier{Mat2F5::identity()};
  while (!frontier.empty()) {
    std::vector<Mat2F5> next;
    for (const Mat2F5& x : frontier) {
      for (const Mat2F5& g : generators) {
        const Mat2F5 y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

Mat2F5::Mat2F5(int a, int b, int c, int d)
    : e_{static_cast<std::uint8_t>(mod5(a)), static_cast<std::uint8_t>(mod5(b)),
         static_cast<std::uint8_t>(mod5(c)), static_cast<std::uint8_t>(mod5(d))} {
  if (mod5(a * d - b * c) != 1) throw Error(ErrorKind::kInvalidArgument, "matrix determinant is not 1 mod 5");
}

Mat2F5 operator*(const Mat2F5& x, const Mat2F5& y) {
  return Mat2F5(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
}

Mat2F5 Mat2F5::inverse() const { return Mat2F5(e_[3], -e_[1], -e_[2], e_[0]); }

Mat2F5 Mat2F5::negated() const { return Mat2F5(-e_[0], -e_[1], -e_[2], -e_[3]); }

Mat2F5 Mat2F5::pow(int k) const {
  Mat2F5 base = k < 0 ? inverse() : *this;
  int e = k < 0 ? -k : k;
  Mat2F5 r = identity();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

int Mat2F5::order() const {
  Mat2F5 x = *this;
  for (int k = 1; k <= 120; ++k) {
    if (x == identity()) return k;
    x = x * *this;
  }
  throw Error(ErrorKind::kInternalInvariant, "element order exceeds group order");
}

std::string Mat2F5::str() const {
  return "[[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "],[" + std::to_string(e_[2]) + "," +
         std::to_string(e_[3]) + "]]";
}

const std::vector<Mat2F5>& enumerate_group() {
  static const std::vector<Mat2F5> group = [] {
    std::vector<Mat2F5> out;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d)
            if (mod5(a * d - b * c) == 1) out.emplace_back(a, b, c, d);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

std::vector<Mat2F5> group_center() {
  std::vector<Mat2F5> center;
  const auto& g = enumerate_group();
  for (const Mat2F5& z : g) {
    if (std::all_of(g.begin(), g.end(), [&](const Mat2F5& x) { return z * x == x * z; })) center.push_back(z);
  }
  return center;
}

bool verify_perfect(std::span<const Mat2F5> subgroup) {
  const std::set<Mat2F5> elements(subgroup.begin(), subgroup.end());
  std::set<Mat2F5> commutators;
  for (const Mat2F5& x : elements) {
    for (const Mat2F5& y : elements) commutators.insert(x * y * x.inverse() * y.inverse());
  }
  return generated_subgroup(commutators).size() == elements.size();
}

bool verify_perfect() { return verify_perfect(enumerate_group()); }

std::vector<Mat2F5> cyclic_subgroup(const Mat2F5& g) { return generated_subgroup({g}); }

std::map<int, int> element_order_census() {
  std::map<int, int> census;
  for (const Mat2F5& x : enumerate_group()) ++census[x.order()];
  return census;
}

int quotient_order() {
  std::set<Mat2F5> cosets;
  for (const Mat2F5& x : enumerate_group()) cosets.insert(coset_rep(x));
  return static_cast<int>(cosets.size());
}

bool presentation_relations_hold(const PresentationTriple& t) {
  const Mat2F5 id = Mat2F5::identity();
  for (const Mat2F5& x : {t.x1, t.x2, t.x3}) {
    if (x * t.h != t.h * x) return false;
  }
  return t.x1 * t.x2 * t.x3 == id && t.x1.pow(2) == t.h && t.x2.pow(-3) == t.h && t.x3.pow(-5) == t.h &&
         t.h != id && t.h.pow(2) == id;
}

PresentationTriple find_presentation_triple() {
  const Mat2F5 h = Mat2F5::minus_identity();
  for (const Mat2F5& x1 : enumerate_group()) {
    if (x1.order() != 4) continue;
    for (const Mat2F5& x2 : enumerate_group()) {
      if (x2.order() != 6) continue;
      const Mat2F5 x3 = (x1 * x2).inverse();
      if (x3.order() != 10) continue;
      PresentationTriple t{h, x1, x2, x3};
      if (presentation_relations_hold(t)) return t;
    }
  }
  throw Error(ErrorKind::kInternalInvariant, "no matrix triple satisfies the presentation");
}

RestrictionProfile regular_restriction_profile(int m) {
  const PresentationTriple t = find_presentation_triple();
  Mat2F5 y = Mat2F5::identity();
  switch (m) {
    case 2: y = t.x1; break;
    case 3: y = t.x2; break;
    case 5: y = t.x3; break;
    default: throw Error(ErrorKind::kInvalidArgument, "subgroup order must be 2, 3 or 5");
  }
  std::set<Mat2F5> cosets;
  for (const Mat2F5& x : enumerate_group()) cosets.insert(coset_rep(x));

  RestrictionProfile profile;
  profile.subgroup_order = m;
  Mat2F5 yk = Mat2F5::identity();
  for (int k = 0; k < m; ++k) {
    std::int64_t fixed = 0;
    for (const Mat2F5& c : cosets) fixed += coset_rep(yk * c) == c ? 1 : 0;
    profile.character.push_back(2 * fixed);  // two copies of the permutation representation
    yk = yk * y;
  }
  profile.dimension = static_cast<int>(profile.character.front());

  for (int c = 0; c < m; ++c) {
    CyclotomicInt sum(m);
    for (int k = 0; k < m; ++k) sum += profile.character[k] * CyclotomicInt::root_power(m, -c * k);
    const auto value = sum.as_integer();
    if (!value || *value % m != 0) {
      throw Error(ErrorKind::kInternalInvariant, "character does not decompose over Z/" + std::to_string(m));
    }
    profile.multiplicities.push_back(static_cast<int>(*value / m));
  }
  const int first = profile.multiplicities.front();
  if (!std::all_of(profile.multiplicities.begin(), profile.multiplicities.end(),
                   [&](int mu) { return mu == first; })) {
    throw Error(ErrorKind::kInternalInvariant, "restriction is not a multiple of the regular representation");
  }
  profile.copies = first;
  return profile;
}

}  // namespace spinsurf
