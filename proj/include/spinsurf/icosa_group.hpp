#pragma once

// The binary icosahedral group modelled as SL2(F5).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace spinsurf {

/// 2x2 matrix over F5 with determinant 1, entries row-major.
class Mat2F5 {
 public:
  Mat2F5(int a, int b, int c, int d);

  static Mat2F5 identity() { return Mat2F5(1, 0, 0, 1); }
  static Mat2F5 minus_identity() { return Mat2F5(4, 0, 0, 4); }

  int entry(int row, int col) const { return e_[2 * row + col]; }
  Mat2F5 inverse() const;
  Mat2F5 negated() const;
  Mat2F5 pow(int k) const;
  int order() const;
  std::string str() const;

  friend Mat2F5 operator*(const Mat2F5& x, const Mat2F5& y);
  friend bool operator==(const Mat2F5&, const Mat2F5&) = default;
  friend auto operator<=>(const Mat2F5&, const Mat2F5&) = default;

 private:
  std::array<std::uint8_t, 4> e_;
};

/// All 120 elements, sorted; computed once.
const std::vector<Mat2F5>& enumerate_group();

std::vector<Mat2F5> group_center();

/// True when the commutators of `subgroup` generate all of it.
bool verify_perfect(std::span<const Mat2F5> subgroup);
bool verify_perfect();

/// Cyclic subgroup generated by g.
std::vector<Mat2F5> cyclic_subgroup(const Mat2F5& g);

std::map<int, int> element_order_census();

/// Number of cosets of the center, i.e. the order of the icosahedral group.
int quotient_order();

/// Images of h, x1, x2, x3 satisfying [h, xi] = 1, x1 x2 x3 = 1 and
/// x1^2 = x2^{-3} = x3^{-5} = h with h = -I.
struct PresentationTriple {
  Mat2F5 h;
  Mat2F5 x1;
  Mat2F5 x2;
  Mat2F5 x3;
};

PresentationTriple find_presentation_triple();
bool presentation_relations_hold(const PresentationTriple& t);

/// Restriction of 2 * (pullback of the regular representation of the
/// icosahedral group) to a cyclic subgroup of order m of the quotient.
struct RestrictionProfile {
  int subgroup_order = 0;
  int dimension = 0;
  int copies = 0;                      // of the regular representation of Z/m
  std::vector<int> multiplicities;     // of zeta_m^c, c = 0..m-1
  std::vector<std::int64_t> character; // at y^k, k = 0..m-1
};

/// m in {2, 3, 5}. Multiplicities come from the character, which is
/// computed by counting fixed cosets of the center over the enumerated group.
RestrictionProfile regular_restriction_profile(int m);

}  // namespace spinsurf
