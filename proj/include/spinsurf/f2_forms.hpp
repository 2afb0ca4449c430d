#pragma once

// Quadratic refinements of symplectic forms on F2^{2g}.
//
// Coordinates follow the symplectic basis a_1..a_g, b_1..b_g: bit i of a
// vector is the a_{i+1} coordinate for i < g and the b_{i-g+1} coordinate
// otherwise.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace spinsurf {

inline constexpr int kMaxGenus = 32;
inline constexpr int kDefaultEnumerationCap = 8;

class F2Vector {
 public:
  F2Vector(int g, std::uint64_t bits);

  static F2Vector zero(int g) { return F2Vector(g, 0); }
  static F2Vector basis(int g, int index);

  int genus() const { return g_; }
  int dimension() const { return 2 * g_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }

  friend F2Vector operator+(const F2Vector& x, const F2Vector& y);
  friend bool operator==(const F2Vector& x, const F2Vector& y) = default;

 private:
  int g_;
  std::uint64_t bits_;
};

/// Nondegenerate alternating pairing on F2^{2g}: either the standard one
/// (a_i . b_i = 1, all other basis pairs 0) or an explicit Gram matrix.
class SymplecticPairing {
 public:
  static SymplecticPairing standard(int g);

  /// rows[i] bit j is e_i . e_j. Rejects odd size, asymmetric or
  /// non-alternating matrices; rank is checked by symplectic_basis.
  static SymplecticPairing from_matrix(const std::vector<std::uint64_t>& rows);

  int genus() const { return g_; }
  int dimension() const { return 2 * g_; }
  bool is_standard() const { return !rows_.has_value(); }

  /// e_i . e_j as a Gram-matrix row.
  std::uint64_t row(int i) const;
  int pair(const F2Vector& x, const F2Vector& y) const;

  friend bool operator==(const SymplecticPairing&, const SymplecticPairing&) = default;

 private:
  SymplecticPairing(int g, std::optional<std::vector<std::uint64_t>> rows)
      : g_(g), rows_(std::move(rows)) {}

  int g_;
  std::optional<std::vector<std::uint64_t>> rows_;
};

struct ArfValue {
  int additive = 0;  // Arf(q) in F2

  int multiplicative() const { return additive == 0 ? 1 : -1; }
  static ArfValue from_multiplicative(int sign);
  friend bool operator==(const ArfValue&, const ArfValue&) = default;
};

/// Quadratic form q with q(x+y) = q(x) + q(y) + x.y, stored by its values on
/// the coordinate basis vectors e_1..e_{2g}.
class QuadraticForm {
 public:
  QuadraticForm(SymplecticPairing pairing, std::uint64_t basis_values);

  /// Standard pairing; bitstring character i is q(e_{i+1}), length 2g.
  static QuadraticForm from_bitstring(int g, std::string_view bits);

  int genus() const { return pairing_.genus(); }
  int dimension() const { return pairing_.dimension(); }
  const SymplecticPairing& pairing() const { return pairing_; }
  std::uint64_t basis_values() const { return basis_values_; }
  std::string bitstring() const;

  int eval(const F2Vector& x) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  SymplecticPairing pairing_;
  std::uint64_t basis_values_;
};

/// Symplectic basis (a_1..a_g, b_1..b_g) of the pairing by F2 Gram-Schmidt.
/// For the standard pairing this is the standard basis.
std::vector<F2Vector> symplectic_basis(const SymplecticPairing& pairing);

ArfValue arf_basis(const QuadraticForm& q);

/// Sum of q(a_i) q(b_i) over a caller-supplied symplectic basis.
ArfValue arf_in_basis(const QuadraticForm& q, const std::vector<F2Vector>& basis);

/// Gauss sum 2^{-g} sum_x (-1)^{q(x)}, which must be +-1.
ArfValue arf_gauss(const QuadraticForm& q, int cap = kDefaultEnumerationCap);

std::uint64_t count_zeros(const QuadraticForm& q, int cap = kDefaultEnumerationCap);

std::vector<QuadraticForm> enumerate_forms(int g, int cap = kDefaultEnumerationCap);

struct ArfCounts {
  std::uint64_t n_plus = 0;
  std::uint64_t n_minus = 0;
  friend bool operator==(const ArfCounts&, const ArfCounts&) = default;
};

/// Counts forms by Arf invariant by enumeration; throws kInternalInvariant
/// if the counts disagree with 2^{g-1}(2^g +- 1).
ArfCounts count_by_arf(int g, int cap = kDefaultEnumerationCap);
ArfCounts count_by_arf_closed_form(int g);

/// Orthogonal sum on the standard 2(g1+g2)-space; a-coordinates of q1 come
/// first, then those of q2, and likewise for b.
QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2);

/// Linear map F2^{2g} -> F2^{2g} given by the images of e_1..e_{2g}.
class F2Matrix {
 public:
  explicit F2Matrix(std::vector<F2Vector> columns);
  static F2Matrix identity(int g);

  int genus() const;
  const std::vector<F2Vector>& columns() const { return columns_; }
  F2Vector apply(const F2Vector& x) const;
  F2Matrix compose(const F2Matrix& inner) const;  // this * inner
  bool preserves(const SymplecticPairing& pairing) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::vector<F2Vector> columns_;
};

/// Symplectic transvection x -> x + (x.v) v for the given pairing.
F2Matrix transvection(const SymplecticPairing& pairing, const F2Vector& v);

/// Product of `steps` random transvections; these generate Sp(2g, F2).
F2Matrix random_symplectic(const SymplecticPairing& pairing, std::mt19937_64& rng, int steps = 24);

/// All symplectic automorphisms of the standard pairing, g <= 2
/// (6 elements for g = 1, 720 for g = 2).
std::vector<F2Matrix> enumerate_symplectic_group(int g);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<F2Matrix> witness;  // T with q2(T x) = q1(x)
};

/// Isomorphic iff dimensions and Arf invariants agree. With want_witness
/// (only for g <= 2) an explicit symplectic T is found by exhaustive search.
IsomorphismResult forms_isomorphic(const QuadraticForm& q1, const QuadraticForm& q2,
                                   bool want_witness = false);

}  // namespace spinsurf
