#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinsurf/rational.hpp"

namespace spinsurf {

/// Multivariate polynomial with integer coefficients in an ordered list of
/// named generators. Zero coefficients are never stored.
class IntPolynomial {
 public:
  using Exponents = std::vector<int>;

  explicit IntPolynomial(std::vector<std::string> generators);

  static IntPolynomial constant(std::vector<std::string> generators, const BigInt& c);
  static IntPolynomial generator(std::vector<std::string> generators, const std::string& name);
  /// c * name^power
  static IntPolynomial monomial(std::vector<std::string> generators, const std::string& name,
                                int power, const BigInt& c);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the monomial; zero when absent.
  BigInt coefficient(const Exponents& exponents) const;
  void add_term(const Exponents& exponents, const BigInt& c);

  int index_of(const std::string& name) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  IntPolynomial pow(int e) const;

  /// Replaces every generator by a polynomial over `target_generators`.
  /// Generators missing from `images` must not occur in any term.
  IntPolynomial substitute(const std::vector<std::string>& target_generators,
                           const std::map<std::string, IntPolynomial>& images) const;

  /// Value at integer points, one per generator.
  BigInt evaluate(const std::vector<BigInt>& point) const;

  /// e.g. "2*c1^2 - 8*c2"; "0" for the zero polynomial. Terms are printed in
  /// decreasing lexicographic exponent order.
  std::string str() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void check_compatible(const IntPolynomial& other) const;

  std::vector<std::string> generators_;
  std::map<Exponents, BigInt> terms_;
};

/// Polynomial in c2, c3 modulo the relation 2*c3 = 0: every monomial that
/// contains c3 carries a coefficient in {0, 1}.
class QuotientedPolynomial {
 public:
  QuotientedPolynomial();
  explicit QuotientedPolynomial(const IntPolynomial& base);

  static const std::vector<std::string>& generators();

  const IntPolynomial& base() const { return base_; }
  bool is_zero() const { return base_.is_zero(); }
  std::string str() const { return base_.str(); }

  friend QuotientedPolynomial operator+(const QuotientedPolynomial& a, const QuotientedPolynomial& b);
  friend QuotientedPolynomial operator-(const QuotientedPolynomial& a, const QuotientedPolynomial& b);
  friend QuotientedPolynomial operator*(const QuotientedPolynomial& a, const QuotientedPolynomial& b);
  friend QuotientedPolynomial operator*(const BigInt& c, const QuotientedPolynomial& a);
  friend bool operator==(const QuotientedPolynomial& a, const QuotientedPolynomial& b) {
    return a.base_ == b.base_;
  }

 private:
  IntPolynomial base_;
};

}  // namespace spinsurf
