#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinsurf {

using BigInt = boost::multiprecision::cpp_int;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& value);

/// Exact rational number, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q" and optional leading sign.
  static Rational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  /// Greatest integer not exceeding the value.
  BigInt floor() const;
  Rational abs() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

/// Element of Q/Z, held by its canonical representative in [0, 1).
class ModZ {
 public:
  ModZ() = default;
  ModZ(const Rational& value);  // NOLINT(implicit)

  const Rational& residue() const { return residue_; }

  /// The representative in (-1/2, 0) when the residue exceeds 1/2, which is
  /// how these values are usually written (-1/12 rather than 11/12).
  std::optional<Rational> alias() const;

  /// Human form: "11/12 (alias -1/12)" or just "1/2".
  std::string str() const;

  friend ModZ operator+(const ModZ& a, const ModZ& b) { return ModZ(a.residue_ + b.residue_); }
  friend ModZ operator-(const ModZ& a, const ModZ& b) { return ModZ(a.residue_ - b.residue_); }
  friend ModZ operator-(const ModZ& a) { return ModZ(-a.residue_); }
  friend bool operator==(const ModZ& a, const ModZ& b) { return a.residue_ == b.residue_; }

 private:
  Rational residue_;
};

ModZ modz_add(const ModZ& a, const ModZ& b);
ModZ modz_scale(const ModZ& v, const BigInt& factor);

/// Least m in [1, cap] with m*v = 0 in Q/Z, or nullopt if there is none.
std::optional<std::int64_t> modz_order(const ModZ& v, std::int64_t cap);

}  // namespace spinsurf
