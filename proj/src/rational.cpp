#include "spinsurf/rational.hpp"

#include <cctype>

#include "spinsurf/errors.hpp"

namespace spinsurf {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorKind::kParseError, "empty integer literal '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::kParseError, "invalid integer literal '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  // Boost rejects negative denominators; move the sign to the numerator.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::kInvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigInt Rational::floor() const {
  const BigInt n = num();
  const BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

ModZ::ModZ(const Rational& value) : residue_(value - Rational(value.floor())) {}

std::optional<Rational> ModZ::alias() const {
  if (residue_ > Rational(BigInt(1), BigInt(2))) return residue_ - Rational(1);
  return std::nullopt;
}

std::string ModZ::str() const {
  std::string out = residue_.str();
  if (auto a = alias()) out += " (alias " + a->str() + ")";
  return out;
}

ModZ modz_add(const ModZ& a, const ModZ& b) { return a + b; }

ModZ modz_scale(const ModZ& v, const BigInt& factor) { return ModZ(v.residue() * Rational(factor)); }

std::optional<std::int64_t> modz_order(const ModZ& v, std::int64_t cap) {
  if (cap < 1) throw Error(ErrorKind::kInvalidArgument, "order cap must be at least 1");
  // The order is exactly the reduced denominator of the residue.
  const BigInt den = v.residue().den();
  if (den > cap) return std::nullopt;
  return static_cast<std::int64_t>(den);
}

}  // namespace spinsurf
