#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinsurf {

/// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(int m);

/// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1},
/// reduced modulo the m-th cyclotomic polynomial. Equality is exact.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int m);

  static CyclotomicInt integer(int m, std::int64_t value);
  /// zeta_m^k for any integer k.
  static CyclotomicInt root_power(int m, std::int64_t k);

  int order() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  /// The value when it lies in Z.
  std::optional<std::int64_t> as_integer() const;

  CyclotomicInt& operator+=(const CyclotomicInt& rhs);
  CyclotomicInt& operator-=(const CyclotomicInt& rhs);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(std::int64_t c, const CyclotomicInt& a);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) = default;

  std::string str() const;

 private:
  CyclotomicInt(int m, std::vector<std::int64_t> unreduced);

  int m_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace spinsurf
