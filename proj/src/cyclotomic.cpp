#include "spinsurf/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; throws if there is a remainder.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw Error(ErrorKind::kInternalInvariant, "cyclotomic division underflow");
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::int64_t r : num) {
    if (r != 0) throw Error(ErrorKind::kInternalInvariant, "cyclotomic division left a remainder");
  }
  return q;
}

// Remainder modulo a monic polynomial.
Poly reduce_mod(Poly p, const Poly& modulus) {
  const std::size_t dn = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > dn;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) p[i - dn + j] -= c * modulus[j];
  }
  p.resize(dn, 0);
  return p;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(m, p);
  return p;
}

CyclotomicInt::CyclotomicInt(int m) : m_(m), coeffs_(cyclotomic_polynomial(m).size() - 1, 0) {}

CyclotomicInt::CyclotomicInt(int m, std::vector<std::int64_t> unreduced)
    : m_(m), coeffs_(reduce_mod(std::move(unreduced), cyclotomic_polynomial(m))) {}

CyclotomicInt CyclotomicInt::integer(int m, std::int64_t value) { return CyclotomicInt(m, Poly{value}); }

CyclotomicInt CyclotomicInt::root_power(int m, std::int64_t k) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "cyclotomic order must be positive");
  std::int64_t e = k % m;
  if (e < 0) e += m;
  Poly p(e + 1, 0);
  p[e] = 1;
  return CyclotomicInt(m, std::move(p));
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_.at(0);
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
  if (m_ != rhs.m_) throw Error(ErrorKind::kDimensionMismatch, "cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
  if (m_ != rhs.m_) throw Error(ErrorKind::kDimensionMismatch, "cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicInt operator*(std::int64_t c, const CyclotomicInt& a) {
  CyclotomicInt out = a;
  for (std::int64_t& x : out.coeffs_) x *= c;
  return out;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.m_ != b.m_) throw Error(ErrorKind::kDimensionMismatch, "cyclotomic orders differ");
  Poly prod(a.coeffs_.size() + b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicInt(a.m_, std::move(prod));
}

std::string CyclotomicInt::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(coeffs_[i]);
    if (i > 0) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace spinsurf
