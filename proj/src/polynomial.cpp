#include "spinsurf/polynomial.hpp"

#include <algorithm>
#include <set>

#include "spinsurf/errors.hpp"

namespace spinsurf {

IntPolynomial::IntPolynomial(std::vector<std::string> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen(generators_.begin(), generators_.end());
  if (seen.size() != generators_.size()) throw Error(ErrorKind::kInvalidArgument, "duplicate generator name");
}

IntPolynomial IntPolynomial::constant(std::vector<std::string> generators, const BigInt& c) {
  IntPolynomial p(std::move(generators));
  p.add_term(Exponents(p.generators_.size(), 0), c);
  return p;
}

IntPolynomial IntPolynomial::generator(std::vector<std::string> generators, const std::string& name) {
  return monomial(std::move(generators), name, 1, 1);
}

IntPolynomial IntPolynomial::monomial(std::vector<std::string> generators, const std::string& name, int power,
                                      const BigInt& c) {
  IntPolynomial p(std::move(generators));
  if (power < 0) throw Error(ErrorKind::kInvalidArgument, "negative exponent");
  Exponents e(p.generators_.size(), 0);
  e[p.index_of(name)] = power;
  p.add_term(e, c);
  return p;
}

int IntPolynomial::index_of(const std::string& name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw Error(ErrorKind::kInvalidArgument, "unknown generator '" + name + "'");
  return static_cast<int>(it - generators_.begin());
}

BigInt IntPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const Exponents& exponents, const BigInt& c) {
  if (exponents.size() != generators_.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "exponent vector length does not match generators");
  }
  if (c == 0) return;
  BigInt& slot = terms_[exponents];
  slot += c;
  if (slot == 0) terms_.erase(exponents);
}

void IntPolynomial::check_compatible(const IntPolynomial& other) const {
  if (generators_ != other.generators_) {
    throw Error(ErrorKind::kDimensionMismatch, "polynomials over different generator lists");
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_compatible(b);
  IntPolynomial out(a.generators_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      IntPolynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorKind::kInvalidArgument, "negative power");
  IntPolynomial result = constant(generators_, 1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

IntPolynomial IntPolynomial::substitute(const std::vector<std::string>& target_generators,
                                        const std::map<std::string, IntPolynomial>& images) const {
  IntPolynomial out(target_generators);
  for (const auto& [e, c] : terms_) {
    IntPolynomial term = constant(target_generators, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = images.find(generators_[i]);
      if (it == images.end()) {
        throw Error(ErrorKind::kInvalidArgument, "no image for generator '" + generators_[i] + "'");
      }
      term = term * it->second.pow(e[i]);
    }
    out += term;
  }
  return out;
}

BigInt IntPolynomial::evaluate(const std::vector<BigInt>& point) const {
  if (point.size() != generators_.size()) throw Error(ErrorKind::kDimensionMismatch, "point dimension");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += generators_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  return a.generators_ == b.generators_ && a.terms_ == b.terms_;
}

namespace {

IntPolynomial reduce_two_c3(const IntPolynomial& p) {
  IntPolynomial out(QuotientedPolynomial::generators());
  if (p.generators() != QuotientedPolynomial::generators()) {
    throw Error(ErrorKind::kDimensionMismatch, "quotient ring lives on generators (c2, c3)");
  }
  for (const auto& [e, c] : p.terms()) {
    if (e[1] > 0) {
      BigInt r = c % 2;
      if (r < 0) r += 2;
      out.add_term(e, r);
    } else {
      out.add_term(e, c);
    }
  }
  return out;
}

}  // namespace

QuotientedPolynomial::QuotientedPolynomial() : base_(generators()) {}

QuotientedPolynomial::QuotientedPolynomial(const IntPolynomial& base) : base_(reduce_two_c3(base)) {}

const std::vector<std::string>& QuotientedPolynomial::generators() {
  static const std::vector<std::string> gens{"c2", "c3"};
  return gens;
}

QuotientedPolynomial operator+(const QuotientedPolynomial& a, const QuotientedPolynomial& b) {
  return QuotientedPolynomial(a.base_ + b.base_);
}

QuotientedPolynomial operator-(const QuotientedPolynomial& a, const QuotientedPolynomial& b) {
  return QuotientedPolynomial(a.base_ - b.base_);
}

QuotientedPolynomial operator*(const QuotientedPolynomial& a, const QuotientedPolynomial& b) {
  return QuotientedPolynomial(a.base_ * b.base_);
}

QuotientedPolynomial operator*(const BigInt& c, const QuotientedPolynomial& a) {
  return QuotientedPolynomial(c * a.base_);
}

}  // namespace spinsurf
