#include "spinsurf/f2_forms.hpp"

#include <bit>
#include <functional>

#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

void check_genus(int g) {
  if (g < 1 || g > kMaxGenus) {
    throw Error(ErrorKind::kInvalidArgument, "genus must be in [1, 32], got " + std::to_string(g));
  }
}

void check_cap(int g, int cap) {
  check_genus(g);
  // 2^{2g} elements have to be addressable by a 64-bit counter.
  if (g > cap || g > 31) {
    throw Error(ErrorKind::kEnumerationCap,
                "enumeration over genus " + std::to_string(g) + " exceeds cap " + std::to_string(cap));
  }
}

void check_same_dimension(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::kDimensionMismatch,
                "dimension " + std::to_string(a) + " does not match " + std::to_string(b));
  }
}

}  // namespace

F2Vector::F2Vector(int g, std::uint64_t bits) : g_(g), bits_(bits) {
  check_genus(g);
  if ((bits & ~low_mask(2 * g)) != 0) {
    throw Error(ErrorKind::kDimensionMismatch, "vector has bits outside F2^" + std::to_string(2 * g));
  }
}

F2Vector F2Vector::basis(int g, int index) {
  if (index < 0 || index >= 2 * g) throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  return F2Vector(g, std::uint64_t{1} << index);
}

F2Vector operator+(const F2Vector& x, const F2Vector& y) {
  check_same_dimension(x.dimension(), y.dimension());
  return F2Vector(x.g_, x.bits_ ^ y.bits_);
}

SymplecticPairing SymplecticPairing::standard(int g) {
  check_genus(g);
  return SymplecticPairing(g, std::nullopt);
}

SymplecticPairing SymplecticPairing::from_matrix(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0 || n % 2 != 0 || n > 2 * kMaxGenus) {
    throw Error(ErrorKind::kDimensionMismatch, "pairing matrix must have even positive size");
  }
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~low_mask(n)) != 0) throw Error(ErrorKind::kDimensionMismatch, "row wider than matrix");
    if ((rows[i] >> i) & 1U) throw Error(ErrorKind::kDegeneratePairing, "pairing is not alternating");
    for (int j = 0; j < i; ++j) {
      if (((rows[i] >> j) & 1U) != ((rows[j] >> i) & 1U)) {
        throw Error(ErrorKind::kInvalidArgument, "pairing matrix is not symmetric");
      }
    }
  }
  return SymplecticPairing(n / 2, rows);
}

std::uint64_t SymplecticPairing::row(int i) const {
  if (rows_) return (*rows_).at(i);
  return i < g_ ? std::uint64_t{1} << (i + g_) : std::uint64_t{1} << (i - g_);
}

int SymplecticPairing::pair(const F2Vector& x, const F2Vector& y) const {
  check_same_dimension(x.dimension(), dimension());
  check_same_dimension(y.dimension(), dimension());
  if (!rows_) {
    const std::uint64_t m = low_mask(g_);
    const std::uint64_t xa = x.bits() & m, xb = x.bits() >> g_;
    const std::uint64_t ya = y.bits() & m, yb = y.bits() >> g_;
    return parity((xa & yb) ^ (xb & ya));
  }
  int acc = 0;
  for (std::uint64_t xs = x.bits(); xs != 0; xs &= xs - 1) {
    acc ^= parity((*rows_)[std::countr_zero(xs)] & y.bits());
  }
  return acc;
}

ArfValue ArfValue::from_multiplicative(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::kInvalidArgument, "arf must be +1 or -1");
  return ArfValue{sign == 1 ? 0 : 1};
}

QuadraticForm::QuadraticForm(SymplecticPairing pairing, std::uint64_t basis_values)
    : pairing_(std::move(pairing)), basis_values_(basis_values) {
  if ((basis_values & ~low_mask(pairing_.dimension())) != 0) {
    throw Error(ErrorKind::kDimensionMismatch, "basis values wider than the space");
  }
}

QuadraticForm QuadraticForm::from_bitstring(int g, std::string_view bits) {
  check_genus(g);
  if (static_cast<int>(bits.size()) != 2 * g) {
    throw Error(ErrorKind::kDimensionMismatch,
                "basis_values must have length 2g = " + std::to_string(2 * g));
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 2 * g; ++i) {
    if (bits[i] == '1') {
      v |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::kParseError, "basis_values must be a bitstring");
    }
  }
  return QuadraticForm(SymplecticPairing::standard(g), v);
}

std::string QuadraticForm::bitstring() const {
  std::string s(dimension(), '0');
  for (int i = 0; i < dimension(); ++i) {
    if ((basis_values_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

int QuadraticForm::eval(const F2Vector& x) const {
  check_same_dimension(x.dimension(), dimension());
  // sum_i x_i q(e_i) + sum_{i<j} x_i x_j (e_i . e_j)
  int value = parity(x.bits() & basis_values_);
  if (pairing_.is_standard()) {
    const int g = genus();
    return value ^ parity((x.bits() & low_mask(g)) & (x.bits() >> g));
  }
  for (std::uint64_t xs = x.bits(); xs != 0; xs &= xs - 1) {
    const int i = std::countr_zero(xs);
    const std::uint64_t above = ~low_mask(i + 1);
    value ^= parity(pairing_.row(i) & x.bits() & above);
  }
  return value;
}

std::vector<F2Vector> symplectic_basis(const SymplecticPairing& pairing) {
  const int g = pairing.genus();
  const int n = 2 * g;
  std::vector<F2Vector> basis;
  basis.reserve(n);
  if (pairing.is_standard()) {
    for (int i = 0; i < n; ++i) basis.push_back(F2Vector::basis(g, i));
    return basis;
  }
  std::vector<F2Vector> remaining;
  for (int i = 0; i < n; ++i) remaining.push_back(F2Vector::basis(g, i));
  std::vector<F2Vector> as, bs;
  while (!remaining.empty()) {
    const F2Vector u = remaining.front();
    remaining.erase(remaining.begin());
    auto partner = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (pairing.pair(u, *it) == 1) {
        partner = it;
        break;
      }
    }
    if (partner == remaining.end()) {
      throw Error(ErrorKind::kDegeneratePairing, "pairing is degenerate (rank deficient)");
    }
    const F2Vector v = *partner;
    remaining.erase(partner);
    for (F2Vector& w : remaining) {
      F2Vector projected = w;
      if (pairing.pair(w, v) == 1) projected = projected + u;
      if (pairing.pair(w, u) == 1) projected = projected + v;
      w = projected;
    }
    as.push_back(u);
    bs.push_back(v);
  }
  basis = as;
  basis.insert(basis.end(), bs.begin(), bs.end());
  return basis;
}

ArfValue arf_in_basis(const QuadraticForm& q, const std::vector<F2Vector>& basis) {
  const int g = q.genus();
  if (static_cast<int>(basis.size()) != 2 * g) {
    throw Error(ErrorKind::kDimensionMismatch, "basis must have 2g vectors");
  }
  const SymplecticPairing& p = q.pairing();
  for (int i = 0; i < 2 * g; ++i) {
    for (int j = 0; j < 2 * g; ++j) {
      const int expected = (j == i + g || i == j + g) ? 1 : 0;
      if (p.pair(basis[i], basis[j]) != expected) {
        throw Error(ErrorKind::kInvalidArgument, "supplied basis is not symplectic");
      }
    }
  }
  int arf = 0;
  for (int i = 0; i < g; ++i) arf ^= q.eval(basis[i]) & q.eval(basis[g + i]);
  return ArfValue{arf};
}

ArfValue arf_basis(const QuadraticForm& q) {
  if (q.pairing().is_standard()) {
    const int g = q.genus();
    const std::uint64_t bv = q.basis_values();
    return ArfValue{parity((bv & low_mask(g)) & (bv >> g))};
  }
  return arf_in_basis(q, symplectic_basis(q.pairing()));
}

ArfValue arf_gauss(const QuadraticForm& q, int cap) {
  const int g = q.genus();
  check_cap(g, cap);
  const std::uint64_t count = std::uint64_t{1} << (2 * g);
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < count; ++x) sum += q.eval(F2Vector(g, x)) == 0 ? 1 : -1;
  const std::int64_t scale = std::int64_t{1} << g;
  if (sum != scale && sum != -scale) {
    throw Error(ErrorKind::kInternalInvariant,
                "Gauss sum " + std::to_string(sum) + " is not +-2^g; the form violates the quadratic law");
  }
  return ArfValue::from_multiplicative(sum > 0 ? 1 : -1);
}

std::uint64_t count_zeros(const QuadraticForm& q, int cap) {
  const int g = q.genus();
  check_cap(g, cap);
  const std::uint64_t count = std::uint64_t{1} << (2 * g);
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < count; ++x) zeros += q.eval(F2Vector(g, x)) == 0 ? 1 : 0;
  return zeros;
}

std::vector<QuadraticForm> enumerate_forms(int g, int cap) {
  check_cap(g, cap);
  const std::uint64_t count = std::uint64_t{1} << (2 * g);
  const SymplecticPairing pairing = SymplecticPairing::standard(g);
  std::vector<QuadraticForm> forms;
  forms.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) forms.emplace_back(pairing, v);
  return forms;
}

ArfCounts count_by_arf_closed_form(int g) {
  check_cap(g, 31);
  const std::uint64_t half = std::uint64_t{1} << (g - 1);
  const std::uint64_t full = std::uint64_t{1} << g;
  return ArfCounts{half * (full + 1), half * (full - 1)};
}

ArfCounts count_by_arf(int g, int cap) {
  check_cap(g, cap);
  ArfCounts counts;
  const std::uint64_t count = std::uint64_t{1} << (2 * g);
  const SymplecticPairing pairing = SymplecticPairing::standard(g);
  for (std::uint64_t v = 0; v < count; ++v) {
    if (arf_basis(QuadraticForm(pairing, v)).additive == 0) {
      ++counts.n_plus;
    } else {
      ++counts.n_minus;
    }
  }
  if (counts != count_by_arf_closed_form(g)) {
    throw Error(ErrorKind::kInternalInvariant, "form counts disagree with the closed form");
  }
  return counts;
}

QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (!q1.pairing().is_standard() || !q2.pairing().is_standard()) {
    throw Error(ErrorKind::kInvalidArgument, "direct_sum needs forms on standard pairings");
  }
  const int g1 = q1.genus(), g2 = q2.genus();
  const int g = g1 + g2;
  check_genus(g);
  const std::uint64_t v1 = q1.basis_values(), v2 = q2.basis_values();
  const std::uint64_t a = (v1 & low_mask(g1)) | ((v2 & low_mask(g2)) << g1);
  const std::uint64_t b = (v1 >> g1) | ((v2 >> g2) << g1);
  return QuadraticForm(SymplecticPairing::standard(g), a | (b << g));
}

F2Matrix::F2Matrix(std::vector<F2Vector> columns) : columns_(std::move(columns)) {
  if (columns_.empty() || columns_.size() % 2 != 0) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix needs 2g columns");
  }
  for (const F2Vector& c : columns_) check_same_dimension(c.dimension(), static_cast<int>(columns_.size()));
}

F2Matrix F2Matrix::identity(int g) {
  std::vector<F2Vector> cols;
  for (int i = 0; i < 2 * g; ++i) cols.push_back(F2Vector::basis(g, i));
  return F2Matrix(std::move(cols));
}

int F2Matrix::genus() const { return static_cast<int>(columns_.size()) / 2; }

F2Vector F2Matrix::apply(const F2Vector& x) const {
  check_same_dimension(x.dimension(), static_cast<int>(columns_.size()));
  std::uint64_t out = 0;
  for (std::uint64_t xs = x.bits(); xs != 0; xs &= xs - 1) out ^= columns_[std::countr_zero(xs)].bits();
  return F2Vector(genus(), out);
}

F2Matrix F2Matrix::compose(const F2Matrix& inner) const {
  std::vector<F2Vector> cols;
  cols.reserve(inner.columns_.size());
  for (const F2Vector& c : inner.columns_) cols.push_back(apply(c));
  return F2Matrix(std::move(cols));
}

bool F2Matrix::preserves(const SymplecticPairing& pairing) const {
  const int n = static_cast<int>(columns_.size());
  check_same_dimension(n, pairing.dimension());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int before = static_cast<int>((pairing.row(i) >> j) & 1U);
      if (pairing.pair(columns_[i], columns_[j]) != before) return false;
    }
  }
  return true;
}

F2Matrix transvection(const SymplecticPairing& pairing, const F2Vector& v) {
  const int g = pairing.genus();
  std::vector<F2Vector> cols;
  for (int i = 0; i < 2 * g; ++i) {
    const F2Vector e = F2Vector::basis(g, i);
    cols.push_back(pairing.pair(e, v) == 1 ? e + v : e);
  }
  return F2Matrix(std::move(cols));
}

F2Matrix random_symplectic(const SymplecticPairing& pairing, std::mt19937_64& rng, int steps) {
  const int g = pairing.genus();
  std::uniform_int_distribution<std::uint64_t> dist(1, low_mask(2 * g));
  F2Matrix m = F2Matrix::identity(g);
  for (int s = 0; s < steps; ++s) m = transvection(pairing, F2Vector(g, dist(rng))).compose(m);
  return m;
}

namespace {

// Backtracking over images of e_1..e_{2g} subject to the pairing being
// carried from `source` to `target` and, when forms are given, q2(T e_i) =
// q1(e_i). Such maps are automatically injective since `source` is
// nondegenerate.
void search_isometries(const SymplecticPairing& source, const SymplecticPairing& target,
                       const QuadraticForm* q1, const QuadraticForm* q2, bool stop_at_first,
                       std::vector<F2Matrix>& out) {
  const int g = source.genus();
  const int n = 2 * g;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<F2Vector> images;
  images.reserve(n);
  std::function<bool(int)> recurse = [&](int i) -> bool {
    if (i == n) {
      out.emplace_back(images);
      return stop_at_first;
    }
    const F2Vector ei = F2Vector::basis(g, i);
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      const F2Vector candidate(g, bits);
      if (q1 != nullptr && q2->eval(candidate) != q1->eval(ei)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = target.pair(images[j], candidate) == static_cast<int>((source.row(j) >> i) & 1U);
      }
      if (!ok) continue;
      images.push_back(candidate);
      if (recurse(i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  recurse(0);
}

}  // namespace

std::vector<F2Matrix> enumerate_symplectic_group(int g) {
  if (g < 1 || g > 2) throw Error(ErrorKind::kWitnessUnsupported, "symplectic group enumeration only for g <= 2");
  const SymplecticPairing p = SymplecticPairing::standard(g);
  std::vector<F2Matrix> out;
  search_isometries(p, p, nullptr, nullptr, false, out);
  return out;
}

IsomorphismResult forms_isomorphic(const QuadraticForm& q1, const QuadraticForm& q2, bool want_witness) {
  IsomorphismResult result;
  if (want_witness && (q1.genus() > 2 || q2.genus() > 2)) {
    throw Error(ErrorKind::kWitnessUnsupported, "witness search is only supported for g <= 2");
  }
  result.isomorphic = q1.dimension() == q2.dimension() && arf_basis(q1) == arf_basis(q2);
  if (!want_witness || !result.isomorphic) return result;
  std::vector<F2Matrix> found;
  search_isometries(q1.pairing(), q2.pairing(), &q1, &q2, true, found);
  if (found.empty()) {
    throw Error(ErrorKind::kInternalInvariant, "equal Arf invariants but no isometry found");
  }
  result.witness = std::move(found.front());
  return result;
}

}  // namespace spinsurf
