#include "spinsurf/json_io.hpp"

#include "spinsurf/errors.hpp"

namespace spinsurf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json to_json(const Rational& r) { return Json{{"num", to_string(r.num())}, {"den", to_string(r.den())}}; }

Json to_json(const ModZ& v) {
  Json j = to_json(v.residue());
  if (const auto alias = v.alias()) j["alias"] = to_json(*alias);
  return j;
}

Json to_json(const IntPolynomial& p) {
  Json terms = Json::array();
  // Same order as str(): decreasing exponent vectors.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json exps = Json::object();
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] != 0) exps[p.generators()[i]] = it->first[i];
    }
    terms.push_back(Json{{"coeff", to_string(it->second)}, {"exponents", exps}});
  }
  return terms;
}

Json to_json(const QuadraticForm& q) { return Json{{"g", q.genus()}, {"basis_values", q.bitstring()}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object()) {
    const Json& num = field(j, "num");
    const Json& den = field(j, "den");
    if (!num.is_string() || !den.is_string()) bad("rational num/den must be decimal strings");
    return Rational(parse_bigint(num.get<std::string>()), parse_bigint(den.get<std::string>()));
  }
  bad("expected a rational");
}

IntPolynomial polynomial_from_json(const Json& j, const std::vector<std::string>& generators) {
  if (!j.is_array()) bad("polynomial must be a list of terms");
  IntPolynomial p(generators);
  for (const Json& term : j) {
    const Json& coeff = field(term, "coeff");
    if (!coeff.is_string()) bad("coefficient must be a decimal string");
    IntPolynomial::Exponents exps(generators.size(), 0);
    const Json& powers = field(term, "exponents");
    if (!powers.is_object()) bad("exponents must be an object");
    for (const auto& [name, power] : powers.items()) {
      const std::int64_t e = as_int(power, "exponent");
      if (e < 0) bad("exponents must be nonnegative");
      exps.at(p.index_of(name)) += static_cast<int>(e);
    }
    p.add_term(exps, parse_bigint(coeff.get<std::string>()));
  }
  return p;
}

QuadraticForm form_from_json(const Json& j) {
  const Json& bits = field(j, "basis_values");
  if (!bits.is_string()) bad("basis_values must be a bitstring");
  return QuadraticForm::from_bitstring(static_cast<int>(as_int(field(j, "g"), "g")), bits.get<std::string>());
}

SeifertDocument seifert_document_from_json(const Json& j) {
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) bad("pairs must be a list");
  std::vector<FiberPair> fibers;
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2) bad("each pair must be [a, b]");
    fibers.push_back({as_int(p[0], "a_j"), as_int(p[1], "b_j")});
  }
  SeifertDocument doc{SeifertData(std::move(fibers)), false, {}};
  if (!j.contains("N")) return doc;

  doc.has_representation = true;
  doc.spec.dimension = as_int(j.at("N"), "N");
  if (doc.spec.dimension < 1) throw Error(ErrorKind::kInvalidArgument, "N must be positive");
  const Json& center = field(j, "center");
  if (center == "trivial") {
    doc.spec.center = CentralBehavior::trivial();
  } else if (center.is_object() && center.contains("scalar_exponent")) {
    doc.spec.center = CentralBehavior::scalar(as_int(center.at("scalar_exponent"), "scalar_exponent"));
  } else {
    bad("center must be \"trivial\" or {\"scalar_exponent\": r}");
  }
  const std::int64_t r_h = doc.spec.center.scalar_exponent.value_or(0);

  const Json& profiles = field(j, "profiles");
  if (!profiles.is_array()) bad("profiles must be a list");
  for (const Json& p : profiles) {
    EigenvalueProfile profile;
    profile.fiber = static_cast<int>(as_int(field(p, "fiber"), "fiber"));
    const bool has_s = p.contains("s_values");
    if (has_s == p.contains("exponents")) bad("each profile needs exactly one of s_values or exponents");
    if (has_s) {
      if (!p.at("s_values").is_array()) bad("s_values must be a list");
      for (const Json& s : p.at("s_values")) profile.s_values.push_back(rational_from_json(s));
    } else {
      if (profile.fiber < 1 || profile.fiber > static_cast<int>(doc.data.size())) {
        throw Error(ErrorKind::kProfileMismatch, "profile fiber index " + std::to_string(profile.fiber) +
                                                     " is invalid");
      }
      if (!p.at("exponents").is_array()) bad("exponents must be a list");
      std::vector<std::int64_t> exps;
      for (const Json& t : p.at("exponents")) exps.push_back(as_int(t, "exponent"));
      const FiberPair f = doc.data.pairs()[profile.fiber - 1];
      profile.s_values = s_from_exponents(f.a, f.b, doc.spec.dimension, r_h, exps);
    }
    doc.spec.profiles.push_back(std::move(profile));
  }
  return doc;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace spinsurf
