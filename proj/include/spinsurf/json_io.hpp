#pragma once

// JSON shapes shared by the CLI and the Python bindings. Rationals and
// coefficients are always decimal strings.

#include <string>
#include <vector>

#include "json.hpp"

#include "spinsurf/f2_forms.hpp"
#include "spinsurf/polynomial.hpp"
#include "spinsurf/rational.hpp"
#include "spinsurf/seifert.hpp"

namespace spinsurf {

using Json = nlohmann::ordered_json;

/// {"num": "p", "den": "q"}
Json to_json(const Rational& r);
/// Canonical residue in [0, 1) as {"num", "den"}, plus "alias" when the
/// residue exceeds 1/2.
Json to_json(const ModZ& v);
/// [{"coeff": "c", "exponents": {"gen": power}}, ...]; zero powers omitted.
Json to_json(const IntPolynomial& p);
/// {"g": g, "basis_values": "0101"}
Json to_json(const QuadraticForm& q);

/// Accepts {"num", "den"} objects, "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
IntPolynomial polynomial_from_json(const Json& j, const std::vector<std::string>& generators);
QuadraticForm form_from_json(const Json& j);

/// A parsed Seifert input document.
struct SeifertDocument {
  SeifertData data = SeifertData({});
  bool has_representation = false;  // "N" present
  RepSpec spec;
};

/// Reads "pairs", and when "N" is present also "center" and "profiles".
/// Exponent profiles are lifted with s_from_exponents.
SeifertDocument seifert_document_from_json(const Json& j);

Json parse_json_text(const std::string& text);

}  // namespace spinsurf
