// Text, LaTeX and JSON renderings of exact values.
//
// JSON schemas:
//   Rational: ["num", "den"]   decimal strings, lowest terms, den > 0
//   RatPoly:  {"var": "n"|"N"|"u", "r": int, "coeffs": [Rational, ...]}
//             coefficients in ascending degree, no trailing zeros

#ifndef HYPERSUM_SERIALIZE_HPP
#define HYPERSUM_SERIALIZE_HPP

#include "hypersum/exactnum.hpp"
#include "hypersum/polyring.hpp"

#include <json.hpp>

#include <string>

namespace hypersum {

using Json = nlohmann::ordered_json;

Json to_json(const Rational &q);
Rational rational_from_json(const Json &j);

Json to_json(const RatPoly &p);
RatPoly ratpoly_from_json(const Json &j);

/// "N^4/99 - 35*N^2/198 + 7/16"-style rendering, descending degree.
std::string to_text(const RatPoly &p);
/// Variable name as it appears in text: "n", "N" or "u".
std::string variable_symbol(const Variable &v);

std::string to_latex(const Rational &q);
/// Descending degree with explicit \frac coefficients, e.g.
/// "\frac{1}{99} N_{7}^{4} - \frac{35}{198} N_{7}^{2} + \frac{7}{16}".
std::string to_latex(const RatPoly &p);

} // namespace hypersum

#endif
