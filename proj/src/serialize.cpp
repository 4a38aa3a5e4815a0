#include "hypersum/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hypersum {

Json to_json(const Rational &q) { return Json::array({q.num().get_str(), q.den().get_str()}); }

Rational rational_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw std::invalid_argument("Rational JSON must be [\"num\", \"den\"]");
  Rational num = Rational::parse(j[0].get<std::string>());
  Rational den = Rational::parse(j[1].get<std::string>());
  if (!num.is_integer() || !den.is_integer() || den.sign() <= 0)
    throw std::invalid_argument("Rational JSON needs an integer numerator and positive denominator");
  Rational q(num.num(), den.num());
  if (q.num() != num.num() || q.den() != den.num())
    throw std::invalid_argument("Rational JSON is not in lowest terms");
  return q;
}

Json to_json(const RatPoly &p) {
  Json coeffs = Json::array();
  for (const auto &c : p.coeffs())
    coeffs.push_back(to_json(c));
  return Json{{"var", to_string(p.var().tag)}, {"r", p.var().r}, {"coeffs", coeffs}};
}

RatPoly ratpoly_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("r") || !j.contains("coeffs"))
    throw std::invalid_argument("RatPoly JSON needs var, r and coeffs");
  if (!j["var"].is_string() || !j["r"].is_number_integer() || !j["coeffs"].is_array())
    throw std::invalid_argument("RatPoly JSON has mistyped fields");
  Variable v{var_tag_from_string(j["var"].get<std::string>()), j["r"].get<long>()};
  if (v.r < 0)
    throw std::invalid_argument("RatPoly JSON: r must be non-negative");
  std::vector<Rational> cs;
  for (const auto &c : j["coeffs"])
    cs.push_back(rational_from_json(c));
  if (!cs.empty() && cs.back().is_zero())
    throw std::invalid_argument("RatPoly JSON has a trailing zero coefficient");
  return RatPoly(v, std::move(cs));
}

std::string variable_symbol(const Variable &v) { return to_string(v.tag); }

std::string to_text(const RatPoly &p) {
  if (p.is_zero())
    return "0";
  const std::string x = variable_symbol(p.var());
  std::ostringstream os;
  bool first = true;
  auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational &c = cs[k];
    if (c.is_zero())
      continue;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const Integer num = abs(c.num());
    const Integer den = c.den();
    std::string power = k == 0 ? "" : (k == 1 ? x : x + "^" + std::to_string(k));
    if (k == 0)
      os << num.get_str();
    else if (num == 1)
      os << power;
    else
      os << num.get_str() << "*" << power;
    if (den != 1)
      os << "/" << den.get_str();
  }
  return os.str();
}

std::string to_latex(const Rational &q) {
  if (q.is_integer())
    return q.num().get_str();
  std::string body = "\\frac{" + Integer(abs(q.num())).get_str() + "}{" + q.den().get_str() + "}";
  return q.sign() < 0 ? "-" + body : body;
}

std::string to_latex(const RatPoly &p) {
  if (p.is_zero())
    return "0";
  std::string x = variable_symbol(p.var());
  if (p.var().tag == VarTag::N)
    x = "N_{" + std::to_string(p.var().r) + "}";
  std::ostringstream os;
  bool first = true;
  auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational &c = cs[k];
    if (c.is_zero())
      continue;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const Rational a = c.abs();
    std::string power = k == 0 ? "" : (k == 1 ? x : x + "^{" + std::to_string(k) + "}");
    if (k == 0)
      os << to_latex(a);
    else if (a == Rational(1))
      os << power;
    else
      os << to_latex(a) << " " << power;
  }
  return os.str();
}

} // namespace hypersum
