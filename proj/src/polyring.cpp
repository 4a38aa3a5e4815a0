#include "hypersum/polyring.hpp"

#include <algorithm>

namespace hypersum {

std::string to_string(VarTag tag) {
  switch (tag) {
  case VarTag::n: return "n";
  case VarTag::N: return "N";
  case VarTag::u: return "u";
  }
  return "?";
}

VarTag var_tag_from_string(const std::string &s) {
  if (s == "n") return VarTag::n;
  if (s == "N") return VarTag::N;
  if (s == "u") return VarTag::u;
  throw std::invalid_argument("unknown variable tag '" + s + "'");
}

std::string to_string(Parity p) {
  switch (p) {
  case Parity::even: return "even";
  case Parity::odd: return "odd";
  case Parity::neither: return "neither";
  }
  return "?";
}

namespace {

Variable normalized(Variable v) {
  if (v.tag == VarTag::n)
    v.r = 0;
  return v;
}

} // namespace

RatPoly::RatPoly(Variable var) : var_(normalized(var)) {}

RatPoly::RatPoly(Variable var, std::vector<Rational> coeffs)
    : var_(normalized(var)), coeffs_(std::move(coeffs)) {
  trim();
}

RatPoly RatPoly::constant(Variable var, Rational c) {
  return RatPoly(var, {std::move(c)});
}

RatPoly RatPoly::monomial(Variable var, std::size_t k, Rational c) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return RatPoly(var, std::move(v));
}

RatPoly RatPoly::linear(Variable var, Rational c) {
  return RatPoly(var, {std::move(c), Rational(1)});
}

Rational RatPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

std::optional<std::size_t> RatPoly::degree() const {
  if (coeffs_.empty())
    return std::nullopt;
  return coeffs_.size() - 1;
}

Rational RatPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

void RatPoly::require_same_frame(const RatPoly &o, const char *op) const {
  if (var_ != o.var_)
    throw FrameMismatch(std::string("RatPoly ") + op + ": mixing " + to_string(var_.tag) +
                        "(r=" + std::to_string(var_.r) + ") with " + to_string(o.var_.tag) +
                        "(r=" + std::to_string(o.var_.r) + ")");
}

RatPoly &RatPoly::operator+=(const RatPoly &o) {
  require_same_frame(o, "add");
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly &RatPoly::operator-=(const RatPoly &o) {
  require_same_frame(o, "sub");
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly &a, const RatPoly &b) {
  a.require_same_frame(b, "mul");
  if (a.is_zero() || b.is_zero())
    return RatPoly(a.var_);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(a.var_, std::move(out));
}

RatPoly &RatPoly::operator*=(const RatPoly &o) { return *this = *this * o; }

RatPoly &RatPoly::operator*=(const Rational &c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto &x : out.coeffs_)
    x = -x;
  return out;
}

Rational RatPoly::operator()(const Rational &x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

RatPoly scale(const RatPoly &p, const Rational &c) { return p * c; }

Rational eval(const RatPoly &p, const Rational &x) { return p(x); }

RatPoly shift(const RatPoly &p, const Rational &c) {
  // Horner in the polynomial ring: p(x + c) = (...(a_d (x+c) + a_{d-1})(x+c) ...)
  const RatPoly step = RatPoly::linear(p.var(), c);
  RatPoly acc(p.var());
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * step + RatPoly::constant(p.var(), *it);
  return acc;
}

Parity parity(const RatPoly &p) {
  bool odd_zero = true, even_zero = true;
  auto cs = p.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero())
      continue;
    (k % 2 == 0 ? even_zero : odd_zero) = false;
  }
  if (odd_zero)
    return Parity::even;
  if (even_zero)
    return Parity::odd;
  return Parity::neither;
}

RatPoly n_to_N(const RatPoly &p, long r) {
  if (p.var().tag != VarTag::n)
    throw FrameMismatch("n_to_N: polynomial is not in n");
  return shift(p, Rational(-r, 2)).retagged({VarTag::N, r});
}

RatPoly N_to_n(const RatPoly &p) {
  if (p.var().tag != VarTag::N)
    throw FrameMismatch("N_to_n: polynomial is not in N");
  return shift(p, Rational(p.var().r, 2)).retagged({VarTag::n, 0});
}

RatPoly to_u_form(const RatPoly &p) {
  if (p.var().tag != VarTag::N)
    throw FrameMismatch("to_u_form: polynomial is not in N");
  if (parity(p) != Parity::even)
    throw std::invalid_argument("to_u_form: polynomial in N is not even");
  const long r = p.var().r;
  const Variable u{VarTag::u, r};
  // Substitute N^2 = u + r^2/4 into sum_k a_{2k} (N^2)^k.
  const RatPoly n_squared = RatPoly::linear(u, Rational(r * r, 4));
  RatPoly acc(u);
  auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (k % 2 == 1)
      continue;
    acc = acc * n_squared + RatPoly::constant(u, cs[k]);
  }
  return acc;
}

RatPoly from_u_form(const RatPoly &p) {
  if (p.var().tag != VarTag::u)
    throw FrameMismatch("from_u_form: polynomial is not in u");
  const long r = p.var().r;
  const Variable big_n{VarTag::N, r};
  const RatPoly u_of_n = RatPoly::monomial(big_n, 2) - RatPoly::constant(big_n, Rational(r * r, 4));
  RatPoly acc(big_n);
  auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * u_of_n + RatPoly::constant(big_n, *it);
  return acc;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b) {
  if (b.is_zero())
    throw std::domain_error("divmod: division by the zero polynomial");
  if (a.var() != b.var())
    throw FrameMismatch("divmod: operands in different frames");
  RatPoly rem = a;
  const std::size_t db = *b.degree();
  if (a.is_zero() || *a.degree() < db)
    return {RatPoly(a.var()), rem};
  std::vector<Rational> quot(*a.degree() - db + 1);
  const Rational lead = b.leading();
  while (!rem.is_zero() && *rem.degree() >= db) {
    const std::size_t shift_by = *rem.degree() - db;
    Rational factor = rem.leading() / lead;
    quot[shift_by] = factor;
    rem -= RatPoly::monomial(a.var(), shift_by, factor) * b;
  }
  return {RatPoly(a.var(), std::move(quot)), rem};
}

ContentSplit primitive_part(const RatPoly &p) {
  if (p.is_zero())
    return {Rational(), p};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto &c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (p.leading().sign() < 0)
    content = -content;
  return {content, p * (Rational(1) / content)};
}

} // namespace hypersum
