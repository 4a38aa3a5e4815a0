// Dense univariate polynomials over Rational.
//
// A polynomial carries the variable it is written in: n, the centered
// variable N = n + r/2, or u = n(n + r) (so that N^2 = u + r^2/4). Ring
// operations reject operands from different frames; conversions between
// frames are explicit.

#ifndef HYPERSUM_POLYRING_HPP
#define HYPERSUM_POLYRING_HPP

#include "hypersum/exactnum.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

enum class VarTag { n, N, u };

/// Variable of a polynomial. `r` is only meaningful for N and u and is
/// normalized to 0 for n.
struct Variable {
  VarTag tag = VarTag::n;
  long r = 0;

  friend bool operator==(const Variable &, const Variable &) = default;
};

std::string to_string(VarTag tag);
VarTag var_tag_from_string(const std::string &s);

/// Thrown when two polynomials in different frames meet in one operation.
class FrameMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd, neither };

std::string to_string(Parity p);

class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(Variable var);
  RatPoly(Variable var, std::vector<Rational> coeffs);

  static RatPoly constant(Variable var, Rational c);
  /// c * x^k
  static RatPoly monomial(Variable var, std::size_t k, Rational c = Rational(1));
  /// x + c
  static RatPoly linear(Variable var, Rational c);

  const Variable &var() const { return var_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Rational coeff(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  Rational leading() const;

  RatPoly &operator+=(const RatPoly &o);
  RatPoly &operator-=(const RatPoly &o);
  RatPoly &operator*=(const RatPoly &o);
  RatPoly &operator*=(const Rational &c);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }
  friend RatPoly operator*(const RatPoly &a, const RatPoly &b);
  friend RatPoly operator*(RatPoly a, const Rational &c) { return a *= c; }
  friend RatPoly operator*(const Rational &c, RatPoly a) { return a *= c; }

  /// Same frame and same coefficients.
  friend bool operator==(const RatPoly &a, const RatPoly &b) = default;

  /// Horner evaluation.
  Rational operator()(const Rational &x) const;

  /// Relabels the variable without touching coefficients.
  RatPoly retagged(Variable var) const { return RatPoly(var, coeffs_); }

private:
  void trim();
  void require_same_frame(const RatPoly &o, const char *op) const;

  Variable var_;
  std::vector<Rational> coeffs_;
};

RatPoly scale(const RatPoly &p, const Rational &c);
Rational eval(const RatPoly &p, const Rational &x);

/// p(x + c), expanded. Keeps the frame of p.
RatPoly shift(const RatPoly &p, const Rational &c);

Parity parity(const RatPoly &p);

/// Rewrites a polynomial in n as one in N_r = n + r/2 (substitutes n = N - r/2).
RatPoly n_to_N(const RatPoly &p, long r);
/// Inverse of n_to_N.
RatPoly N_to_n(const RatPoly &p);

/// Rewrites an even polynomial in N_r as a polynomial in u = n(n + r), using
/// N^2 = u + r^2/4. Throws std::invalid_argument if p is not even or not in N.
RatPoly to_u_form(const RatPoly &p);
/// Substitutes u = N^2 - r^2/4 back.
RatPoly from_u_form(const RatPoly &p);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly &a, const RatPoly &b);

/// Integer-coefficient primitive part: p = content * primitive, where the
/// primitive part has coprime integer coefficients and a positive leading
/// coefficient. content is 0 and primitive is zero for the zero polynomial.
struct ContentSplit {
  Rational content;
  RatPoly primitive;
};
ContentSplit primitive_part(const RatPoly &p);

} // namespace hypersum

#endif
