#include "hypersum/hessenberg.hpp"

namespace hypersum {

PolyHessenberg build_H(long m, long r) {
  if (m < 1)
    throw std::domain_error("build_H: m must be at least 1");
  if (r < 0)
    throw std::domain_error("build_H: r must be non-negative");
  const Variable big_n{VarTag::N, r};
  const auto order = static_cast<std::size_t>(m - 1);
  PolyHessenberg h(order, RatPoly(big_n));
  for (std::size_t row = 1; row <= order; ++row) {
    const long i = static_cast<long>(row);
    h.set(row - 1, row - 1, RatPoly::monomial(big_n, 1, Rational(-(i + 1))));
    if (row < order)
      h.set(row - 1, row, RatPoly::constant(big_n, Rational(r + i + 1)));
    for (std::size_t col = 1; col < row; ++col) {
      const long d = i + 1 - static_cast<long>(col);
      h.set(row - 1, col - 1,
            RatPoly::constant(big_n, Rational(r) * Rational(binomial(i + 1, d)) * bernoulli(d)));
    }
  }
  return h;
}

RatPoly det(const PolyHessenberg &h) {
  const Variable v = h.zero().var();
  return hessenberg_det(h, RatPoly::constant(v, Rational(1)));
}

HessenbergMatrix<Rational> evaluate_at(const PolyHessenberg &h, const Rational &big_n) {
  return h.map([&](const RatPoly &p) { return p(big_n); });
}

Rational det(const HessenbergMatrix<Rational> &h) { return hessenberg_det(h, Rational(1)); }

} // namespace hypersum
