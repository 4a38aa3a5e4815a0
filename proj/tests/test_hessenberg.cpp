#include "oracles.hpp"

#include "hypersum/hessenberg.hpp"

#include <doctest.h>

using namespace hypersum;
using R = Rational;

namespace {

std::vector<std::vector<RatPoly>> dense(const PolyHessenberg &h) {
  std::vector<std::vector<RatPoly>> a(h.order());
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j)
      a[i].push_back(h.at(i, j));
  return a;
}

RatPoly naive_det(const PolyHessenberg &h) {
  const Variable v = h.zero().var();
  return oracle::cofactor_det(dense(h), RatPoly(v), RatPoly::constant(v, R(1)));
}

} // namespace

TEST_CASE("build_H small shapes") {
  CHECK(build_H(1, 4).order() == 0);
  CHECK(det(build_H(1, 4)) == RatPoly::constant({VarTag::N, 4}, R(1)));
  for (long r = 0; r <= 6; ++r) {
    const PolyHessenberg h = build_H(3, r);
    const Variable v{VarTag::N, r};
    REQUIRE(h.order() == 2);
    CHECK(h.at(0, 0) == RatPoly::monomial(v, 1, R(-2)));
    CHECK(h.at(0, 1) == RatPoly::constant(v, R(r + 2)));
    CHECK(h.at(1, 0) == RatPoly::constant(v, R(r, 2)));
    CHECK(h.at(1, 1) == RatPoly::monomial(v, 1, R(-3)));
  }
  CHECK_THROWS(build_H(0, 1));
}

TEST_CASE("entries above the superdiagonal cannot be set") {
  HessenbergMatrix<R> h(3, R(0));
  CHECK_NOTHROW(h.set(0, 1, R(1)));
  CHECK_THROWS_AS(h.set(0, 2, R(1)), std::out_of_range);
  CHECK_THROWS_AS(h.at(3, 0), std::out_of_range);
}

TEST_CASE("det H_m^(0) closed form") {
  for (long m = 2; m <= 8; ++m) {
    R c(rising_factorial(2, m - 1));
    if ((m - 1) % 2)
      c = -c;
    CHECK(det(build_H(m, 0)) == RatPoly::monomial({VarTag::N, 0}, static_cast<std::size_t>(m - 1), c));
  }
}

TEST_CASE("det H_5^(7)") {
  const RatPoly g({VarTag::N, 7}, {R(7, 16), R(0), R(-35, 198), R(0), R(1, 99)});
  CHECK(det(build_H(5, 7)) == g * R(11880));
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(31337);
  const Variable v{VarTag::N, 3};
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 6;
    PolyHessenberg h(k, RatPoly(v));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j <= std::min(i + 1, k - 1); ++j)
        h.set(i, j, oracle::random_poly(rng, v, 2, 5));
    CHECK(det(h) == naive_det(h));
  }
}

TEST_CASE("determinant agrees with cofactor expansion on build_H") {
  for (long m = 1; m <= 7; ++m)
    for (long r = 0; r <= 4; ++r)
      CHECK(det(build_H(m, r)) == naive_det(build_H(m, r)));
}

TEST_CASE("degree and leading coefficient of det H") {
  for (long m = 1; m <= 9; ++m)
    for (long r = 0; r <= 6; ++r) {
      const RatPoly d = det(build_H(m, r));
      CHECK(d.degree() == static_cast<std::size_t>(m - 1));
      R lead(factorial(m));
      if ((m - 1) % 2)
        lead = -lead;
      CHECK(d.leading() == lead);
    }
}

TEST_CASE("scaling a row scales the determinant") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 1 + rng() % 5;
    HessenbergMatrix<R> h(k, R(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j <= std::min(i + 1, k - 1); ++j)
        h.set(i, j, R(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1));
    const std::size_t row = rng() % k;
    const R c(static_cast<long>(rng() % 7) - 3, 2);
    HessenbergMatrix<R> scaled = h;
    for (std::size_t j = 0; j <= std::min(row + 1, k - 1); ++j)
      scaled.set(row, j, h.at(row, j) * c);
    CHECK(det(scaled) == det(h) * c);
  }
}

TEST_CASE("numeric spot evaluation matches the polynomial") {
  for (long m = 1; m <= 6; ++m)
    for (long r = 0; r <= 4; ++r)
      for (long n = 0; n <= 5; ++n) {
        const R big_n = R(n) + R(r, 2);
        CHECK(det(evaluate_at(build_H(m, r), big_n)) == det(build_H(m, r))(big_n));
      }
}
